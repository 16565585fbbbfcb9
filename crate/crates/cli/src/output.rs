//! Reports and their two renderings. Both are produced from the same record
//! list; only the human form carries timings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use sact::{AxiomReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Records,
}

/// One named group of findings.
#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub subject: String,
    pub info: Vec<(String, String)>,
    pub report: AxiomReport,
    pub elapsed: Duration,
}

impl Section {
    pub fn new(name: impl Into<String>, subject: impl Into<String>) -> Self {
        Section {
            name: name.into(),
            subject: subject.into(),
            info: Vec::new(),
            report: AxiomReport::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl ToString) {
        self.info.push((key.into(), value.to_string()));
    }

    pub fn verdict(&self) -> Verdict {
        self.report.verdict()
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: String,
    pub sections: Vec<Section>,
}

/// A machine-readable line. Field order is the serialisation order.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Record {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub key: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

impl Record {
    fn new(suite: &str, kind: &'static str) -> Self {
        Record {
            suite: suite.to_string(),
            section: None,
            subject: None,
            kind,
            anchor: None,
            key: None,
            value: None,
            verdict: None,
        }
    }
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), sections: Vec::new() }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn verdict(&self) -> Verdict {
        self.sections.iter().fold(Verdict::Pass, |v, s| v.and(s.verdict()))
    }

    fn section_records(&self, s: &Section) -> Vec<Record> {
        let base = |kind| {
            let mut r = Record::new(&self.suite, kind);
            r.section = Some(s.name.clone());
            r.subject = (!s.subject.is_empty()).then(|| s.subject.clone());
            r
        };
        let mut out = Vec::new();
        for (k, v) in &s.info {
            let mut r = base("info");
            r.key = Some(k.clone());
            r.value = Some(v.clone());
            out.push(r);
        }
        for w in &s.report.witnesses {
            let mut r = base("witness");
            r.anchor = Some(w.property.clone());
            r.value = Some(w.data.clone());
            out.push(r);
        }
        for sk in &s.report.skipped {
            let mut r = base("skip");
            r.anchor = Some(sk.check.clone());
            r.value = Some(sk.reason.clone());
            out.push(r);
        }
        for n in &s.report.notes {
            let mut r = base("note");
            r.value = Some(n.clone());
            out.push(r);
        }
        let mut r = base("verdict");
        r.verdict = Some(s.verdict());
        out.push(r);
        out
    }

    fn summary(&self) -> Record {
        let mut r = Record::new(&self.suite, "summary");
        r.key = Some("sections".into());
        r.value = Some(self.sections.len().to_string());
        r.verdict = Some(self.verdict());
        r
    }

    pub fn records(&self) -> Vec<Record> {
        let mut out: Vec<Record> = self.sections.iter().flat_map(|s| self.section_records(s)).collect();
        out.push(self.summary());
        out
    }

    /// One JSON object per line.
    pub fn to_records(&self) -> String {
        let mut s = String::new();
        for r in self.records() {
            s.push_str(&serde_json::to_string(&r).expect("records serialise"));
            s.push('\n');
        }
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let mut records = self.section_records(s);
            // headline first, details indented below it
            let verdict = records.pop().expect("every section ends in a verdict");
            human_line(&mut out, &verdict, s.elapsed);
            for r in &records {
                human_line(&mut out, r, s.elapsed);
            }
        }
        let summary = self.summary();
        let _ = writeln!(
            out,
            "{}: {} ({} sections)",
            self.suite,
            self.verdict().as_str().to_uppercase(),
            summary.value.unwrap_or_default()
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.to_human(),
            Format::Records => self.to_records(),
        }
    }
}

fn human_line(out: &mut String, r: &Record, elapsed: Duration) {
    let value = r.value.as_deref().unwrap_or("");
    let _ = match r.kind {
        "info" => writeln!(out, "  {}: {}", r.key.as_deref().unwrap_or(""), value),
        "witness" => writeln!(out, "  FAIL [{}] {}", r.anchor.as_deref().unwrap_or(""), value),
        "skip" => writeln!(out, "  SKIP [{}] {}", r.anchor.as_deref().unwrap_or(""), value),
        "note" => writeln!(out, "  note: {value}"),
        _ => {
            let subject = r.subject.as_deref().map(|s| format!(" {s}")).unwrap_or_default();
            writeln!(
                out,
                "[{}] {}{} ({:.1?})",
                r.verdict.map_or("", |v| v.as_str()),
                r.section.as_deref().unwrap_or(""),
                subject,
                elapsed
            )
        }
    };
}
