//! Structured outcomes of the axiom and closure checkers.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// Nothing failed, but some check was skipped for size reasons.
    Partial,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Partial => "partial",
            Verdict::Fail => "fail",
        }
    }

    /// The worse of two verdicts.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }
}

/// A counterexample, rendered in the canonical act/partition syntax.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub property: String,
    pub data: String,
}

/// A check that was not run, and the bound that stopped it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Skip {
    pub check: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub witnesses: Vec<Witness>,
    pub skipped: Vec<Skip>,
    /// Conventions and formalisation choices the verdict depends on.
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn verdict(&self) -> Verdict {
        if !self.witnesses.is_empty() {
            Verdict::Fail
        } else if !self.skipped.is_empty() {
            Verdict::Partial
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn fail(&mut self, property: impl Into<String>, data: impl Into<String>) {
        self.witnesses.push(Witness { property: property.into(), data: data.into() });
    }

    pub fn skip(&mut self, check: impl Into<String>, reason: impl Into<String>) {
        self.skipped.push(Skip { check: check.into(), reason: reason.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.witnesses.extend(other.witnesses);
        self.skipped.extend(other.skipped);
        for n in other.notes {
            self.note(n);
        }
    }

    /// Witnesses for one property only.
    pub fn witnesses_for<'a>(&'a self, property: &'a str) -> impl Iterator<Item = &'a Witness> {
        self.witnesses.iter().filter(move |w| w.property == property)
    }

    pub fn holds(&self, property: &str) -> bool {
        self.witnesses_for(property).next().is_none()
    }
}
