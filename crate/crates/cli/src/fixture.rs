//! The `.sact` fixture format.
//!
//! ```text
//! monoid S2
//! elements 2
//! identity 0
//! table
//! 0 1
//! 1 1
//!
//! act K2 over S2
//! size 2
//! action
//! 0 1
//! 0 0
//!
//! class constants = predicate constant-action
//! class picked = acts A2.0 K2
//! radical r over S2/2
//! A0.0 : partition {}
//! A1.0 : partition {0}
//! A2.0 : partition {0 1}
//! A2.1 : partition {0 | 1}
//! torsion tau = (picked, constants)
//! ```
//!
//! `#` starts a comment. Blank lines are ignored. Numbers are base-10.

use std::fmt;

use sact::{Act, Monoid, Partition, Predicate, RadicalAssignment, Universe};

/// A problem in a fixture, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub file: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}: {}", self.file, self.line, self.column, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidDef {
    pub name: String,
    pub line: usize,
    pub identity: usize,
    pub rows: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActDef {
    pub name: String,
    pub line: usize,
    pub monoid: String,
    pub size: usize,
    pub rows: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Acts(Vec<String>),
    Predicate(Predicate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDef {
    pub name: String,
    pub line: usize,
    pub spec: ClassSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalDef {
    pub name: String,
    pub line: usize,
    pub monoid: String,
    pub max_size: usize,
    /// `(act name, value, line)`.
    pub values: Vec<(String, Partition, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionDef {
    pub name: String,
    pub line: usize,
    pub torsion: String,
    pub torsion_free: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Fixtures {
    pub monoids: Vec<MonoidDef>,
    pub acts: Vec<ActDef>,
    pub classes: Vec<ClassDef>,
    pub radicals: Vec<RadicalDef>,
    pub torsions: Vec<TorsionDef>,
}

impl Fixtures {
    pub fn extend(&mut self, other: Fixtures) {
        self.monoids.extend(other.monoids);
        self.acts.extend(other.acts);
        self.classes.extend(other.classes);
        self.radicals.extend(other.radicals);
        self.torsions.extend(other.torsions);
    }
}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { column: line[..s].chars().count() + 1, text: &line[s..i] });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { column: line[..s].chars().count() + 1, text: &line[s..] });
    }
    out
}

type Fail = (usize, usize, String);

fn number(line: usize, t: &Token<'_>) -> Result<usize, Fail> {
    if t.text.is_empty() || !t.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err((line, t.column, format!("`{}` is not a base-10 index", t.text)));
    }
    t.text.parse().map_err(|_| (line, t.column, format!("`{}` is out of range", t.text)))
}

fn row(line: usize, toks: &[Token<'_>], arity: usize, what: &str, k: usize) -> Result<Vec<usize>, Fail> {
    if toks.len() != arity {
        let column = toks.get(arity).map_or(toks.last().map_or(1, |t| t.column), |t| t.column);
        return Err((line, column, format!("{what} row {k} has {} entries, expected {arity}", toks.len())));
    }
    toks.iter().map(|t| number(line, t)).collect()
}

fn expect_keyword<'a>(line: usize, toks: &'a [Token<'a>], key: &str, args: usize) -> Result<&'a [Token<'a>], Fail> {
    match toks.first() {
        Some(t) if t.text == key && toks.len() == args + 1 => Ok(&toks[1..]),
        Some(t) if t.text == key => Err((line, t.column, format!("`{key}` takes {args} argument(s)"))),
        Some(t) => Err((line, t.column, format!("expected `{key}`, found `{}`", t.text))),
        None => Err((line, 1, format!("expected `{key}`"))),
    }
}

const HEADERS: [&str; 5] = ["monoid", "act", "class", "radical", "torsion"];

fn name_ok(line: usize, t: &Token<'_>) -> Result<String, Fail> {
    let ok = !t.text.is_empty() && t.text.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
    if ok {
        Ok(t.text.to_string())
    } else {
        Err((line, t.column, format!("invalid name `{}`", t.text)))
    }
}

/// Parses one fixture file, continuing past broken blocks so that every
/// problem is reported.
pub fn parse(file: &str, source: &str) -> (Fixtures, Vec<Diagnostic>) {
    let lines: Vec<(usize, &str)> = source
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let mut fx = Fixtures::default();
    let mut diags = Vec::new();
    let mut k = 0;
    while k < lines.len() {
        let start = k;
        k += 1;
        while k < lines.len() && !is_header(lines[k].1) {
            k += 1;
        }
        if let Err((line, column, message)) = parse_block(&lines[start..k], &mut fx) {
            diags.push(Diagnostic { file: file.to_string(), line, column, message });
        }
    }
    (fx, diags)
}

fn is_header(line: &str) -> bool {
    line.split_whitespace().next().is_some_and(|w| HEADERS.contains(&w))
}

fn parse_block(block: &[(usize, &str)], fx: &mut Fixtures) -> Result<(), Fail> {
    let (line, text) = block[0];
    let toks = tokens(text);
    let body = &block[1..];
    match toks[0].text {
        "monoid" => fx.monoids.push(parse_monoid(line, &toks, body)?),
        "act" => fx.acts.push(parse_act(line, &toks, body)?),
        "class" => fx.classes.push(parse_class(line, text, &toks, body)?),
        "radical" => fx.radicals.push(parse_radical(line, &toks, body)?),
        "torsion" => fx.torsions.push(parse_torsion(line, text, &toks, body)?),
        other => {
            return Err((
                line,
                toks[0].column,
                format!("expected one of monoid, act, class, radical, torsion; found `{other}`"),
            ))
        }
    }
    Ok(())
}

fn no_body(body: &[(usize, &str)], what: &str) -> Result<(), Fail> {
    match body.first() {
        Some(&(line, _)) => Err((line, 1, format!("unexpected line after {what}"))),
        None => Ok(()),
    }
}

fn parse_monoid(line: usize, toks: &[Token<'_>], body: &[(usize, &str)]) -> Result<MonoidDef, Fail> {
    let args = expect_keyword(line, toks, "monoid", 1)?;
    let name = name_ok(line, &args[0])?;
    let mut it = body.iter();
    let mut next = |what: &str| {
        it.next()
            .map(|&(l, t)| (l, tokens(t)))
            .ok_or_else(|| (line, 1, format!("monoid `{name}` ends before `{what}`")))
    };
    let (l, t) = next("elements")?;
    let n = number(l, &expect_keyword(l, &t, "elements", 1)?[0])?;
    if n == 0 {
        return Err((l, t[1].column, "a monoid needs at least one element".into()));
    }
    let (l, t) = next("identity")?;
    let identity = number(l, &expect_keyword(l, &t, "identity", 1)?[0])?;
    let (l, t) = next("table")?;
    expect_keyword(l, &t, "table", 0)?;
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (l, t) = next("table rows")?;
        rows.push(row(l, &t, n, "table", r)?);
    }
    no_body(&body[3 + n..], "the table")?;
    Ok(MonoidDef { name, line, identity, rows })
}

fn parse_act(line: usize, toks: &[Token<'_>], body: &[(usize, &str)]) -> Result<ActDef, Fail> {
    let args = expect_keyword(line, toks, "act", 3)?;
    let name = name_ok(line, &args[0])?;
    if args[1].text != "over" {
        return Err((line, args[1].column, format!("expected `over`, found `{}`", args[1].text)));
    }
    let monoid = name_ok(line, &args[2])?;
    let mut it = body.iter();
    let (l, t) = it.next().map(|&(l, t)| (l, tokens(t))).ok_or((line, 1, format!("act `{name}` has no `size`")))?;
    let size = number(l, &expect_keyword(l, &t, "size", 1)?[0])?;
    let (l, t) = it.next().map(|&(l, t)| (l, tokens(t))).ok_or((line, 1, format!("act `{name}` has no `action`")))?;
    expect_keyword(l, &t, "action", 0)?;
    let rows =
        it.enumerate().map(|(k, &(l, t))| row(l, &tokens(t), size, "action", k)).collect::<Result<Vec<_>, _>>()?;
    Ok(ActDef { name, line, monoid, size, rows })
}

fn parse_class(line: usize, text: &str, toks: &[Token<'_>], body: &[(usize, &str)]) -> Result<ClassDef, Fail> {
    no_body(body, "a class")?;
    if toks.len() < 4 || toks[2].text != "=" {
        return Err((line, 1, "expected `class <name> = acts ...` or `class <name> = predicate <id>`".into()));
    }
    let name = name_ok(line, &toks[1])?;
    let spec = match toks[3].text {
        "acts" => ClassSpec::Acts(toks[4..].iter().map(|t| name_ok(line, t)).collect::<Result<_, _>>()?),
        "predicate" if toks.len() == 5 => ClassSpec::Predicate(
            Predicate::parse(toks[4].text)
                .map_err(|_| (line, toks[4].column, format!("unknown class predicate `{}`", toks[4].text)))?,
        ),
        "predicate" => return Err((line, toks[3].column, "`predicate` takes one id".into())),
        other => {
            return Err((
                line,
                toks[3].column,
                format!("expected `acts` or `predicate`, found `{other}` in `{}`", text.trim()),
            ))
        }
    };
    Ok(ClassDef { name, line, spec })
}

fn parse_radical(line: usize, toks: &[Token<'_>], body: &[(usize, &str)]) -> Result<RadicalDef, Fail> {
    let args = expect_keyword(line, toks, "radical", 3)?;
    let name = name_ok(line, &args[0])?;
    if args[1].text != "over" {
        return Err((line, args[1].column, format!("expected `over`, found `{}`", args[1].text)));
    }
    let (monoid, max_size) =
        args[2].text.split_once('/').ok_or((line, args[2].column, "expected `<monoid>/<max size>`".to_string()))?;
    let monoid_tok = Token { column: args[2].column, text: monoid };
    let size_tok = Token { column: args[2].column + monoid.chars().count() + 1, text: max_size };
    let monoid = name_ok(line, &monoid_tok)?;
    let max_size = number(line, &size_tok)?;
    let mut values = Vec::with_capacity(body.len());
    for &(l, text) in body {
        let (act, value) = text.split_once(':').ok_or((l, 1, "expected `<act> : partition {...}`".to_string()))?;
        let act_tok = tokens(act);
        if act_tok.len() != 1 {
            return Err((l, 1, "expected a single act name before `:`".into()));
        }
        let act = name_ok(l, &act_tok[0])?;
        let column = text.find(':').map_or(1, |c| text[..c].chars().count() + 2);
        let p: Partition = value.trim().parse().map_err(|e: sact::Error| {
            let message = match e {
                sact::Error::Parse { message, .. } => message,
                other => other.to_string(),
            };
            (l, column, message)
        })?;
        values.push((act, p, l));
    }
    Ok(RadicalDef { name, line, monoid, max_size, values })
}

fn parse_torsion(line: usize, text: &str, toks: &[Token<'_>], body: &[(usize, &str)]) -> Result<TorsionDef, Fail> {
    no_body(body, "a torsion pair")?;
    if toks.len() < 3 || toks[2].text != "=" {
        return Err((line, 1, "expected `torsion <name> = (<class>, <class>)`".into()));
    }
    let name = name_ok(line, &toks[1])?;
    let eq = text.find('=').expect("checked above");
    let rest = text[eq + 1..].trim();
    let column = text[..eq].chars().count() + 2;
    let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or((
        line,
        column,
        "expected `(<class>, <class>)`".to_string(),
    ))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err((line, column, "a torsion pair names exactly two classes".into()));
    }
    let class = |s: &str| name_ok(line, &Token { column, text: s });
    Ok(TorsionDef { name, line, torsion: class(parts[0])?, torsion_free: class(parts[1])? })
}

pub fn render_monoid(name: &str, m: &Monoid) -> String {
    let mut s = format!("monoid {name}\nelements {}\nidentity {}\ntable\n", m.size(), m.identity());
    for r in m.rows() {
        s.push_str(&join(&r));
        s.push('\n');
    }
    s
}

pub fn render_act(name: &str, monoid: &str, a: &Act) -> String {
    let mut s = format!("act {name} over {monoid}\nsize {}\naction\n", a.size());
    for r in a.rows() {
        s.push_str(&join(&r));
        s.push('\n');
    }
    s
}

pub fn render_radical(name: &str, monoid: &str, u: &Universe, r: &RadicalAssignment) -> String {
    format!("radical {name} over {monoid}/{}\n{}", u.max_size(), r.display(u))
}

fn join(r: &[usize]) -> String {
    r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
