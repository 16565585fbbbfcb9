//! A directory of fixtures, resolved against universes on demand.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use sact::{Act, ActClass, Bounds, Monoid, Predicate, RadicalAssignment, TorsionPair, Universe};

use crate::cache::{self, Source};
use crate::fixture::{self, ClassDef, ClassSpec, Diagnostic, Fixtures, RadicalDef, TorsionDef};
use crate::CliError;

/// Monoids available without a fixture; a fixture of the same name wins.
pub fn builtin_monoid(name: &str) -> Option<Monoid> {
    match name {
        "S1" => Some(Monoid::trivial()),
        "S2" => Some(Monoid::idempotent()),
        "Z2" => Some(Monoid::cyclic_group(2)),
        "Z3" => Some(Monoid::cyclic_group(3)),
        _ => None,
    }
}

type Cached = (Arc<Universe>, Source);

pub struct Workspace {
    pub dir: PathBuf,
    pub bounds: Bounds,
    monoids: BTreeMap<String, Arc<Monoid>>,
    acts: BTreeMap<String, Act>,
    classes: BTreeMap<String, ClassDef>,
    radicals: BTreeMap<String, RadicalDef>,
    torsions: BTreeMap<String, TorsionDef>,
    pub diagnostics: Vec<Diagnostic>,
    universes: Mutex<BTreeMap<(String, usize), Cached>>,
}

/// `*.sact` files directly inside `dir`, sorted by name.
pub fn fixture_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "sact"))
        .collect();
    files.sort();
    Ok(files)
}

impl Workspace {
    /// Parses every fixture in `dir`; problems are collected, not fatal.
    pub fn load(dir: &Path, bounds: Bounds) -> Result<Workspace, CliError> {
        if !dir.is_dir() {
            return Err(CliError::Usage(format!("workspace `{}` is not a directory", dir.display())));
        }
        let files = fixture_files(dir).map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", dir.display())))?;
        Self::from_files(dir, &files, bounds)
    }

    pub fn from_files(dir: &Path, files: &[PathBuf], bounds: Bounds) -> Result<Workspace, CliError> {
        let mut ws = Workspace {
            dir: dir.to_path_buf(),
            bounds,
            monoids: BTreeMap::new(),
            acts: BTreeMap::new(),
            classes: BTreeMap::new(),
            radicals: BTreeMap::new(),
            torsions: BTreeMap::new(),
            diagnostics: Vec::new(),
            universes: Mutex::new(BTreeMap::new()),
        };
        for path in files {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", path.display())))?;
            let label = path.display().to_string();
            let (fx, diags) = fixture::parse(&label, &text);
            ws.diagnostics.extend(diags);
            ws.add(&label, fx);
        }
        Ok(ws)
    }

    fn diag(&mut self, file: &str, line: usize, message: String) {
        self.diagnostics.push(Diagnostic { file: file.to_string(), line, column: 1, message });
    }

    fn add(&mut self, file: &str, fx: Fixtures) {
        for m in fx.monoids {
            if self.monoids.contains_key(&m.name) {
                self.diag(file, m.line, format!("duplicate monoid `{}`", m.name));
                continue;
            }
            match Monoid::new(&m.rows, m.identity) {
                Ok(monoid) => {
                    self.monoids.insert(m.name, Arc::new(monoid));
                }
                Err(e) => self.diag(file, m.line, format!("monoid `{}`: {e}", m.name)),
            }
        }
        for a in fx.acts {
            if self.acts.contains_key(&a.name) {
                self.diag(file, a.line, format!("duplicate act `{}`", a.name));
                continue;
            }
            let Some(monoid) = self.monoid(&a.monoid) else {
                self.diag(file, a.line, format!("act `{}`: unknown monoid `{}`", a.name, a.monoid));
                continue;
            };
            if a.rows.len() != monoid.size() {
                let message = format!(
                    "act `{}`: {} action rows for a monoid of {} elements",
                    a.name,
                    a.rows.len(),
                    monoid.size()
                );
                self.diag(file, a.line, message);
                continue;
            }
            match Act::new(monoid, a.size, &a.rows) {
                Ok(act) => {
                    self.acts.insert(a.name, act);
                }
                Err(e) => self.diag(file, a.line, format!("act `{}`: {e}", a.name)),
            }
        }
        for c in fx.classes {
            if self.classes.contains_key(&c.name) {
                self.diag(file, c.line, format!("duplicate class `{}`", c.name));
            } else {
                self.classes.insert(c.name.clone(), c);
            }
        }
        for r in fx.radicals {
            if self.radicals.contains_key(&r.name) {
                self.diag(file, r.line, format!("duplicate radical `{}`", r.name));
            } else if self.monoid(&r.monoid).is_none() {
                self.diag(file, r.line, format!("radical `{}`: unknown monoid `{}`", r.name, r.monoid));
            } else {
                self.radicals.insert(r.name.clone(), r);
            }
        }
        for t in fx.torsions {
            if self.torsions.contains_key(&t.name) {
                self.diag(file, t.line, format!("duplicate torsion pair `{}`", t.name));
            } else {
                self.torsions.insert(t.name.clone(), t);
            }
        }
    }

    pub fn monoid(&self, name: &str) -> Option<Arc<Monoid>> {
        self.monoids.get(name).cloned().or_else(|| builtin_monoid(name).map(Arc::new))
    }

    pub fn require_monoid(&self, name: &str) -> Result<Arc<Monoid>, CliError> {
        self.monoid(name).ok_or_else(|| CliError::Usage(format!("unknown monoid `{name}`")))
    }

    pub fn radical_def(&self, name: &str) -> Option<&RadicalDef> {
        self.radicals.get(name)
    }

    pub fn torsion_def(&self, name: &str) -> Option<&TorsionDef> {
        self.torsions.get(name)
    }

    pub fn class_names(&self) -> impl Iterator<Item = &str> {
        self.classes.keys().map(String::as_str)
    }

    /// The universe for a monoid name, through the memo and the disk cache.
    pub fn universe(&self, monoid: &str, max_size: usize) -> Result<(Arc<Universe>, Source), CliError> {
        let key = (monoid.to_string(), max_size);
        if let Some(hit) = self.universes.lock().expect("not poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let m = self.require_monoid(monoid)?;
        let dir = cache::cache_dir(&self.dir);
        let (u, source) = cache::universe(&dir, &m, max_size, &self.bounds)?;
        let entry = (Arc::new(u), source);
        self.universes.lock().expect("not poisoned").insert(key, entry.clone());
        Ok(entry)
    }

    /// Built-in class names (`trivial`, `all`, predicate ids) or fixtures.
    pub fn class(&self, name: &str, u: &Universe) -> Result<ActClass, CliError> {
        if let Some(def) = self.classes.get(name) {
            return match &def.spec {
                ClassSpec::Predicate(p) => Ok(ActClass::from_predicate(u, *p).with_label(name)),
                ClassSpec::Acts(names) => {
                    let members = names.iter().map(|n| self.act_index(n, u)).collect::<Result<Vec<_>, _>>()?;
                    Ok(ActClass::new(u, name, members))
                }
            };
        }
        match Predicate::parse(name) {
            Ok(p) => Ok(ActClass::from_predicate(u, p).with_label(name)),
            Err(_) => Err(CliError::Usage(format!("unknown class `{name}`"))),
        }
    }

    /// A universe name like `A2.0`, or an act fixture located in `u`.
    pub fn act_index(&self, name: &str, u: &Universe) -> Result<usize, CliError> {
        if let Some(i) = u.index_by_name(name) {
            return Ok(i);
        }
        let act = self.acts.get(name).ok_or_else(|| CliError::Usage(format!("unknown act `{name}`")))?;
        u.index_of(act).ok_or_else(|| CliError::Usage(format!("act `{name}` is not in this universe")))
    }

    /// `delta`, `nabla`, or a radical fixture over `u`.
    pub fn radical(&self, name: &str, monoid: &str, u: &Universe) -> Result<RadicalAssignment, CliError> {
        match name {
            "delta" => return Ok(RadicalAssignment::diagonal(u)),
            "nabla" => return Ok(RadicalAssignment::total(u)),
            _ => {}
        }
        let def = self.radicals.get(name).ok_or_else(|| CliError::Usage(format!("unknown radical `{name}`")))?;
        let same_monoid = self.monoid(&def.monoid).as_deref() == self.monoid(monoid).as_deref();
        if !same_monoid || def.max_size != u.max_size() {
            return Err(CliError::Usage(format!(
                "radical `{name}` is over {}/{}, not {monoid}/{}",
                def.monoid,
                def.max_size,
                u.max_size()
            )));
        }
        let mut values: Vec<Option<sact::Partition>> = vec![None; u.len()];
        for (act, p, line) in &def.values {
            let i = u.index_by_name(act).ok_or_else(|| {
                CliError::Usage(format!("radical `{name}` line {line}: `{act}` is not a universe act"))
            })?;
            if values[i].replace(p.clone()).is_some() {
                return Err(CliError::Usage(format!("radical `{name}` line {line}: second value for `{act}`")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| CliError::Usage(format!("radical `{name}` has no value for {}", u.name(i)))))
            .collect::<Result<Vec<_>, _>>()?;
        RadicalAssignment::new(u, values).map_err(|e| CliError::Usage(format!("radical `{name}`: {e}")))
    }

    /// A torsion fixture, or `T:F` with two class names.
    pub fn torsion(&self, name: &str, u: &Universe) -> Result<TorsionPair, CliError> {
        let (t, f) = match self.torsions.get(name) {
            Some(def) => (def.torsion.clone(), def.torsion_free.clone()),
            None => match name.split_once(':') {
                Some((t, f)) => (t.to_string(), f.to_string()),
                None => return Err(CliError::Usage(format!("unknown torsion pair `{name}`"))),
            },
        };
        Ok(TorsionPair::new(self.class(&t, u)?, self.class(&f, u)?))
    }

    /// Radical names in the workspace over the given monoid and size.
    pub fn radicals_over(&self, monoid: &str, max_size: usize) -> Vec<String> {
        let m = self.monoid(monoid);
        self.radicals
            .values()
            .filter(|d| d.max_size == max_size && self.monoid(&d.monoid) == m)
            .map(|d| d.name.clone())
            .collect()
    }
}
