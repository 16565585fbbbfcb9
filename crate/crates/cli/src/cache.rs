//! On-disk universe cache keyed by the monoid's canonical form.
//!
//! Acts are stored over the canonical copy of the monoid, so any relabelled
//! or renamed fixture of the same monoid shares the entry. Entries are
//! revalidated on load and written through a temporary file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use sact::canon::canonicalize;
use sact::{build_universe, Act, Bounds, Monoid, Universe};

const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: u32,
    monoid: Monoid,
    max_size: usize,
    acts: Vec<StoredAct>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StoredAct {
    size: usize,
    rows: Vec<Vec<usize>>,
}

/// How a universe was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Built,
    Loaded,
    /// A stored entry failed revalidation and was replaced.
    Rebuilt,
}

pub fn cache_dir(workspace: &Path) -> PathBuf {
    match std::env::var_os("SACT_CACHE_DIR") {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => workspace.join(".sact-cache"),
    }
}

fn file_name(canonical: &Monoid, max_size: usize) -> String {
    let table: Vec<String> = canonical.rows().iter().flatten().map(ToString::to_string).collect();
    format!("universe-m{}-{}-n{}.json", canonical.size(), table.join("."), max_size)
}

// rows of `act` with monoid element `s` moved to `relabel[s]`
fn move_rows(act: &Act, target: &Arc<Monoid>, relabel: &[usize]) -> sact::Result<Act> {
    let rows = act.rows();
    let mut moved = vec![Vec::new(); rows.len()];
    for (s, r) in rows.into_iter().enumerate() {
        moved[relabel[s]] = r;
    }
    Ok(canonicalize(&Act::new(target.clone(), act.size(), &moved)?).act)
}

fn load(path: &Path, monoid: &Arc<Monoid>, max_size: usize, bounds: &Bounds) -> Option<Universe> {
    let text = fs::read_to_string(path).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    let (canonical, relabel) = monoid.canonicalize();
    if entry.version != FORMAT_VERSION || entry.max_size != max_size || entry.monoid != canonical {
        return None;
    }
    let canonical = Arc::new(Monoid::new(&entry.monoid.rows(), entry.monoid.identity()).ok()?);
    let mut inverse = vec![0; relabel.len()];
    for (s, &c) in relabel.iter().enumerate() {
        inverse[c] = s;
    }
    let acts = entry
        .acts
        .iter()
        .map(|a| {
            let stored = Act::new(canonical.clone(), a.size, &a.rows)?;
            move_rows(&stored, monoid, &inverse)
        })
        .collect::<sact::Result<Vec<_>>>()
        .ok()?;
    Universe::from_acts(monoid.clone(), max_size, acts, bounds).ok()
}

fn store(path: &Path, u: &Universe) -> std::io::Result<()> {
    let (canonical, relabel) = u.monoid().canonicalize();
    let canonical = Arc::new(canonical);
    let mut acts: Vec<Act> =
        u.acts().iter().map(|a| move_rows(a, &canonical, &relabel).expect("relabelled act is valid")).collect();
    acts.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.table().cmp(y.table())));
    let entry = Entry {
        version: FORMAT_VERSION,
        monoid: (*canonical).clone(),
        max_size: u.max_size(),
        acts: acts.iter().map(|a| StoredAct { size: a.size(), rows: a.rows() }).collect(),
    };
    let dir = path.parent().expect("cache path has a directory");
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer(&mut tmp, &entry)?;
    tmp.write_all(b"\n")?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Loads the universe from `dir` or builds and stores it. A failed write is
/// not an error; the universe is still returned.
pub fn universe(
    dir: &Path,
    monoid: &Arc<Monoid>,
    max_size: usize,
    bounds: &Bounds,
) -> sact::Result<(Universe, Source)> {
    let limit = bounds.universe_limit(monoid);
    if max_size > limit {
        return Err(sact::Error::BoundExceeded {
            what: "universe max size",
            value: max_size as u128,
            bound: limit as u128,
        });
    }
    let path = dir.join(file_name(&monoid.canonical(), max_size));
    let existed = path.exists();
    if let Some(u) = load(&path, monoid, max_size, bounds) {
        return Ok((u, Source::Loaded));
    }
    let u = build_universe(monoid.clone(), max_size, bounds)?;
    let _ = store(&path, &u);
    Ok((u, if existed { Source::Rebuilt } else { Source::Built }))
}
