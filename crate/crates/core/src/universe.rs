//! A finite stand-in for the class of all acts: every act over a monoid with
//! at most `max_size` elements, one per isomorphism class.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use crate::act::{Act, Subact};
use crate::canon::canonicalize;
use crate::congruence::{enumerate_congruences, rees_congruences, CongruenceLattice};
use crate::error::{Error, Result};
use crate::hom::{homs, Homomorphism};
use crate::monoid::Monoid;
use crate::par;
use crate::partition::Partition;

/// Size limits for the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub monoid_order: usize,
    pub universe_size: usize,
    /// Separate limit for the one-element monoid, whose acts are plain sets.
    pub universe_size_trivial_monoid: usize,
    pub congruence_act_size: usize,
    pub canonical_size: usize,
    /// Candidate assignments (product of lattice sizes) before pruning.
    pub radical_search: u128,
    /// Non-trivial acts whose power set may be enumerated as classes.
    pub class_enumeration_acts: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            monoid_order: crate::monoid::DEFAULT_MONOID_ORDER_BOUND,
            universe_size: 4,
            universe_size_trivial_monoid: 5,
            congruence_act_size: crate::congruence::DEFAULT_CONGRUENCE_ACT_BOUND,
            canonical_size: crate::canon::DEFAULT_CANONICAL_BOUND,
            radical_search: 10_000_000,
            class_enumeration_acts: 16,
        }
    }
}

impl Bounds {
    pub fn universe_limit(&self, monoid: &Monoid) -> usize {
        if monoid.size() == 1 {
            self.universe_size_trivial_monoid
        } else {
            self.universe_size
        }
    }
}

/// Position of an act in a universe plus an isomorphism onto the listed
/// representative (`relabel[old] = new`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub index: usize,
    pub relabel: Vec<usize>,
}

#[derive(Debug)]
pub struct Universe {
    monoid: Arc<Monoid>,
    max_size: usize,
    acts: Vec<Act>,
    index: HashMap<Vec<usize>, usize>,
    size_start: Vec<usize>,
    congruence_bound: usize,
    homs: Vec<OnceLock<Vec<Homomorphism>>>,
    lattices: Vec<OnceLock<CongruenceLattice>>,
    rees: Vec<OnceLock<Vec<Partition>>>,
    subacts: Vec<OnceLock<Vec<(Subact, Located)>>>,
    quotients: Vec<OnceLock<Vec<Located>>>,
}

fn key(act: &Act) -> Vec<usize> {
    let mut k = Vec::with_capacity(act.table().len() + 1);
    k.push(act.size());
    k.extend_from_slice(act.table());
    k
}

/// Builds the universe of all acts of size `<= max_size`.
pub fn build_universe(monoid: Arc<Monoid>, max_size: usize, bounds: &Bounds) -> Result<Universe> {
    let limit = bounds.universe_limit(&monoid);
    if max_size > limit {
        return Err(Error::bound("universe max size", max_size as u64, limit as u64));
    }
    let mut acts = Vec::new();
    for n in 0..=max_size {
        acts.extend(acts_of_size(&monoid, n));
    }
    Universe::assemble(monoid, max_size, acts, bounds)
}

/// Every act of size `n` up to isomorphism, in canonical order.
pub fn acts_of_size(monoid: &Arc<Monoid>, n: usize) -> Vec<Act> {
    let m = monoid.size();
    let id = monoid.identity();
    let cells: Vec<(usize, usize)> = monoid.non_identity().flat_map(|s| (0..n).map(move |a| (s, a))).collect();
    let mut table = vec![usize::MAX; m * n];
    for a in 0..n {
        table[id * n + a] = a;
    }
    let found: Vec<Vec<usize>> = if cells.is_empty() {
        vec![table]
    } else {
        // split on the first free cell
        let (s0, a0) = cells[0];
        par::flat_map_range(n, |v| {
            let mut t = table.clone();
            t[s0 * n + a0] = v;
            let mut out = Vec::new();
            if consistent(monoid, n, &t) {
                fill_act(monoid, n, &cells, 1, &mut t, &mut out);
            }
            out
        })
    };
    let mut seen = HashSet::new();
    let mut acts: Vec<Act> = found
        .into_iter()
        .map(|t| canonicalize(&Act::from_raw(monoid.clone(), n, t)).act)
        .filter(|a| seen.insert(a.table().to_vec()))
        .collect();
    acts.sort_by(|x, y| x.table().cmp(y.table()));
    acts
}

fn fill_act(
    monoid: &Monoid,
    n: usize,
    cells: &[(usize, usize)],
    k: usize,
    table: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if k == cells.len() {
        out.push(table.clone());
        return;
    }
    let (s, a) = cells[k];
    for v in 0..n {
        table[s * n + a] = v;
        if consistent(monoid, n, table) {
            fill_act(monoid, n, cells, k + 1, table, out);
        }
    }
    table[s * n + a] = usize::MAX;
}

// s·(t·a) = (st)·a wherever both sides are already determined
fn consistent(monoid: &Monoid, n: usize, table: &[usize]) -> bool {
    let m = monoid.size();
    for t in 0..m {
        for a in 0..n {
            let ta = table[t * n + a];
            if ta == usize::MAX {
                continue;
            }
            for s in 0..m {
                let l = table[s * n + ta];
                let r = table[monoid.mul(s, t) * n + a];
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
            }
        }
    }
    true
}

impl Universe {
    /// Rebuilds a universe from a stored act list, re-checking its invariants:
    /// valid canonical acts within the size bound, no duplicates, trivial acts
    /// present, closure under subacts and quotients.
    pub fn from_acts(monoid: Arc<Monoid>, max_size: usize, acts: Vec<Act>, bounds: &Bounds) -> Result<Universe> {
        let limit = bounds.universe_limit(&monoid);
        if max_size > limit {
            return Err(Error::bound("universe max size", max_size as u64, limit as u64));
        }
        for a in &acts {
            Act::new(monoid.clone(), a.size(), &a.rows())?;
            if a.size() > max_size {
                return Err(Error::NotInUniverse(a.size()));
            }
            if canonicalize(a).act != *a {
                return Err(Error::NotTotal(format!("stored act of size {} is not in canonical form", a.size())));
            }
        }
        let mut sorted = acts;
        sorted.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.table().cmp(y.table())));
        let u = Universe::assemble(monoid, max_size, sorted, bounds)?;
        if u.acts.len() < 2 || u.acts[0].size() != 0 || u.acts[1].size() != 1 {
            return Err(Error::NotTotal("trivial acts missing".into()));
        }
        for i in 0..u.len() {
            let a = u.act(i);
            for sub in a.subacts() {
                let (b, _) = a.restrict(&sub.elements)?;
                if u.locate(&b).is_none() {
                    return Err(Error::NotTotal(format!("subact of {} missing", u.name(i))));
                }
            }
            for chi in u.congruences(i).iter() {
                let (q, _) = a.quotient(chi)?;
                if u.locate(&q).is_none() {
                    return Err(Error::NotTotal(format!("quotient of {} missing", u.name(i))));
                }
            }
        }
        Ok(u)
    }

    fn assemble(monoid: Arc<Monoid>, max_size: usize, acts: Vec<Act>, bounds: &Bounds) -> Result<Universe> {
        let mut index = HashMap::with_capacity(acts.len());
        for (i, a) in acts.iter().enumerate() {
            if index.insert(key(a), i).is_some() {
                return Err(Error::NotTotal(format!("duplicate act of size {} in universe", a.size())));
            }
        }
        let mut size_start = vec![acts.len(); max_size + 2];
        for (i, a) in acts.iter().enumerate().rev() {
            size_start[a.size()] = i;
        }
        for n in (0..=max_size).rev() {
            size_start[n] = size_start[n].min(size_start[n + 1]);
        }
        let n = acts.len();
        Ok(Universe {
            monoid,
            max_size,
            acts,
            index,
            size_start,
            congruence_bound: bounds.congruence_act_size.max(max_size),
            homs: (0..n * n).map(|_| OnceLock::new()).collect(),
            lattices: (0..n).map(|_| OnceLock::new()).collect(),
            rees: (0..n).map(|_| OnceLock::new()).collect(),
            subacts: (0..n).map(|_| OnceLock::new()).collect(),
            quotients: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn len(&self) -> usize {
        self.acts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.acts.is_empty()
    }

    pub fn acts(&self) -> &[Act] {
        &self.acts
    }

    pub fn act(&self, i: usize) -> &Act {
        &self.acts[i]
    }

    pub fn is_trivial(&self, i: usize) -> bool {
        self.acts[i].is_trivial()
    }

    pub fn trivial_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_trivial(i)).collect()
    }

    pub fn nontrivial_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_trivial(i)).collect()
    }

    /// Number of listed acts of each size `0..=max_size`.
    pub fn size_counts(&self) -> Vec<usize> {
        (0..=self.max_size).map(|n| self.size_start[n + 1] - self.size_start[n]).collect()
    }

    /// Stable name `A<size>.<k>`, `k` counting acts of that size in canonical order.
    pub fn name(&self, i: usize) -> String {
        let n = self.acts[i].size();
        format!("A{}.{}", n, i - self.size_start[n])
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        let (size, k) = name.strip_prefix('A')?.split_once('.')?;
        let (size, k): (usize, usize) = (size.parse().ok()?, k.parse().ok()?);
        if size > self.max_size {
            return None;
        }
        let i = self.size_start[size] + k;
        (i < self.size_start[size + 1]).then_some(i)
    }

    /// Finds the listed representative of `act`'s isomorphism class.
    pub fn locate(&self, act: &Act) -> Option<Located> {
        if act.size() > self.max_size || act.monoid() != &self.monoid {
            return None;
        }
        let c = canonicalize(act);
        let index = *self.index.get(&key(&c.act))?;
        Some(Located { index, relabel: c.relabel })
    }

    pub fn index_of(&self, act: &Act) -> Option<usize> {
        self.locate(act).map(|l| l.index)
    }

    /// Like [`Universe::locate`] but an error when the act is not covered.
    pub fn require(&self, act: &Act) -> Result<Located> {
        self.locate(act).ok_or(Error::NotInUniverse(act.size()))
    }

    /// Cached `Hom(acts[i], acts[j])`.
    pub fn homs(&self, i: usize, j: usize) -> &[Homomorphism] {
        self.homs[i * self.len() + j].get_or_init(|| homs(&self.acts[i], &self.acts[j]).expect("same monoid"))
    }

    /// Cached congruence lattice of `acts[i]`.
    pub fn congruences(&self, i: usize) -> &CongruenceLattice {
        self.lattices[i].get_or_init(|| {
            enumerate_congruences(&self.acts[i], self.congruence_bound)
                .expect("universe acts are within the congruence bound")
        })
    }

    /// Cached Rees congruences of `acts[i]`.
    pub fn rees_congruences(&self, i: usize) -> &[Partition] {
        self.rees[i].get_or_init(|| rees_congruences(&self.acts[i], self.congruences(i)))
    }

    /// Locates the quotient `acts[i] / chi`; the returned relabelling maps
    /// blocks (numbered by least element) onto the representative.
    pub fn quotient(&self, i: usize, chi: &Partition) -> Result<Located> {
        let (q, _) = self.acts[i].quotient(chi)?;
        self.require(&q)
    }

    /// Locates the restriction of `acts[i]` to a subact (relabelled by position).
    pub fn subact(&self, i: usize, subset: &[usize]) -> Result<Located> {
        let (b, _) = self.acts[i].restrict(subset)?;
        self.require(&b)
    }

    /// Cached subacts of `acts[i]`, each with its located restriction.
    pub fn subacts(&self, i: usize) -> &[(Subact, Located)] {
        self.subacts[i].get_or_init(|| {
            self.acts[i]
                .subacts()
                .into_iter()
                .map(|b| {
                    let l = self.subact(i, &b.elements).expect("universe is subact-closed");
                    (b, l)
                })
                .collect()
        })
    }

    /// Cached located quotients, aligned with [`Universe::congruences`].
    pub fn quotients(&self, i: usize) -> &[Located] {
        self.quotients[i].get_or_init(|| {
            self.congruences(i).iter().map(|chi| self.quotient(i, chi).expect("universe is quotient-closed")).collect()
        })
    }

    /// Located quotient by a congruence of `acts[i]`, through the cache.
    pub fn quotient_of(&self, i: usize, chi: &Partition) -> &Located {
        let k = self.congruences(i).position(chi).expect("argument is a congruence of the act");
        &self.quotients(i)[k]
    }

    /// Fills every cache up front, in parallel.
    pub fn warm(&self) {
        let n = self.len();
        par::map_range(n, |i| {
            self.congruences(i);
            self.rees_congruences(i);
            self.subacts(i);
            self.quotients(i);
        });
        par::map_range(n * n, |k| {
            self.homs(k / n, k % n);
        });
    }
}
