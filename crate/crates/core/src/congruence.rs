//! Congruences on finite acts and the Rees congruence calculus.

use serde::{Deserialize, Serialize};

use crate::act::Act;
use crate::error::{Error, Result};
use crate::par;
use crate::partition::{Partition, SetPartitions, UnionFind};

/// Largest act on which [`enumerate_congruences`] runs unless overridden.
pub const DEFAULT_CONGRUENCE_ACT_BOUND: usize = 6;

/// `a ~ a'` implies `s·a ~ s·a'`, assuming sizes already agree.
pub(crate) fn is_compatible(act: &Act, p: &Partition) -> bool {
    let m = act.monoid().size();
    (0..act.size()).all(|a| {
        let r = p.rep(a);
        r == a || (0..m).all(|s| p.related(act.act(s, a), act.act(s, r)))
    })
}

pub fn is_congruence(act: &Act, p: &Partition) -> Result<bool> {
    if p.len() != act.size() {
        return Err(Error::NotAPartition {
            size: act.size(),
            reason: format!("partition covers {} elements", p.len()),
        });
    }
    Ok(is_compatible(act, p))
}

/// Smallest congruence containing every pair in `pairs`.
pub fn congruence_closure(act: &Act, pairs: &[(usize, usize)]) -> Partition {
    let m = act.monoid().size();
    let mut uf = UnionFind::new(act.size());
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = work.pop() {
        if uf.union(a, b) {
            for s in 0..m {
                work.push((act.act(s, a), act.act(s, b)));
            }
        }
    }
    let p = uf.into_partition();
    debug_assert!(is_compatible(act, &p));
    p
}

/// Smallest congruence relating `a` and `b`.
pub fn principal_congruence(act: &Act, a: usize, b: usize) -> Partition {
    congruence_closure(act, &[(a, b)])
}

/// Join of two congruences. Compatibility survives the transitive closure, so
/// the result is asserted rather than re-closed.
pub fn join(act: &Act, x: &Partition, y: &Partition) -> Result<Partition> {
    let j = x.join(y)?;
    assert!(is_compatible(act, &j), "join of congruences {x} and {y} is not a congruence");
    Ok(j)
}

pub fn meet(x: &Partition, y: &Partition) -> Result<Partition> {
    x.meet(y)
}

/// `Con(A)` with its refinement order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceLattice {
    congruences: Vec<Partition>,
    // order[i][j] iff congruences[i] <= congruences[j]
    order: Vec<Vec<bool>>,
}

impl CongruenceLattice {
    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.congruences.binary_search(p).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.congruences.iter()
    }

    /// Checks that meets and joins of members are members.
    pub fn is_closed(&self) -> bool {
        let n = self.congruences.len();
        par::all_range(n, |i| {
            (0..n).all(|j| {
                let (x, y) = (&self.congruences[i], &self.congruences[j]);
                self.position(&x.meet(y).unwrap()).is_some() && self.position(&x.join(y).unwrap()).is_some()
            })
        })
    }
}

/// All congruences on `act`, sorted by their least-representative maps.
///
/// Set partitions are generated as restricted growth strings and filtered by
/// compatibility.
pub fn enumerate_congruences(act: &Act, bound: usize) -> Result<CongruenceLattice> {
    if act.size() > bound {
        return Err(Error::bound("congruence enumeration act size", act.size() as u64, bound as u64));
    }
    let candidates: Vec<Partition> = SetPartitions::new(act.size()).collect();
    let keep = par::map(&candidates, |p| is_compatible(act, p));
    let mut congruences: Vec<Partition> =
        candidates.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();
    congruences.sort();
    let order = congruences.iter().map(|x| congruences.iter().map(|y| x.leq(y)).collect()).collect();
    let lattice = CongruenceLattice { congruences, order };
    debug_assert!(lattice.is_closed());
    Ok(lattice)
}

/// A list of pairwise disjoint non-trivial subacts, sorted by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReesSystem {
    members: Vec<Vec<usize>>,
}

impl ReesSystem {
    pub fn empty() -> Self {
        ReesSystem { members: Vec::new() }
    }

    pub fn new(act: &Act, members: Vec<Vec<usize>>) -> Result<Self> {
        let mut members: Vec<Vec<usize>> = members
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        members.sort();
        let mut seen = vec![false; act.size()];
        for m in &members {
            if m.len() < 2 {
                return Err(Error::InvalidSystem(format!("trivial member {m:?}")));
            }
            if !act.is_subact(m) {
                return Err(Error::InvalidSystem(format!("{m:?} is not a subact")));
            }
            for &a in m {
                if std::mem::replace(&mut seen[a], true) {
                    return Err(Error::InvalidSystem(format!("members overlap at {a}")));
                }
            }
        }
        Ok(ReesSystem { members })
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Every member of `self` lies inside some member of `other`.
    pub fn refines(&self, other: &ReesSystem) -> bool {
        self.members.iter().all(|b| other.members.iter().any(|c| b.iter().all(|x| c.contains(x))))
    }
}

/// The Rees congruence whose non-singleton blocks are the system's members.
pub fn rees_of_system(act: &Act, system: &ReesSystem) -> Partition {
    let mut labels: Vec<usize> = (0..act.size()).collect();
    for m in system.members() {
        for &a in m {
            labels[a] = m[0];
        }
    }
    Partition::from_labels(&labels)
}

/// The blocks of `chi` that are non-trivial subacts.
pub fn system_of(act: &Act, chi: &Partition) -> ReesSystem {
    let members = chi.blocks().into_iter().filter(|b| b.len() >= 2 && act.is_subact(b)).collect();
    ReesSystem { members }
}

/// Every block is a singleton or a subact.
pub fn is_rees(act: &Act, chi: &Partition) -> bool {
    chi.blocks().iter().all(|b| b.len() == 1 || act.is_subact(b))
}

/// The Rees congruence generated by the subact blocks of `chi`; always `<= chi`.
pub fn rees_part(act: &Act, chi: &Partition) -> Partition {
    rees_of_system(act, &system_of(act, chi))
}

/// Smallest congruence on `act` that restricts to `chi_b` on the subact `subact`
/// (given sorted, with `chi_b` indexed by position in `subact`).
pub fn extend_congruence(act: &Act, subact: &[usize], chi_b: &Partition) -> Result<Partition> {
    let mut sorted = subact.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if !act.is_subact(&sorted) {
        return Err(Error::NotASubact(format!("{sorted:?}")));
    }
    if chi_b.len() != sorted.len() {
        return Err(Error::ActMismatch(chi_b.len(), sorted.len()));
    }
    let (restricted, _) = act.restrict(&sorted)?;
    if !is_compatible(&restricted, chi_b) {
        return Err(Error::NotACongruence(chi_b.to_string()));
    }
    let mut labels: Vec<usize> = (0..act.size()).collect();
    for (k, &a) in sorted.iter().enumerate() {
        labels[a] = sorted[chi_b.rep(k)];
    }
    Ok(Partition::from_labels(&labels))
}

/// All Rees congruences on `act`, as a sublist of the congruence lattice.
pub fn rees_congruences(act: &Act, lattice: &CongruenceLattice) -> Vec<Partition> {
    lattice.iter().filter(|c| is_rees(act, c)).cloned().collect()
}
