//! Finite left acts of a monoid.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::monoid::Monoid;
use crate::partition::Partition;

/// A finite left `S`-act. `action[s * size + a]` is `s·a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Act {
    monoid: Arc<Monoid>,
    size: usize,
    action: Vec<usize>,
}

/// A subset closed under the action, elements sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subact {
    pub elements: Vec<usize>,
}

impl Subact {
    /// At most one element.
    pub fn is_trivial(&self) -> bool {
        self.elements.len() <= 1
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_subset_of(&self, other: &[usize]) -> bool {
        self.elements.iter().all(|a| other.contains(a))
    }
}

impl Act {
    /// Validates `rows` (one per monoid element, each of length `size`) against
    /// the compatibility and unit laws.
    pub fn new(monoid: Arc<Monoid>, size: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != monoid.size() {
            return Err(Error::NotSquare { row: rows.len(), len: rows.len(), expected: monoid.size() });
        }
        let mut action = Vec::with_capacity(monoid.size() * size);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare { row, len: r.len(), expected: size });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= size {
                    return Err(Error::OutOfRange { row, col, value: v, bound: size });
                }
            }
            action.extend_from_slice(r);
        }
        let act = Act { monoid, size, action };
        act.check_laws()?;
        Ok(act)
    }

    /// Builds and validates an act from a closure `(s, a) -> s·a`.
    pub fn from_fn(monoid: Arc<Monoid>, size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..monoid.size()).map(|s| (0..size).map(|a| f(s, a)).collect()).collect();
        Act::new(monoid, size, &rows)
    }

    /// Skips validation; callers guarantee the laws.
    pub(crate) fn from_raw(monoid: Arc<Monoid>, size: usize, action: Vec<usize>) -> Self {
        debug_assert_eq!(action.len(), monoid.size() * size);
        Act { monoid, size, action }
    }

    fn check_laws(&self) -> Result<()> {
        let m = &*self.monoid;
        for a in 0..self.size {
            if self.act(m.identity(), a) != a {
                return Err(Error::UnitViolation(a));
            }
        }
        for s in 0..m.size() {
            for t in 0..m.size() {
                for a in 0..self.size {
                    if self.act(s, self.act(t, a)) != self.act(m.mul(s, t), a) {
                        return Err(Error::CompatibilityViolation(s, t, a));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(monoid: Arc<Monoid>) -> Self {
        Act::from_raw(monoid, 0, Vec::new())
    }

    pub fn singleton(monoid: Arc<Monoid>) -> Self {
        let m = monoid.size();
        Act::from_raw(monoid, 1, vec![0; m])
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size <= 1
    }

    #[inline]
    pub fn act(&self, s: usize, a: usize) -> usize {
        self.action[s * self.size + a]
    }

    /// Flat action table, row-major by monoid element.
    pub fn table(&self) -> &[usize] {
        &self.action
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.monoid.size()).map(|s| self.action[s * self.size..(s + 1) * self.size].to_vec()).collect()
    }

    pub(crate) fn same_monoid(&self, other: &Act) -> Result<()> {
        if Arc::ptr_eq(&self.monoid, &other.monoid) || self.monoid == other.monoid {
            Ok(())
        } else {
            Err(Error::MonoidMismatch)
        }
    }

    /// Elements fixed by every monoid element.
    pub fn zeros(&self) -> Vec<usize> {
        (0..self.size).filter(|&z| (0..self.monoid.size()).all(|s| self.act(s, z) == z)).collect()
    }

    pub fn is_zero(&self, z: usize) -> bool {
        (0..self.monoid.size()).all(|s| self.act(s, z) == z)
    }

    /// The orbit `S·a`, sorted.
    pub fn generated_subact(&self, a: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = (0..self.monoid.size()).map(|s| self.act(s, a)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    pub fn is_subact(&self, subset: &[usize]) -> bool {
        subset.iter().all(|&b| b < self.size && (0..self.monoid.size()).all(|s| subset.contains(&self.act(s, b))))
    }

    /// All subacts, including the empty set and the whole carrier, sorted by
    /// size and then lexicographically.
    pub fn subacts(&self) -> Vec<Subact> {
        assert!(self.size <= 128, "subact enumeration limited to 128 elements");
        let orbit_masks: Vec<u128> =
            (0..self.size).map(|a| self.generated_subact(a).into_iter().fold(0u128, |m, b| m | (1u128 << b))).collect();
        let mut seen: HashSet<u128> = HashSet::new();
        seen.insert(0);
        let mut frontier = vec![0u128];
        for &om in &orbit_masks {
            let mut added = Vec::new();
            for &m in &frontier {
                let u = m | om;
                if seen.insert(u) {
                    added.push(u);
                }
            }
            frontier.extend(added);
        }
        let mut out: Vec<Subact> = frontier
            .into_iter()
            .map(|m| Subact { elements: (0..self.size).filter(|&a| m >> a & 1 == 1).collect() })
            .collect();
        out.sort_by(|x, y| x.elements.len().cmp(&y.elements.len()).then_with(|| x.elements.cmp(&y.elements)));
        out
    }

    /// The act restricted to a subact, relabelled `k -> subset[k]`.
    /// Returns the restricted act and the inclusion map.
    pub fn restrict(&self, subset: &[usize]) -> Result<(Act, Homomorphism)> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !self.is_subact(&sorted) {
            return Err(Error::NotASubact(format!("{sorted:?}")));
        }
        let index = |x: usize| sorted.binary_search(&x).expect("closed subset");
        let k = sorted.len();
        let mut action = Vec::with_capacity(self.monoid.size() * k);
        for s in 0..self.monoid.size() {
            for &b in &sorted {
                action.push(index(self.act(s, b)));
            }
        }
        let sub = Act::from_raw(self.monoid.clone(), k, action);
        Ok((sub, Homomorphism::from_raw(sorted)))
    }

    /// Quotient by a congruence, with blocks numbered by least element,
    /// together with the canonical projection.
    pub fn quotient(&self, chi: &Partition) -> Result<(Act, Homomorphism)> {
        if chi.len() != self.size {
            return Err(Error::ActMismatch(chi.len(), self.size));
        }
        if !crate::congruence::is_compatible(self, chi) {
            return Err(Error::NotACongruence(chi.to_string()));
        }
        let idx = chi.block_indices();
        let blocks = chi.num_blocks();
        let reps: Vec<usize> = (0..self.size).filter(|&a| chi.rep(a) == a).collect();
        let mut action = Vec::with_capacity(self.monoid.size() * blocks);
        for s in 0..self.monoid.size() {
            for &r in &reps {
                action.push(idx[self.act(s, r)]);
            }
        }
        let q = Act::from_raw(self.monoid.clone(), blocks, action);
        Ok((q, Homomorphism::from_raw(idx)))
    }

    /// Cartesian product; `(a, b)` is element `a * other.size + b`.
    pub fn product(&self, other: &Act) -> Result<Act> {
        self.same_monoid(other)?;
        let (n, k) = (self.size, other.size);
        let mut action = Vec::with_capacity(self.monoid.size() * n * k);
        for s in 0..self.monoid.size() {
            for a in 0..n {
                for b in 0..k {
                    action.push(self.act(s, a) * k + other.act(s, b));
                }
            }
        }
        Ok(Act::from_raw(self.monoid.clone(), n * k, action))
    }

    /// Disjoint union; elements of `other` are shifted by `self.size`.
    pub fn coproduct(&self, other: &Act) -> Result<Act> {
        self.same_monoid(other)?;
        let n = self.size;
        let mut action = Vec::with_capacity(self.monoid.size() * (n + other.size));
        for s in 0..self.monoid.size() {
            action.extend((0..n).map(|a| self.act(s, a)));
            action.extend((0..other.size).map(|b| n + other.act(s, b)));
        }
        Ok(Act::from_raw(self.monoid.clone(), n + other.size, action))
    }

    /// Isomorphic copy under `relabel[old] = new`.
    pub fn relabel(&self, relabel: &[usize]) -> Act {
        assert_eq!(relabel.len(), self.size);
        let n = self.size;
        let mut action = vec![0; self.action.len()];
        for s in 0..self.monoid.size() {
            for a in 0..n {
                action[s * n + relabel[a]] = relabel[self.act(s, a)];
            }
        }
        Act::from_raw(self.monoid.clone(), n, action)
    }
}
