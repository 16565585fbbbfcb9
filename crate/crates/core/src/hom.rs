//! Equivariant maps between acts over the same monoid.

use crate::act::Act;
use crate::error::{Error, Result};

/// An equivariant map, stored as its image table. The source and target acts
/// are supplied by context (a hom set always knows its endpoints).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    /// Checks `map[s·a] = s·map[a]` for every `s` and `a`.
    pub fn new(source: &Act, target: &Act, map: Vec<usize>) -> Result<Self> {
        source.same_monoid(target)?;
        if map.len() != source.size() {
            return Err(Error::ActMismatch(map.len(), source.size()));
        }
        if let Some((a, &b)) = map.iter().enumerate().find(|(_, &b)| b >= target.size()) {
            return Err(Error::OutOfRange { row: 0, col: a, value: b, bound: target.size() });
        }
        let h = Homomorphism { map };
        if !h.is_equivariant(source, target) {
            return Err(Error::NotEquivariant(format!("{:?}", h.map)));
        }
        Ok(h)
    }

    pub(crate) fn from_raw(map: Vec<usize>) -> Self {
        Homomorphism { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_equivariant(&self, source: &Act, target: &Act) -> bool {
        (0..source.monoid().size())
            .all(|s| (0..source.size()).all(|a| self.map[source.act(s, a)] == target.act(s, self.map[a])))
    }

    /// Sorted, deduplicated image.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        Homomorphism { map: self.map.iter().map(|&b| next.map[b]).collect() }
    }

    /// Image of at most one point. A one-point image is necessarily a zero of
    /// the target, which is asserted.
    pub fn is_zero(&self, target: &Act) -> bool {
        let img = self.image();
        match img.as_slice() {
            [] => true,
            [z] => {
                assert!(target.is_zero(*z), "one-point image {z} is not a zero");
                true
            }
            _ => false,
        }
    }
}

/// All homomorphisms `source -> target`, in lexicographic order of their maps.
///
/// Elements are visited in order; choosing the image of `a` fixes the image of
/// its whole orbit, so only orbit-consistent choices are expanded.
pub fn homs(source: &Act, target: &Act) -> Result<Vec<Homomorphism>> {
    source.same_monoid(target)?;
    let n = source.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    extend(source, target, 0, &mut map, &mut out);
    Ok(out)
}

fn extend(source: &Act, target: &Act, a: usize, map: &mut Vec<usize>, out: &mut Vec<Homomorphism>) {
    let n = source.size();
    if a == n {
        out.push(Homomorphism { map: map.clone() });
        return;
    }
    if map[a] != usize::MAX {
        extend(source, target, a + 1, map, out);
        return;
    }
    let m = source.monoid().size();
    for b in 0..target.size() {
        let mut assigned = Vec::new();
        let mut ok = true;
        for s in 0..m {
            let x = source.act(s, a);
            let y = target.act(s, b);
            if map[x] == usize::MAX {
                map[x] = y;
                assigned.push(x);
            } else if map[x] != y {
                ok = false;
                break;
            }
        }
        if ok {
            extend(source, target, a + 1, map, out);
        }
        for x in assigned {
            map[x] = usize::MAX;
        }
    }
}

/// Every homomorphism from `source` to `target` is a zero homomorphism.
pub fn all_zero(source: &Act, target: &Act) -> Result<bool> {
    Ok(homs(source, target)?.iter().all(|h| h.is_zero(target)))
}
