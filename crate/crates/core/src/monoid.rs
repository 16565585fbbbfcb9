//! Finite monoids given by multiplication tables.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_monoids`] unless overridden.
pub const DEFAULT_MONOID_ORDER_BOUND: usize = 4;

/// A finite monoid. `table[s * size + t]` is the product `s·t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monoid {
    size: usize,
    identity: usize,
    table: Vec<usize>,
}

impl Monoid {
    /// Checks associativity and the two identity laws.
    pub fn new(rows: &[Vec<usize>], identity: usize) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::NotSquare { row: 0, len: 0, expected: 1 });
        }
        let mut table = Vec::with_capacity(size * size);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::NotSquare { row, len: r.len(), expected: size });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= size {
                    return Err(Error::OutOfRange { row, col, value: v, bound: size });
                }
            }
            table.extend_from_slice(r);
        }
        if identity >= size {
            return Err(Error::BadIdentity(identity));
        }
        let m = Monoid { size, identity, table };
        for s in 0..size {
            if m.mul(identity, s) != s || m.mul(s, identity) != s {
                return Err(Error::BadIdentity(s));
            }
        }
        for s in 0..size {
            for t in 0..size {
                for u in 0..size {
                    if m.mul(m.mul(s, t), u) != m.mul(s, m.mul(t, u)) {
                        return Err(Error::NonAssociative(s, t, u));
                    }
                }
            }
        }
        Ok(m)
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Monoid { size: 1, identity: 0, table: vec![0] }
    }

    /// `{1, e}` with `e·e = e`; the identity is element 0.
    pub fn idempotent() -> Self {
        Monoid { size: 2, identity: 0, table: vec![0, 1, 1, 1] }
    }

    /// The cyclic group of order `n`, elements `0..n` under addition mod `n`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        Monoid { size: n, identity: 0, table: (0..n * n).map(|i| (i / n + i % n) % n).collect() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.size + t]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// Elements other than the identity.
    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&s| s != self.identity)
    }

    /// Isomorphic copy with the identity at 0 and the lexicographically least table.
    pub fn canonical(&self) -> Monoid {
        self.canonicalize().0
    }

    /// Canonical copy plus the relabelling `relabel[old] = new` onto it.
    pub fn canonicalize(&self) -> (Monoid, Vec<usize>) {
        let n = self.size;
        let others: Vec<usize> = self.non_identity().collect();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let mut perm_of_others: Vec<usize> = (0..others.len()).collect();
        loop {
            // relabel[old] = new
            let mut relabel = vec![0; n];
            relabel[self.identity] = 0;
            for (k, &old) in others.iter().enumerate() {
                relabel[old] = perm_of_others[k] + 1;
            }
            let mut table = vec![0; n * n];
            for s in 0..n {
                for t in 0..n {
                    table[relabel[s] * n + relabel[t]] = relabel[self.mul(s, t)];
                }
            }
            if best.as_ref().is_none_or(|(b, _)| table < *b) {
                best = Some((table, relabel));
            }
            if !next_permutation(&mut perm_of_others) {
                break;
            }
        }
        let (table, relabel) = best.expect("at least one permutation");
        (Monoid { size: n, identity: 0, table }, relabel)
    }
}

/// Advances `p` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One representative per isomorphism class of monoids of the given order,
/// sorted by canonical table.
pub fn enumerate_monoids(order: usize, bound: usize) -> Result<Vec<Monoid>> {
    if order == 0 {
        return Ok(Vec::new());
    }
    if order > bound {
        return Err(Error::bound("monoid order", order as u64, bound as u64));
    }
    let n = order;
    // identity fixed at 0; free cells are (s, t) with s, t >= 1
    let mut table = vec![usize::MAX; n * n];
    for s in 0..n {
        table[s] = s;
        table[s * n] = s;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|s| (1..n).map(move |t| (s, t))).collect();
    let mut found = BTreeSet::new();
    fill_monoid(n, &cells, 0, &mut table, &mut found);
    Ok(found.into_iter().collect())
}

fn fill_monoid(n: usize, cells: &[(usize, usize)], k: usize, table: &mut [usize], found: &mut BTreeSet<Monoid>) {
    if k == cells.len() {
        let m = Monoid { size: n, identity: 0, table: table.to_vec() };
        found.insert(m.canonical());
        return;
    }
    let (s, t) = cells[k];
    for v in 0..n {
        table[s * n + t] = v;
        if partially_associative(n, table) {
            fill_monoid(n, cells, k + 1, table, found);
        }
    }
    table[s * n + t] = usize::MAX;
}

fn partially_associative(n: usize, table: &[usize]) -> bool {
    let get = |a: usize, b: usize| table[a * n + b];
    for s in 0..n {
        for t in 0..n {
            let st = get(s, t);
            if st == usize::MAX {
                continue;
            }
            for u in 0..n {
                let tu = get(t, u);
                if tu == usize::MAX {
                    continue;
                }
                let l = get(st, u);
                let r = get(s, tu);
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
            }
        }
    }
    true
}
