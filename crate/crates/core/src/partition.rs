//! Partitions of a finite carrier `0..n`.
//!
//! A partition is stored as its least-representative map: `rep[a]` is the
//! smallest element in the block of `a`. Two partitions are equal iff their
//! maps are equal, so equality and hashing are plain slice operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    rep: Vec<usize>,
}

impl Partition {
    /// Every block a singleton (the diagonal relation).
    pub fn diagonal(n: usize) -> Self {
        Partition { rep: (0..n).collect() }
    }

    /// A single block (the total relation).
    pub fn total(n: usize) -> Self {
        Partition { rep: vec![0; n] }
    }

    /// Builds the partition whose blocks are given by equal labels.
    pub fn from_labels<T: Eq + Copy>(labels: &[T]) -> Self {
        let mut rep = vec![0; labels.len()];
        for a in 0..labels.len() {
            rep[a] = (0..=a).find(|&b| labels[b] == labels[a]).unwrap_or(a);
        }
        Partition { rep }
    }

    /// Validates a least-representative map.
    pub fn from_rep(rep: Vec<usize>) -> Result<Self> {
        let n = rep.len();
        for (a, &r) in rep.iter().enumerate() {
            if r > a || rep[r] != r {
                return Err(Error::NotAPartition {
                    size: n,
                    reason: format!("rep[{a}] = {r} is not the least element of its block"),
                });
            }
        }
        Ok(Partition { rep })
    }

    /// Builds a partition from explicit blocks that must cover `0..n` disjointly.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (k, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition { size: n, reason: "empty block".into() });
            }
            for &a in block {
                if a >= n {
                    return Err(Error::NotAPartition { size: n, reason: format!("element {a} out of range") });
                }
                if label[a] != usize::MAX {
                    return Err(Error::NotAPartition { size: n, reason: format!("element {a} appears in two blocks") });
                }
                label[a] = k;
            }
        }
        if let Some(a) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::NotAPartition { size: n, reason: format!("element {a} is not covered") });
        }
        Ok(Self::from_labels(&label))
    }

    /// Size of the underlying carrier.
    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    #[inline]
    pub fn rep(&self, a: usize) -> usize {
        self.rep[a]
    }

    pub fn reps(&self) -> &[usize] {
        &self.rep
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.rep.iter().enumerate().filter(|&(a, &r)| a == r).count()
    }

    /// Blocks sorted by least element, each sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; self.len()];
        for a in 0..self.len() {
            let r = self.rep[a];
            if r == a {
                index[a] = out.len();
                out.push(vec![a]);
            } else {
                out[index[r]].push(a);
            }
        }
        out
    }

    /// Dense block index of each element, numbered by least element.
    pub fn block_indices(&self) -> Vec<usize> {
        let mut index = vec![usize::MAX; self.len()];
        let mut next = 0;
        for a in 0..self.len() {
            let r = self.rep[a];
            if r == a {
                index[a] = next;
                next += 1;
            } else {
                index[a] = index[r];
            }
        }
        index
    }

    pub fn is_diagonal(&self) -> bool {
        self.rep.iter().enumerate().all(|(a, &r)| a == r)
    }

    pub fn is_total(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    fn check_same(&self, other: &Partition) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::ActMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// Containment of relations: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        self.len() == other.len() && (0..self.len()).all(|a| other.rep[a] == other.rep[self.rep[a]])
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        self.check_same(other)?;
        let labels: Vec<(usize, usize)> = (0..self.len()).map(|a| (self.rep[a], other.rep[a])).collect();
        Ok(Partition::from_labels(&labels))
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.check_same(other)?;
        let mut uf = UnionFind::new(self.len());
        for a in 0..self.len() {
            uf.union(a, self.rep[a]);
            uf.union(a, other.rep[a]);
        }
        Ok(uf.into_partition())
    }

    /// Image of the partition under a bijection `relabel[old] = new`.
    pub fn transport(&self, relabel: &[usize]) -> Partition {
        assert_eq!(relabel.len(), self.len());
        let mut labels = vec![0; self.len()];
        for a in 0..self.len() {
            labels[relabel[a]] = relabel[self.rep[a]];
        }
        Partition::from_labels(&labels)
    }

    /// Pullback along a map `f: X -> carrier`: `x ~ y` iff `f(x) ~ f(y)`.
    pub fn pullback(&self, f: &[usize]) -> Partition {
        let labels: Vec<usize> = f.iter().map(|&x| self.rep[x]).collect();
        Partition::from_labels(&labels)
    }

    /// Restriction to a sorted subset, relabelled as `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        self.pullback(subset)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("partition {")?;
        for (k, block) in self.blocks().iter().enumerate() {
            if k > 0 {
                f.write_str(" |")?;
            }
            for (i, a) in block.iter().enumerate() {
                if k > 0 || i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
        }
        f.write_str("}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `partition {0 1 | 2}`. Blocks must be given in canonical order.
    fn from_str(s: &str) -> Result<Self> {
        let err = |column: usize, message: String| Error::Parse { line: 0, column, message };
        let body = s
            .trim()
            .strip_prefix("partition")
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('{'))
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| err(1, format!("expected `partition {{...}}`, found `{s}`")))?;
        if body.trim().is_empty() {
            return Ok(Partition::diagonal(0));
        }
        let mut blocks = Vec::new();
        for chunk in body.split('|') {
            let block: Vec<usize> = chunk
                .split_whitespace()
                .map(|t| {
                    if !t.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(err(1, format!("`{t}` is not a base-10 index")));
                    }
                    t.parse::<usize>().map_err(|e| err(1, format!("`{t}`: {e}")))
                })
                .collect::<Result<_>>()?;
            blocks.push(block);
        }
        let n = blocks.iter().map(Vec::len).sum();
        let p = Partition::from_blocks(n, &blocks)?;
        if p.blocks() != blocks {
            return Err(err(1, format!("partition literal `{s}` is not in canonical order (expected `{p}`)")));
        }
        Ok(p)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|a| self.find(a)).collect();
        Partition::from_labels(&roots)
    }
}

/// Restricted growth strings of length `n` in lexicographic order.
///
/// Each string `a` has `a[0] = 0` and `a[i] <= 1 + max(a[..i])`; it encodes
/// the partition whose blocks are the level sets of `a`.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    // prefix maxima: max[i] = max(rgs[..=i])
    max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions { rgs: vec![0; n], max: vec![0; n], done: false }
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_labels(&self.rgs);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}
