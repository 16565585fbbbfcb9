//! Canonical forms of acts up to isomorphism.
//!
//! The canonical form is the relabelling with the lexicographically least
//! action table. Elements are first sorted by an isomorphism-invariant
//! signature, and only permutations inside blocks of equal signature are
//! tried, which keeps carriers up to seven elements cheap.

use crate::act::Act;
use crate::error::{Error, Result};

/// Largest carrier [`canonical_form`] accepts unless overridden.
pub const DEFAULT_CANONICAL_BOUND: usize = 7;

/// A canonical representative together with the isomorphism onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub act: Act,
    /// `relabel[old] = new`.
    pub relabel: Vec<usize>,
}

/// Per-element invariant: orbit size, zero flag, then for every monoid
/// element whether it fixes `a` and how many preimages `a` has under it.
fn signature(act: &Act, a: usize) -> Vec<usize> {
    let m = act.monoid().size();
    let mut sig = Vec::with_capacity(2 + 2 * m);
    sig.push(act.generated_subact(a).len());
    sig.push(usize::from(!act.is_zero(a)));
    for s in 0..m {
        sig.push(usize::from(act.act(s, a) != a));
        sig.push((0..act.size()).filter(|&b| act.act(s, b) == a).count());
    }
    sig
}

pub fn canonical_form(act: &Act) -> Act {
    canonicalize(act).act
}

pub fn canonicalize(act: &Act) -> Canonical {
    let n = act.size();
    let mut order: Vec<(Vec<usize>, usize)> = (0..n).map(|a| (signature(act, a), a)).collect();
    order.sort();
    // cells of equal signature, as ranges into `order`
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || order[i].0 != order[start].0 {
            cells.push((start, i));
            start = i;
        }
    }
    let mut seq: Vec<usize> = order.iter().map(|&(_, a)| a).collect();
    let mut search = Search { act, best: None, relabel: vec![0; n] };
    search.permute_cells(&cells, 0, &mut seq);
    let (table, relabel) = search.best.expect("at least one labelling");
    Canonical { act: Act::from_raw(act.monoid().clone(), n, table), relabel }
}

/// Like [`canonicalize`] but refuses carriers above `bound`.
pub fn canonicalize_bounded(act: &Act, bound: usize) -> Result<Canonical> {
    if act.size() > bound {
        return Err(Error::bound("canonical form act size", act.size() as u64, bound as u64));
    }
    Ok(canonicalize(act))
}

struct Search<'a> {
    act: &'a Act,
    best: Option<(Vec<usize>, Vec<usize>)>,
    relabel: Vec<usize>,
}

impl Search<'_> {
    fn permute_cells(&mut self, cells: &[(usize, usize)], k: usize, seq: &mut Vec<usize>) {
        if k == cells.len() {
            self.consider(seq);
            return;
        }
        let (lo, hi) = cells[k];
        self.heap_permute(cells, k, seq, lo, hi);
    }

    // all orderings of seq[lo..hi] by recursive swapping
    fn heap_permute(&mut self, cells: &[(usize, usize)], k: usize, seq: &mut Vec<usize>, lo: usize, hi: usize) {
        if hi - lo <= 1 {
            self.permute_cells(cells, k + 1, seq);
            return;
        }
        for i in lo..hi {
            seq.swap(lo, i);
            self.heap_permute(cells, k, seq, lo + 1, hi);
            seq.swap(lo, i);
        }
    }

    fn consider(&mut self, seq: &[usize]) {
        let act = self.act;
        let n = act.size();
        // seq[new] = old
        for (new, &old) in seq.iter().enumerate() {
            self.relabel[old] = new;
        }
        let m = act.monoid().size();
        let mut table = Vec::with_capacity(m * n);
        let mut decided = self.best.is_none();
        let mut less = decided;
        for s in 0..m {
            for &old in seq {
                let v = self.relabel[act.act(s, old)];
                if !decided {
                    let b = self.best.as_ref().unwrap().0[table.len()];
                    if v < b {
                        decided = true;
                        less = true;
                    } else if v > b {
                        return;
                    }
                }
                table.push(v);
            }
        }
        if less {
            self.best = Some((table, self.relabel.clone()));
        }
    }
}

/// Some isomorphism `a -> b` as `relabel[old] = new`, if one exists.
pub fn isomorphism(a: &Act, b: &Act) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.monoid() != b.monoid() {
        return None;
    }
    let ca = canonicalize(a);
    let cb = canonicalize(b);
    if ca.act != cb.act {
        return None;
    }
    let mut inv_b = vec![0; b.size()];
    for (old, &new) in cb.relabel.iter().enumerate() {
        inv_b[new] = old;
    }
    Some(ca.relabel.iter().map(|&c| inv_b[c]).collect())
}
