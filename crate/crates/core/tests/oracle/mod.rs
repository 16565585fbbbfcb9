//! Brute-force reference implementations used as test oracles.
//!
//! Everything here works from definitions on raw tables: no search pruning,
//! no canonical forms, no caches from the library under test.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use sact::{Act, Monoid, Partition, RadicalAssignment, Universe};

/// Every map `0..n -> 0..m`, as vectors.
pub fn maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f| {
                (0..m).map(move |v| {
                    let mut g = f.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    maps(n, n).into_iter().filter(|p| p.iter().collect::<BTreeSet<_>>().len() == n).collect()
}

/// Least-representative map of the partition given by equal labels.
pub fn reps_of_labels(labels: &[usize]) -> Vec<usize> {
    (0..labels.len()).map(|a| (0..=a).find(|&b| labels[b] == labels[a]).unwrap()).collect()
}

/// All partitions of `0..n`, from every labelling.
pub fn partitions(n: usize) -> BTreeSet<Vec<usize>> {
    maps(n, n.max(1)).iter().map(|l| reps_of_labels(l)).collect()
}

pub fn bell(n: usize) -> usize {
    // Bell triangle
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

pub fn related(rep: &[usize], a: usize, b: usize) -> bool {
    rep[a] == rep[b]
}

pub fn is_congruence(act: &Act, rep: &[usize]) -> bool {
    let n = act.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            !related(rep, a, b) || (0..act.monoid().size()).all(|s| related(rep, act.act(s, a), act.act(s, b)))
        })
    })
}

pub fn congruences(act: &Act) -> BTreeSet<Vec<usize>> {
    partitions(act.size()).into_iter().filter(|p| is_congruence(act, p)).collect()
}

pub fn is_hom(a: &Act, b: &Act, f: &[usize]) -> bool {
    (0..a.size()).all(|x| (0..a.monoid().size()).all(|s| f[a.act(s, x)] == b.act(s, f[x])))
}

pub fn homs(a: &Act, b: &Act) -> Vec<Vec<usize>> {
    maps(a.size(), b.size()).into_iter().filter(|f| is_hom(a, b, f)).collect()
}

pub fn is_associative(m: usize, t: &[usize]) -> bool {
    (0..m).all(|x| (0..m).all(|y| (0..m).all(|z| t[t[x * m + y] * m + z] == t[x * m + t[y * m + z]])))
}

/// Number of monoids of order `m` up to isomorphism, by exhausting all tables
/// with identity 0 and collapsing under every relabelling.
pub fn monoid_count(m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    let free: Vec<(usize, usize)> = (1..m).flat_map(|x| (1..m).map(move |y| (x, y))).collect();
    let perms = permutations(m);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for values in maps(free.len(), m) {
        let mut t = vec![0; m * m];
        for x in 0..m {
            t[x] = x;
            t[x * m] = x;
        }
        for (&(x, y), &v) in free.iter().zip(&values) {
            t[x * m + y] = v;
        }
        if !is_associative(m, &t) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut u = vec![0; m * m];
                for x in 0..m {
                    for y in 0..m {
                        u[p[x] * m + p[y]] = p[t[x * m + y]];
                    }
                }
                u
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

/// Acts of size `n` up to isomorphism: every table satisfying the act laws,
/// collapsed under every relabelling of the carrier.
pub fn act_count(monoid: &Arc<Monoid>, n: usize) -> usize {
    let m = monoid.size();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in maps(m * n, n) {
        let ok = (0..n).all(|a| t[monoid.identity() * n + a] == a)
            && (0..m).all(|s| (0..m).all(|u| (0..n).all(|a| t[s * n + t[u * n + a]] == t[monoid.mul(s, u) * n + a])));
        if !ok {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut v = vec![0; m * n];
                for s in 0..m {
                    for a in 0..n {
                        v[s * n + p[a]] = p[t[s * n + a]];
                    }
                }
                v
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

pub fn is_closed(act: &Act, subset: &[usize]) -> bool {
    subset.iter().all(|&a| (0..act.monoid().size()).all(|s| subset.contains(&act.act(s, a))))
}

/// All subacts, the empty one included, as sorted element lists.
pub fn subacts(act: &Act) -> Vec<Vec<usize>> {
    let n = act.size();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&a| mask >> a & 1 == 1).collect::<Vec<_>>())
        .filter(|s| is_closed(act, s))
        .collect()
}

/// The subact as an act on `0..k`, element `k` standing for `subset[k]`.
pub fn restrict(act: &Act, subset: &[usize]) -> Act {
    let rows: Vec<Vec<usize>> = (0..act.monoid().size())
        .map(|s| subset.iter().map(|&a| subset.iter().position(|&b| b == act.act(s, a)).unwrap()).collect())
        .collect();
    Act::new(act.monoid().clone(), subset.len(), &rows).unwrap()
}

/// Quotient by a least-representative map; block `k` is the `k`-th distinct rep.
pub fn quotient(act: &Act, rep: &[usize]) -> (Act, Vec<usize>) {
    let reps: Vec<usize> = rep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let proj: Vec<usize> = rep.iter().map(|r| reps.iter().position(|x| x == r).unwrap()).collect();
    let rows: Vec<Vec<usize>> =
        (0..act.monoid().size()).map(|s| reps.iter().map(|&r| proj[act.act(s, r)]).collect()).collect();
    (Act::new(act.monoid().clone(), reps.len(), &rows).unwrap(), proj)
}

pub fn isomorphism(a: &Act, b: &Act) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    permutations(a.size()).into_iter().find(|p| is_hom(a, b, p))
}

/// Universe index of an act and an isomorphism into that act.
pub fn locate(u: &Universe, act: &Act) -> (usize, Vec<usize>) {
    (0..u.len()).find_map(|i| isomorphism(act, u.act(i)).map(|p| (i, p))).expect("act lies in the universe")
}

/// `rep` pulled back along `f`: `a ~ b` iff `f(a) ~ f(b)`.
pub fn pullback(rep: &[usize], f: &[usize]) -> Vec<usize> {
    let labels: Vec<usize> = f.iter().map(|&x| rep[x]).collect();
    reps_of_labels(&labels)
}

pub type Assignment = Vec<Vec<usize>>;

pub fn assignment_of(r: &RadicalAssignment) -> Assignment {
    r.values().iter().map(|p| p.reps().to_vec()).collect()
}

pub fn radical_of(u: &Universe, a: &Assignment) -> RadicalAssignment {
    RadicalAssignment::new(u, a.iter().map(|r| Partition::from_rep(r.clone()).unwrap()).collect()).unwrap()
}

/// Value of the assignment on an arbitrary act isomorphic to a universe act.
pub fn value_on(u: &Universe, r: &Assignment, act: &Act) -> Vec<usize> {
    let (i, phi) = locate(u, act);
    pullback(&r[i], &phi)
}

pub fn is_total(rep: &[usize]) -> bool {
    rep.iter().all(|&r| r == 0)
}

pub fn is_diagonal(rep: &[usize]) -> bool {
    rep.iter().enumerate().all(|(a, &r)| r == a)
}

/// Precomputed brute-force data for one universe.
pub struct Brute<'a> {
    pub u: &'a Universe,
    pub homs: Vec<Vec<Vec<Vec<usize>>>>,
    pub congruences: Vec<Vec<Vec<usize>>>,
}

impl<'a> Brute<'a> {
    pub fn new(u: &'a Universe) -> Self {
        let n = u.len();
        let homs = (0..n).map(|i| (0..n).map(|j| homs(u.act(i), u.act(j))).collect()).collect();
        let congruences = (0..n).map(|i| congruences(u.act(i)).into_iter().collect()).collect();
        Brute { u, homs, congruences }
    }

    pub fn functorial(&self, r: &Assignment) -> bool {
        let n = self.u.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.homs[i][j].iter().all(|f| {
                    let size = self.u.act(i).size();
                    (0..size).all(|a| (0..size).all(|b| !related(&r[i], a, b) || related(&r[j], f[a], f[b])))
                })
            })
        })
    }

    pub fn quotient_semisimple(&self, r: &Assignment) -> bool {
        (0..self.u.len()).all(|i| {
            let (q, _) = quotient(self.u.act(i), &r[i]);
            is_diagonal(&value_on(self.u, r, &q))
        })
    }

    pub fn is_hoehnke(&self, r: &Assignment) -> bool {
        self.functorial(r) && self.quotient_semisimple(r)
    }

    pub fn is_hereditary(&self, r: &Assignment) -> bool {
        (0..self.u.len()).all(|i| {
            let act = self.u.act(i);
            subacts(act).iter().all(|b| {
                let on_b = value_on(self.u, r, &restrict(act, b));
                let restricted = pullback(&r[i], b);
                on_b == restricted
            })
        })
    }

    /// Kurosh-Amitsur properties read off the definition: Rees values, blocks
    /// in the radical class, and every radical non-trivial subact inside a block.
    pub fn is_ka(&self, r: &Assignment) -> bool {
        (0..self.u.len()).all(|i| {
            let act = self.u.act(i);
            let n = act.size();
            let blocks: Vec<Vec<usize>> =
                (0..n).filter(|&a| r[i][a] == a).map(|a| (0..n).filter(|&b| r[i][b] == a).collect()).collect();
            let rees = blocks.iter().all(|b| b.len() < 2 || is_closed(act, b));
            let members_radical = blocks
                .iter()
                .filter(|b| b.len() >= 2)
                .all(|b| is_closed(act, b) && is_total(&value_on(self.u, r, &restrict(act, b))));
            let dominates = subacts(act).iter().filter(|b| b.len() >= 2).all(|b| {
                !is_total(&value_on(self.u, r, &restrict(act, b))) || b.iter().all(|&x| r[i][x] == r[i][b[0]])
            });
            rees && members_radical && dominates
        })
    }

    /// Every assignment of congruences, unpruned.
    pub fn assignments(&self) -> Vec<Assignment> {
        let mut out: Vec<Assignment> = vec![Vec::new()];
        for cs in &self.congruences {
            out = out
                .into_iter()
                .flat_map(|a| {
                    cs.iter().map(move |c| {
                        let mut b = a.clone();
                        b.push(c.clone());
                        b
                    })
                })
                .collect();
        }
        out
    }

    /// Hoehnke, hereditary and KA radicals by exhaustive search.
    pub fn radicals(&self) -> (BTreeSet<Assignment>, BTreeSet<Assignment>, BTreeSet<Assignment>) {
        let hoehnke: BTreeSet<Assignment> = self.assignments().into_iter().filter(|r| self.is_hoehnke(r)).collect();
        let hereditary = hoehnke.iter().filter(|r| self.is_hereditary(r)).cloned().collect();
        let ka = hoehnke.iter().filter(|r| self.is_ka(r)).cloned().collect();
        (hoehnke, hereditary, ka)
    }
}

/// Pairwise disjoint families of non-trivial subacts.
pub fn systems(act: &Act) -> Vec<Vec<Vec<usize>>> {
    let subs: Vec<Vec<usize>> = subacts(act).into_iter().filter(|s| s.len() >= 2).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << subs.len() {
        let chosen: Vec<Vec<usize>> =
            (0..subs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| subs[k].clone()).collect();
        let disjoint =
            chosen.iter().enumerate().all(|(x, a)| chosen[x + 1..].iter().all(|b| a.iter().all(|e| !b.contains(e))));
        if disjoint {
            out.push(chosen);
        }
    }
    out
}

/// Rees congruence of a system: each member collapsed, everything else a singleton.
pub fn rees_rep(n: usize, system: &[Vec<usize>]) -> Vec<usize> {
    let mut labels: Vec<usize> = (0..n).collect();
    for m in system {
        for &x in m {
            labels[x] = m[0];
        }
    }
    reps_of_labels(&labels)
}

pub fn s1(n: usize) -> Universe {
    sact::build_universe(Arc::new(Monoid::trivial()), n, &sact::Bounds::default()).unwrap()
}

pub fn s2(n: usize) -> Universe {
    sact::build_universe(Arc::new(Monoid::idempotent()), n, &sact::Bounds::default()).unwrap()
}

pub fn z2(n: usize) -> Universe {
    sact::build_universe(Arc::new(Monoid::cyclic_group(2)), n, &sact::Bounds::default()).unwrap()
}
