//! Torsion pairs: hom-orthogonality, the torsion radical and the
//! correspondence with Kurosh-Amitsur radicals.

use crate::act::Act;
use crate::class::{enumerate_classes, ActClass};
use crate::congruence::{is_rees, system_of};
use crate::error::{Error, Result};
use crate::hom::homs;
use crate::par;
use crate::partition::Partition;
use crate::radical::{
    check_hoehnke, check_ka, radical_class, rees_join_within, semisimple_class, RadicalAssignment,
    NOTE_UNIVERSE_RELATIVE,
};
use crate::report::AxiomReport;
use crate::universe::{Bounds, Universe};

/// How hom-sets are classified, recorded on torsion reports.
pub const NOTE_ZERO_HOMS: &str =
    "convention: a homomorphism counts as zero when its image has at most one point, so the empty map out of the empty act is zero";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorsionPair {
    pub torsion: ActClass,
    pub torsion_free: ActClass,
}

impl TorsionPair {
    pub fn new(torsion: ActClass, torsion_free: ActClass) -> Self {
        TorsionPair { torsion, torsion_free }
    }
}

/// Every homomorphism `a -> b` has an image of at most one point.
pub fn hom_condition(a: &Act, b: &Act) -> Result<bool> {
    Ok(homs(a, b)?.iter().all(|f| f.is_zero(b)))
}

/// [`hom_condition`] between universe acts, through the hom cache.
pub fn hom_condition_at(u: &Universe, i: usize, j: usize) -> bool {
    let b = u.act(j);
    u.homs(i, j).iter().all(|f| f.is_zero(b))
}

/// Acts receiving only zero homomorphisms from members of `t`.
pub fn right_orthogonal(u: &Universe, t: &ActClass) -> ActClass {
    let members: Vec<usize> = t.members().collect();
    let keep = par::map_range(u.len(), |j| members.iter().all(|&i| hom_condition_at(u, i, j)));
    ActClass::from_mask(u, format!("right({})", t.label), &keep)
}

/// Acts sending only zero homomorphisms into members of `f`.
pub fn left_orthogonal(u: &Universe, f: &ActClass) -> ActClass {
    let members: Vec<usize> = f.members().collect();
    let keep = par::map_range(u.len(), |i| members.iter().all(|&j| hom_condition_at(u, i, j)));
    ActClass::from_mask(u, format!("left({})", f.label), &keep)
}

/// The three defining conditions of a torsion theory.
pub fn check_torsion_theory(u: &Universe, tau: &TorsionPair) -> AxiomReport {
    let (t, f) = (&tau.torsion, &tau.torsion_free);
    let mut report = AxiomReport::new();
    report.note(NOTE_UNIVERSE_RELATIVE);
    report.note(NOTE_ZERO_HOMS);
    for i in t.members() {
        for j in f.members() {
            if let Some(h) = u.homs(i, j).iter().find(|h| !h.is_zero(u.act(j))) {
                report.fail(
                    "torsion.hom-condition",
                    format!("{} -> {} map {:?} is not zero", u.name(i), u.name(j), h.map()),
                );
            }
        }
    }
    let left = left_orthogonal(u, f);
    for i in left.members().filter(|&i| !t.contains(i)) {
        report.fail("torsion.left-closed", format!("{} is orthogonal to the free class but not torsion", u.name(i)));
    }
    let right = right_orthogonal(u, t);
    for j in right.members().filter(|&j| !f.contains(j)) {
        report.fail("torsion.right-closed", format!("{} is orthogonal to the torsion class but not free", u.name(j)));
    }
    for i in 0..u.len() {
        if !u.is_trivial(i) && t.contains(i) && f.contains(i) {
            report.fail("torsion.intersection-trivial", u.name(i));
        }
    }
    report
}

/// Join of the Rees congruences on `acts[i]` whose systems lie in `t`, with
/// a finding if that join is not itself such a congruence.
pub fn t_congruence_at(u: &Universe, t: &ActClass, i: usize) -> (Partition, AxiomReport) {
    let mut report = AxiomReport::new();
    let join = rees_join_within(u, t, i);
    let act = u.act(i);
    if !is_rees(act, &join) {
        report.fail("torsion.t-largest", format!("{}: join {} is not Rees", u.name(i), join));
    } else {
        for m in system_of(act, &join).members() {
            let l = u.subact(i, m).expect("blocks of a Rees congruence are subacts");
            if !t.contains(l.index) {
                report.fail(
                    "torsion.t-largest",
                    format!(
                        "{}: class {:?} of {} is {} outside the torsion class",
                        u.name(i),
                        m,
                        join,
                        u.name(l.index)
                    ),
                );
            }
        }
    }
    (join, report)
}

/// `t(A)` for an arbitrary act covered by the universe, in its own labelling.
pub fn t_congruence(u: &Universe, t: &ActClass, act: &Act) -> Result<(Partition, AxiomReport)> {
    let l = u.require(act)?;
    let (p, report) = t_congruence_at(u, t, l.index);
    Ok((p.pullback(&l.relabel), report))
}

/// The radical `A -> t(A)` of a torsion theory, with its postconditions
/// checked: the result is KA and its classes are the pair's classes.
pub fn ka_from_torsion(u: &Universe, tau: &TorsionPair) -> Result<(RadicalAssignment, AxiomReport)> {
    let pre = check_torsion_theory(u, tau);
    if let Some(w) = pre.witnesses.first() {
        return Err(Error::NotATorsionTheory(format!("{}: {}", w.property, w.data)));
    }
    let parts = par::map_range(u.len(), |i| t_congruence_at(u, &tau.torsion, i));
    let mut report = AxiomReport::new();
    report.note(NOTE_ZERO_HOMS);
    let mut values = Vec::with_capacity(u.len());
    for (p, r) in parts {
        report.extend(r);
        values.push(p);
    }
    let r = RadicalAssignment::new(u, values)?;
    report.extend(check_construction(u, tau, &r));
    Ok((r, report))
}

// the torsion radical is KA with the pair's classes, and A/t(A) is torsion-free
fn check_construction(u: &Universe, tau: &TorsionPair, r: &RadicalAssignment) -> AxiomReport {
    let mut report = AxiomReport::new();
    for w in check_hoehnke(u, r).witnesses.into_iter().chain(check_ka(u, r).witnesses) {
        report.fail("torsion.radical-is-ka", format!("{}: {}", w.property, w.data));
    }
    if !radical_class(u, r).same_members(&tau.torsion) {
        report.fail("torsion.radical-class", "radical class differs from the torsion class".to_string());
    }
    if !semisimple_class(u, r).same_members(&tau.torsion_free) {
        report.fail("torsion.semisimple-class", "semisimple class differs from the free class".to_string());
    }
    for i in 0..u.len() {
        let q = u.quotient_of(i, r.value(i));
        if !tau.torsion_free.contains(q.index) {
            report.fail(
                "torsion.factor-free",
                format!("{} / {} = {} is not torsion-free", u.name(i), r.value(i), u.name(q.index)),
            );
        }
    }
    report
}

/// `(radical class, semisimple class)` of a KA radical, checked to be a torsion theory.
pub fn torsion_from_ka(u: &Universe, r: &RadicalAssignment) -> Result<(TorsionPair, AxiomReport)> {
    let mut pre = check_hoehnke(u, r);
    pre.extend(check_ka(u, r));
    if let Some(w) = pre.witnesses.first() {
        return Err(Error::NotKa(format!("{}: {}", w.property, w.data)));
    }
    let tau = TorsionPair::new(radical_class(u, r), semisimple_class(u, r));
    let report = check_torsion_theory(u, &tau);
    Ok((tau, report))
}

/// Steps of the torsion-radical argument: for `B` torsion and `f: B -> A/t(A)`,
/// the preimage of `f(B)` is torsion and `f(B)` is a single point.
pub fn check_preimage_argument(u: &Universe, tau: &TorsionPair) -> AxiomReport {
    let mut report = AxiomReport::new();
    for i in 0..u.len() {
        let (t, _) = t_congruence_at(u, &tau.torsion, i);
        let blocks = t.block_indices();
        let q = u.quotient_of(i, &t);
        let mut inverse = vec![0; q.relabel.len()];
        for (block, &y) in q.relabel.iter().enumerate() {
            inverse[y] = block;
        }
        for b in tau.torsion.members() {
            for f in u.homs(b, q.index) {
                let image: Vec<usize> = f.image().iter().map(|&y| inverse[y]).collect();
                let mut pre: Vec<usize> = (0..blocks.len()).filter(|&a| image.contains(&blocks[a])).collect();
                pre.sort_unstable();
                let l = u.subact(i, &pre).expect("preimage of a subact is a subact");
                if !tau.torsion.contains(l.index) {
                    report.fail(
                        "torsion.preimage",
                        format!(
                            "{} -> {} map {:?}: preimage {:?} in {} not torsion",
                            u.name(b),
                            u.name(q.index),
                            f.map(),
                            pre,
                            u.name(i)
                        ),
                    );
                }
                if image.len() > 1 {
                    report.fail(
                        "torsion.image-point",
                        format!(
                            "{} -> {} map {:?} has image of size {}",
                            u.name(b),
                            u.name(q.index),
                            f.map(),
                            image.len()
                        ),
                    );
                }
            }
        }
    }
    report
}

/// Coproducts of members within the size bound; violations are witnesses.
pub fn coproduct_closure_check(u: &Universe, c: &ActClass) -> AxiomReport {
    let mut report = AxiomReport::new();
    let members: Vec<usize> = c.members().collect();
    for (x, &i) in members.iter().enumerate() {
        for &j in &members[x..] {
            let size = u.act(i).size() + u.act(j).size();
            if size > u.max_size() {
                report.skip(
                    "closure.coproducts",
                    format!("{} + {}: size {} > max size {}", u.name(i), u.name(j), size, u.max_size()),
                );
                continue;
            }
            let s = u.act(i).coproduct(u.act(j)).expect("same monoid");
            let k = u.index_of(&s).expect("coproduct within bound");
            if !c.contains(k) {
                report.fail("closure.coproducts", format!("{} + {} = {}", u.name(i), u.name(j), u.name(k)));
            }
        }
    }
    report
}

/// Every torsion theory on the universe, found as the classes `T` with
/// `left(right(T)) = T`, ordered by the bitmask over non-trivial acts.
pub fn enumerate_torsion_pairs(u: &Universe, bounds: &Bounds) -> Result<Vec<TorsionPair>> {
    let classes = enumerate_classes(u, bounds.class_enumeration_acts)?;
    u.warm();
    let found = par::map(&classes, |t| {
        let f = right_orthogonal(u, t);
        left_orthogonal(u, &f).same_members(t).then(|| {
            let label = t.label.clone();
            TorsionPair::new(t.clone(), f.with_label(format!("free{label}")))
        })
    });
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;
    use crate::universe::build_universe;
    use std::sync::Arc;

    fn s2(n: usize) -> Universe {
        build_universe(Arc::new(Monoid::idempotent()), n, &Bounds::default()).unwrap()
    }

    #[test]
    fn hom_condition_examples() {
        let m = Arc::new(Monoid::idempotent());
        let id = Act::from_fn(m.clone(), 2, |_, a| a).unwrap();
        let point = Act::singleton(m.clone());
        assert!(hom_condition(&id, &point).unwrap());
        assert!(hom_condition(&point, &id).unwrap());
        assert!(!hom_condition(&id, &id).unwrap());
        assert!(hom_condition(&Act::empty(m.clone()), &id).unwrap());
        assert!(hom_condition(&id, &Act::empty(m)).unwrap());
    }

    #[test]
    fn extreme_pairs() {
        let u = s2(3);
        let triv = ActClass::trivial(&u);
        let all = ActClass::all(&u);
        assert!(right_orthogonal(&u, &triv).same_members(&all));
        assert!(left_orthogonal(&u, &all).same_members(&triv));
        let a = TorsionPair::new(triv.clone(), all.clone());
        let b = TorsionPair::new(all.clone(), triv.clone());
        assert!(check_torsion_theory(&u, &a).passed());
        assert!(check_torsion_theory(&u, &b).passed());
        assert_eq!(ka_from_torsion(&u, &a).unwrap().0, RadicalAssignment::diagonal(&u));
        assert_eq!(ka_from_torsion(&u, &b).unwrap().0, RadicalAssignment::total(&u));
    }

    #[test]
    fn coproducts_of_points() {
        let u = s2(3);
        let rep = coproduct_closure_check(&u, &ActClass::trivial(&u));
        assert!(!rep.passed());
        assert!(coproduct_closure_check(&u, &ActClass::all(&u)).passed());
    }
}
