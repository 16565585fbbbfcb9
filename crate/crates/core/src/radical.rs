//! Radical assignments over a universe and the checkers built on them.

use std::fmt;

use crate::class::ActClass;
use crate::congruence::{is_compatible, is_rees, rees_of_system, system_of};
use crate::error::{Error, Result};
use crate::par;
use crate::partition::Partition;
use crate::report::AxiomReport;
use crate::universe::{Bounds, Universe};

/// Recorded on every report that quantifies over homomorphisms.
pub const NOTE_UNIVERSE_RELATIVE: &str = "universe-relative: homomorphisms are quantified over universe acts only";
/// The reading of congruence-extension closure used by the semisimple checks.
pub const NOTE_CONGRUENCE_EXTENSION: &str =
    "assumption: congruence-extension closure means A/chi in S and every member of the system of chi in S imply A in S";
/// The reading of the inductive property used by the radical-class checks.
pub const NOTE_INDUCTIVE: &str =
    "assumption: inductive property checked on finite ascending chains of subacts inside single universe acts";

/// A congruence on every universe act, indexed like the universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalAssignment {
    values: Vec<Partition>,
}

impl RadicalAssignment {
    /// Checks totality and that every value is a congruence on its act.
    pub fn new(u: &Universe, values: Vec<Partition>) -> Result<Self> {
        if values.len() != u.len() {
            return Err(Error::NotTotal(format!("{} values for {} universe acts", values.len(), u.len())));
        }
        for (i, v) in values.iter().enumerate() {
            if v.len() != u.act(i).size() || !is_compatible(u.act(i), v) {
                return Err(Error::NotACongruence(format!("{} on {}", v, u.name(i))));
            }
        }
        Ok(RadicalAssignment { values })
    }

    pub(crate) fn from_values(values: Vec<Partition>) -> Self {
        RadicalAssignment { values }
    }

    pub fn diagonal(u: &Universe) -> Self {
        Self::from_values(u.acts().iter().map(|a| Partition::diagonal(a.size())).collect())
    }

    pub fn total(u: &Universe) -> Self {
        Self::from_values(u.acts().iter().map(|a| Partition::total(a.size())).collect())
    }

    pub fn value(&self, i: usize) -> &Partition {
        &self.values[i]
    }

    pub fn values(&self) -> &[Partition] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise containment of relations.
    pub fn leq(&self, other: &RadicalAssignment) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| a.leq(b))
    }

    /// `act : partition {...}` lines, one per universe act.
    pub fn display<'a>(&'a self, u: &'a Universe) -> impl fmt::Display + 'a {
        DisplayAssignment { r: self, u }
    }
}

struct DisplayAssignment<'a> {
    r: &'a RadicalAssignment,
    u: &'a Universe,
}

impl fmt::Display for DisplayAssignment<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.r.values.iter().enumerate() {
            writeln!(f, "{} : {}", self.u.name(i), v)?;
        }
        Ok(())
    }
}

/// Pointwise join; the diagonal assignment for an empty list.
pub fn pointwise_join<'a>(u: &Universe, rs: impl IntoIterator<Item = &'a RadicalAssignment>) -> RadicalAssignment {
    let mut acc = RadicalAssignment::diagonal(u);
    for r in rs {
        for (i, v) in acc.values.iter_mut().enumerate() {
            *v = crate::congruence::join(u.act(i), v, &r.values[i]).expect("same carrier");
        }
    }
    acc
}

/// Pointwise meet; the total assignment for an empty list.
pub fn pointwise_meet<'a>(u: &Universe, rs: impl IntoIterator<Item = &'a RadicalAssignment>) -> RadicalAssignment {
    let mut acc = RadicalAssignment::total(u);
    for r in rs {
        for (v, w) in acc.values.iter_mut().zip(&r.values) {
            *v = v.meet(w).expect("same carrier");
        }
    }
    acc
}

fn check_len(u: &Universe, r: &RadicalAssignment) {
    assert_eq!(r.len(), u.len(), "assignment is not over this universe");
}

/// Universe index of the restriction of `acts[i]` to `member`.
fn member_index(u: &Universe, i: usize, member: &[usize]) -> usize {
    u.subacts(i).iter().find(|(b, _)| b.elements == member).map(|(_, l)| l.index).expect("system members are subacts")
}

// first pair related by r(i) whose images are not related by r(j)
fn functoriality_break(r: &[Partition], i: usize, j: usize, map: &[usize]) -> Option<(usize, usize)> {
    let (ri, rj) = (&r[i], &r[j]);
    (0..map.len()).find_map(|a| {
        let b = ri.rep(a);
        (!rj.related(map[a], map[b])).then_some((a, b))
    })
}

/// Functoriality along universe homomorphisms and `r(A/r(A)) = Δ`.
pub fn check_hoehnke(u: &Universe, r: &RadicalAssignment) -> AxiomReport {
    check_len(u, r);
    let n = u.len();
    let mut report = AxiomReport::new();
    report.note(NOTE_UNIVERSE_RELATIVE);
    let broken = par::flat_map_range(n * n, |k| {
        let (i, j) = (k / n, k % n);
        u.homs(i, j)
            .iter()
            .filter_map(|f| {
                functoriality_break(&r.values, i, j, f.map()).map(|(a, b)| {
                    format!(
                        "{} -> {} map {:?} sends r-related ({a}, {b}) to unrelated ({}, {})",
                        u.name(i),
                        u.name(j),
                        f.map(),
                        f.apply(a),
                        f.apply(b)
                    )
                })
            })
            .collect::<Vec<_>>()
    });
    for w in broken {
        report.fail("hoehnke.functorial", w);
    }
    for i in 0..n {
        let q = u.quotient_of(i, &r.values[i]);
        if !r.values[q.index].is_diagonal() {
            report.fail(
                "hoehnke.quotient-semisimple",
                format!("{} / {} = {} has r = {}", u.name(i), r.values[i], u.name(q.index), r.values[q.index]),
            );
        }
    }
    report
}

// hereditary equation on one (act, subact) pair
fn hereditary_break(u: &Universe, r: &[Partition], i: usize, k: usize) -> Option<String> {
    let (b, l) = &u.subacts(i)[k];
    let lhs = r[l.index].pullback(&l.relabel);
    let rhs = r[i].restrict(&b.elements);
    (lhs != rhs).then(|| {
        format!(
            "{} subact {:?} ({}): r(B) = {} but r(A) restricted = {}",
            u.name(i),
            b.elements,
            u.name(l.index),
            lhs,
            rhs
        )
    })
}

/// `r(B) = r(A) ∧ ∇_B` for every universe act and subact, compared on `B`.
pub fn check_hereditary(u: &Universe, r: &RadicalAssignment) -> AxiomReport {
    check_len(u, r);
    let mut report = AxiomReport::new();
    let broken = par::flat_map_range(u.len(), |i| {
        (0..u.subacts(i).len()).filter_map(|k| hereditary_break(u, &r.values, i, k)).collect::<Vec<_>>()
    });
    for w in broken {
        report.fail("hereditary.restriction", w);
    }
    report
}

/// Acts on which `r` is total.
pub fn radical_class(u: &Universe, r: &RadicalAssignment) -> ActClass {
    check_len(u, r);
    ActClass::new(u, "radical", (0..u.len()).filter(|&i| r.values[i].is_total()))
}

/// Acts on which `r` is the diagonal.
pub fn semisimple_class(u: &Universe, r: &RadicalAssignment) -> ActClass {
    check_len(u, r);
    ActClass::new(u, "semisimple", (0..u.len()).filter(|&i| r.values[i].is_diagonal()))
}

/// Acts with no homomorphic image of two or more elements in `s`. Images are
/// read off quotients, which the universe contains up to isomorphism.
pub fn no_nontrivial_image_in(u: &Universe, s: &ActClass) -> ActClass {
    let keep =
        par::map_range(u.len(), |i| u.quotients(i).iter().all(|q| u.is_trivial(q.index) || !s.contains(q.index)));
    ActClass::from_mask(u, format!("no-image-in({})", s.label), &keep)
}

/// Acts whose subacts lying in `r_class` are all trivial.
pub fn no_nontrivial_subact_in(u: &Universe, r_class: &ActClass) -> ActClass {
    let keep =
        par::map_range(u.len(), |i| u.subacts(i).iter().all(|(b, l)| b.is_trivial() || !r_class.contains(l.index)));
    ActClass::from_mask(u, format!("no-subact-in({})", r_class.label), &keep)
}

/// Whether `c` is closed under subacts and under products that fit in the universe.
pub fn closed_under_subacts_and_products(u: &Universe, c: &ActClass) -> bool {
    let members: Vec<usize> = c.members().collect();
    members.iter().all(|&i| u.subacts(i).iter().all(|(_, l)| c.contains(l.index)))
        && members.iter().all(|&i| {
            members.iter().all(|&j| {
                u.act(i).size() * u.act(j).size() > u.max_size() || {
                    let p = u.act(i).product(u.act(j)).expect("same monoid");
                    c.contains(u.index_of(&p).expect("product within bound"))
                }
            })
        })
}

/// Meet of the congruences whose quotient lies in `s`.
pub fn radical_from_semisimple(u: &Universe, s: &ActClass) -> Result<RadicalAssignment> {
    let values = par::map_range(u.len(), |i| {
        let lattice = u.congruences(i);
        let mut acc: Option<Partition> = None;
        for (chi, q) in lattice.iter().zip(u.quotients(i)) {
            if s.contains(q.index) {
                acc = Some(match acc {
                    None => chi.clone(),
                    Some(a) => a.meet(chi).expect("same carrier"),
                });
            }
        }
        acc.ok_or_else(|| Error::EmptyCandidateSet(u.name(i)))
    });
    Ok(RadicalAssignment::from_values(values.into_iter().collect::<Result<_>>()?))
}

/// Join of the Rees congruences whose system lies in `class`, on one act.
pub(crate) fn rees_join_within(u: &Universe, class: &ActClass, i: usize) -> Partition {
    let act = u.act(i);
    let mut acc = Partition::diagonal(act.size());
    for rho in u.rees_congruences(i) {
        let sys = system_of(act, rho);
        if sys.members().iter().all(|m| class.contains(member_index(u, i, m))) {
            acc = crate::congruence::join(act, &acc, rho).expect("same carrier");
        }
    }
    acc
}

/// Join of the Rees congruences whose systems lie in `r_class`.
pub fn radical_from_radical_class(u: &Universe, r_class: &ActClass) -> RadicalAssignment {
    RadicalAssignment::from_values(par::map_range(u.len(), |i| rees_join_within(u, r_class, i)))
}

/// Kurosh-Amitsur properties (i)-(iii), each reported under its own id.
pub fn check_ka(u: &Universe, r: &RadicalAssignment) -> AxiomReport {
    check_len(u, r);
    let mut report = AxiomReport::new();
    let radical = radical_class(u, r);
    for i in 0..u.len() {
        let act = u.act(i);
        let v = &r.values[i];
        if !is_rees(act, v) {
            report.fail("ka.rees", format!("{} : {}", u.name(i), v));
        }
        let sys = system_of(act, v);
        for m in sys.members() {
            let j = member_index(u, i, m);
            if !radical.contains(j) {
                report.fail(
                    "ka.members-radical",
                    format!("{} member {:?} ({}) is not in the radical class", u.name(i), m, u.name(j)),
                );
            }
        }
        // a system is covered iff each member is, so single subacts suffice
        for (b, l) in u.subacts(i) {
            if b.is_trivial() || !radical.contains(l.index) {
                continue;
            }
            if !sys.members().iter().any(|c| b.is_subset_of(c)) {
                report.fail(
                    "ka.dominates",
                    format!(
                        "{} radical subact {:?} ({}) lies in no member of {}",
                        u.name(i),
                        b.elements,
                        u.name(l.index),
                        v
                    ),
                );
            }
        }
    }
    report
}

/// The four conditions characterising corresponding radical and semisimple classes.
pub fn check_pair_conditions(u: &Universe, r_class: &ActClass, s_class: &ActClass) -> AxiomReport {
    let mut report = AxiomReport::new();
    for i in 0..u.len() {
        if !u.is_trivial(i) && r_class.contains(i) && s_class.contains(i) {
            report.fail("pair.intersection-trivial", u.name(i));
        }
    }
    for i in r_class.members() {
        for (chi, q) in u.congruences(i).iter().zip(u.quotients(i)) {
            if !r_class.contains(q.index) {
                report.fail(
                    "pair.radical-images",
                    format!("{} / {} = {} is outside the radical class", u.name(i), chi, u.name(q.index)),
                );
            }
        }
    }
    for i in s_class.members() {
        for (b, l) in u.subacts(i) {
            if !s_class.contains(l.index) {
                report.fail(
                    "pair.semisimple-subacts",
                    format!(
                        "{} subact {:?} = {} is outside the semisimple class",
                        u.name(i),
                        b.elements,
                        u.name(l.index)
                    ),
                );
            }
        }
    }
    for i in 0..u.len() {
        let act = u.act(i);
        let found = u.rees_congruences(i).iter().any(|rho| {
            system_of(act, rho).members().iter().all(|m| r_class.contains(member_index(u, i, m)))
                && s_class.contains(u.quotient_of(i, rho).index)
        });
        if !found {
            report
                .fail("pair.system-factor", format!("{} has no radical system with semisimple Rees factor", u.name(i)));
        }
    }
    report
}

/// Closure under subacts, bounded products and congruence extensions.
pub fn check_semisimple_closure(u: &Universe, s_class: &ActClass) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.note(NOTE_CONGRUENCE_EXTENSION);
    for i in s_class.members() {
        for (b, l) in u.subacts(i) {
            if !s_class.contains(l.index) {
                report.fail("closure.subacts", format!("{} subact {:?} = {}", u.name(i), b.elements, u.name(l.index)));
            }
        }
    }
    let members: Vec<usize> = s_class.members().collect();
    for (x, &i) in members.iter().enumerate() {
        for &j in &members[x..] {
            let size = u.act(i).size() * u.act(j).size();
            if size > u.max_size() {
                report.skip(
                    "closure.products",
                    format!("{} x {}: size {} > max size {}", u.name(i), u.name(j), size, u.max_size()),
                );
                continue;
            }
            let p = u.act(i).product(u.act(j)).expect("same monoid");
            let k = u.index_of(&p).expect("product within bound");
            if !s_class.contains(k) {
                report.fail("closure.products", format!("{} x {} = {}", u.name(i), u.name(j), u.name(k)));
            }
        }
    }
    for i in 0..u.len() {
        if s_class.contains(i) {
            continue;
        }
        let act = u.act(i);
        for (chi, q) in u.congruences(i).iter().zip(u.quotients(i)) {
            if !s_class.contains(q.index) {
                continue;
            }
            let sys = system_of(act, chi);
            if sys.members().iter().all(|m| s_class.contains(member_index(u, i, m))) {
                report.fail(
                    "closure.congruence-extensions",
                    format!("{} with {}: quotient and system in class, act is not", u.name(i), chi),
                );
            }
        }
    }
    report
}

/// Homomorphic closure, Rees-extension closure and the finite inductive property.
pub fn check_radical_closure(u: &Universe, r_class: &ActClass) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.note(NOTE_INDUCTIVE);
    for i in r_class.members() {
        for (chi, q) in u.congruences(i).iter().zip(u.quotients(i)) {
            if !r_class.contains(q.index) {
                report.fail("closure.images", format!("{} / {} = {}", u.name(i), chi, u.name(q.index)));
            }
        }
    }
    for i in 0..u.len() {
        if r_class.contains(i) {
            continue;
        }
        let act = u.act(i);
        for rho in u.rees_congruences(i) {
            let in_class = system_of(act, rho).members().iter().all(|m| r_class.contains(member_index(u, i, m)));
            if in_class && r_class.contains(u.quotient_of(i, rho).index) {
                report.fail(
                    "closure.rees-extensions",
                    format!("{} with {}: system and factor in class, act is not", u.name(i), rho),
                );
            }
        }
    }
    for i in 0..u.len() {
        let subs = u.subacts(i);
        let inside: Vec<usize> = (0..subs.len()).filter(|&k| r_class.contains(subs[k].1.index)).collect();
        let mut chain = Vec::new();
        inductive_chains(u, r_class, i, &inside, &mut chain, &mut report);
    }
    report
}

// every strictly ascending chain of class subacts has its union in the class
fn inductive_chains(
    u: &Universe,
    r_class: &ActClass,
    i: usize,
    inside: &[usize],
    chain: &mut Vec<usize>,
    report: &mut AxiomReport,
) {
    let subs = u.subacts(i);
    if let Some(&top) = chain.last() {
        let mut union: Vec<usize> = chain.iter().flat_map(|&k| subs[k].0.elements.clone()).collect();
        union.sort_unstable();
        union.dedup();
        let l = u.subact(i, &union).expect("union of subacts is a subact");
        if !r_class.contains(l.index) {
            report.fail(
                "closure.inductive",
                format!(
                    "{} chain ending at {:?} has union {:?} outside the class",
                    u.name(i),
                    subs[top].0.elements,
                    union
                ),
            );
        }
    }
    for &k in inside {
        let extends = chain
            .last()
            .is_none_or(|&top| subs[top].0.len() < subs[k].0.len() && subs[top].0.is_subset_of(&subs[k].0.elements));
        if extends {
            chain.push(k);
            inductive_chains(u, r_class, i, inside, chain, report);
            chain.pop();
        }
    }
}

/// The Kurosh-Amitsur radical with the same radical class as a Hoehnke radical.
pub fn reflect(u: &Universe, r_h: &RadicalAssignment) -> Result<RadicalAssignment> {
    let h = check_hoehnke(u, r_h);
    if let Some(w) = h.witnesses.first() {
        return Err(Error::NotHoehnke(format!("{}: {}", w.property, w.data)));
    }
    Ok(radical_from_radical_class(u, &radical_class(u, r_h)))
}

/// Both characterisations of the reflection plus the adjunction law.
pub fn verify_reflection(
    u: &Universe,
    r_h: &RadicalAssignment,
    ka_list: &[RadicalAssignment],
    hoehnke_list: &[RadicalAssignment],
) -> AxiomReport {
    let mut report = AxiomReport::new();
    report.note(NOTE_UNIVERSE_RELATIVE);
    let r_k = match reflect(u, r_h) {
        Ok(r) => r,
        Err(e) => {
            report.fail("reflection.input-hoehnke", e.to_string());
            return report;
        }
    };
    if !r_k.leq(r_h) {
        report.fail("reflection.deflationary", "reflection is not below its input".to_string());
    }
    if !radical_class(u, &r_k).same_members(&radical_class(u, r_h)) {
        report.fail("reflection.same-radical-class", "radical classes differ".to_string());
    }
    if !ka_list.contains(&r_k) {
        report.fail("reflection.is-ka", format!("reflection not among {} KA radicals", ka_list.len()));
    }
    let below = pointwise_join(u, ka_list.iter().filter(|q| q.leq(r_h)));
    if below != r_k {
        report.fail("reflection.join-of-ka-below", mismatch(u, &below, &r_k));
    }
    let rc = radical_class(u, r_h);
    let same = pointwise_meet(u, hoehnke_list.iter().filter(|h| radical_class(u, h).same_members(&rc)));
    if same != r_k {
        report.fail("reflection.meet-of-same-radical-class", mismatch(u, &same, &r_k));
    }
    for (k, q) in ka_list.iter().enumerate() {
        if q.leq(r_h) != q.leq(&r_k) {
            report.fail("reflection.adjunction", format!("KA radical #{k} compares differently"));
        }
    }
    for i in 0..u.len() {
        let act = u.act(i);
        let outer = system_of(act, &r_h.values[i]);
        if !system_of(act, &r_k.values[i]).refines(&outer) {
            report.fail(
                "reflection.members-inside",
                format!("{}: {} not inside {}", u.name(i), r_k.values[i], r_h.values[i]),
            );
        }
    }
    report
}

fn mismatch(u: &Universe, got: &RadicalAssignment, want: &RadicalAssignment) -> String {
    (0..u.len())
        .find(|&i| got.values[i] != want.values[i])
        .map(|i| format!("{}: {} vs reflection {}", u.name(i), got.values[i], want.values[i]))
        .unwrap_or_default()
}

/// If KA properties (i) and (ii) hold, (iii) and `reflect(r) = r` must follow.
pub fn check_ka_redundancy(u: &Universe, r: &RadicalAssignment) -> AxiomReport {
    let mut report = AxiomReport::new();
    let ka = check_ka(u, r);
    if !(ka.holds("ka.rees") && ka.holds("ka.members-radical")) {
        report.note("properties (i) and (ii) do not both hold; nothing to derive");
        return report;
    }
    for w in ka.witnesses_for("ka.dominates") {
        report.fail("redundancy.third-property", w.data.clone());
    }
    match reflect(u, r) {
        Ok(rk) if rk == *r => {}
        Ok(rk) => report.fail("redundancy.fixpoint", mismatch(u, &rk, r)),
        Err(e) => report.fail("redundancy.fixpoint", e.to_string()),
    }
    report
}

/// Which radicals [`enumerate_radicals`] keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalFilter {
    Hoehnke,
    Hereditary,
    Ka,
}

impl RadicalFilter {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "hoehnke" => Some(Self::Hoehnke),
            "hereditary" => Some(Self::Hereditary),
            "ka" => Some(Self::Ka),
            _ => None,
        }
    }
}

/// Product of lattice sizes, saturating.
pub fn search_space(u: &Universe) -> u128 {
    (0..u.len()).fold(1u128, |acc, i| acc.saturating_mul(u.congruences(i).len() as u128))
}

/// All Hoehnke radicals on the universe passing `filter`, in lexicographic
/// order of their lattice positions.
pub fn enumerate_radicals(u: &Universe, filter: RadicalFilter, bounds: &Bounds) -> Result<Vec<RadicalAssignment>> {
    let space = search_space(u);
    if space > bounds.radical_search {
        return Err(Error::bound("radical search space", space, bounds.radical_search));
    }
    u.warm();
    let search = Search { u, filter };
    let mut prefix: Vec<Partition> = Vec::with_capacity(u.len());
    // assign forced acts sequentially, then branch in parallel on the first choice
    let mut i = 0;
    while i < u.len() && u.congruences(i).len() == 1 {
        prefix.push(u.congruences(i).congruences()[0].clone());
        if !search.consistent(&prefix, i) {
            return Ok(Vec::new());
        }
        i += 1;
    }
    if i == u.len() {
        return Ok(vec![RadicalAssignment::from_values(prefix)]);
    }
    let found = par::flat_map(u.congruences(i).congruences(), |chi| {
        let mut p = prefix.clone();
        p.push(chi.clone());
        let mut out = Vec::new();
        if search.consistent(&p, i) {
            search.extend(&mut p, &mut out);
        }
        out
    });
    Ok(found)
}

struct Search<'a> {
    u: &'a Universe,
    filter: RadicalFilter,
}

impl Search<'_> {
    fn extend(&self, prefix: &mut Vec<Partition>, out: &mut Vec<RadicalAssignment>) {
        let i = prefix.len();
        if i == self.u.len() {
            out.push(RadicalAssignment::from_values(prefix.clone()));
            return;
        }
        for chi in self.u.congruences(i).iter() {
            prefix.push(chi.clone());
            if self.consistent(prefix, i) {
                self.extend(prefix, out);
            }
            prefix.pop();
        }
    }

    // constraints between act i and the already assigned acts 0..=i
    fn consistent(&self, r: &[Partition], i: usize) -> bool {
        let u = self.u;
        for j in 0..=i {
            if u.homs(j, i).iter().any(|f| functoriality_break(r, j, i, f.map()).is_some()) {
                return false;
            }
            if j < i && u.homs(i, j).iter().any(|f| functoriality_break(r, i, j, f.map()).is_some()) {
                return false;
            }
        }
        // proper quotients are smaller, hence listed earlier
        let q = u.quotient_of(i, &r[i]).index;
        debug_assert!(q <= i);
        if q < i && !r[q].is_diagonal() {
            return false;
        }
        match self.filter {
            RadicalFilter::Hoehnke => true,
            RadicalFilter::Hereditary => self.hereditary_ok(r, i),
            RadicalFilter::Ka => self.ka_ok(r, i),
        }
    }

    fn hereditary_ok(&self, r: &[Partition], i: usize) -> bool {
        let subs = self.u.subacts(i);
        (0..subs.len()).all(|k| subs[k].1.index > i || hereditary_break(self.u, r, i, k).is_none())
    }

    fn ka_ok(&self, r: &[Partition], i: usize) -> bool {
        let u = self.u;
        let act = u.act(i);
        let v = &r[i];
        if !is_rees(act, v) {
            return false;
        }
        let sys = system_of(act, v);
        // subacts are never listed after their act, and the whole act is i itself
        let radical = |j: usize| if j == i { v.is_total() } else { r[j].is_total() };
        if !sys.members().iter().all(|m| radical(member_index(u, i, m))) {
            return false;
        }
        u.subacts(i)
            .iter()
            .all(|(b, l)| b.is_trivial() || !radical(l.index) || sys.members().iter().any(|c| b.is_subset_of(c)))
    }
}

/// Rebuilds the Rees congruence of a system given by member lists.
pub fn rees_from_members(u: &Universe, i: usize, members: Vec<Vec<usize>>) -> Result<Partition> {
    let sys = crate::congruence::ReesSystem::new(u.act(i), members)?;
    Ok(rees_of_system(u.act(i), &sys))
}
