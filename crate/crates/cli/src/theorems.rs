//! The verification battery: every checkable statement run on one universe.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sact::class::enumerate_classes;
use sact::radical::{
    check_hereditary, check_ka_redundancy, check_pair_conditions, check_radical_closure,
    closed_under_subacts_and_products, enumerate_radicals, radical_class, radical_from_radical_class,
    radical_from_semisimple, reflect, semisimple_class, verify_reflection,
};
use sact::torsion::{
    check_preimage_argument, check_torsion_theory, coproduct_closure_check, enumerate_torsion_pairs, ka_from_torsion,
    left_orthogonal, right_orthogonal, torsion_from_ka,
};
use sact::{ActClass, Bounds, RadicalAssignment, RadicalFilter, TorsionPair, Universe};

use crate::output::{Report, Section};
use crate::workspace::Workspace;

/// Classes examined by the orthogonality section before sampling kicks in.
pub const SAMPLE_LIMIT: usize = 1 << 10;

/// Runs the battery on `monoid/max_size`. Bound failures become skips.
pub fn run(ws: &Workspace, monoid: &str, max_size: usize, seed: u64) -> Report {
    let subject = format!("{monoid}/{max_size}");
    let mut report = Report::new("theorems");
    let start = Instant::now();
    match ws.universe(monoid, max_size) {
        Ok((u, _)) => {
            let mut s = Section::new("universe", &subject);
            s.info("acts", u.len());
            let sizes: Vec<String> = u.size_counts().iter().map(ToString::to_string).collect();
            s.info("acts by size", sizes.join(" "));
            s.elapsed = start.elapsed();
            report.push(s);
            for s in battery(&u, &ws.bounds, &subject, seed) {
                report.push(s);
            }
        }
        Err(e) => {
            let mut s = Section::new("universe", &subject);
            s.report.skip("universe", e.to_string());
            s.elapsed = start.elapsed();
            report.push(s);
        }
    }
    report
}

struct Radicals {
    hoehnke: Vec<RadicalAssignment>,
    hereditary: Vec<RadicalAssignment>,
    ka: Vec<RadicalAssignment>,
}

fn section(name: &str, subject: &str, f: impl FnOnce(&mut Section)) -> Section {
    let start = Instant::now();
    let mut s = Section::new(name, subject);
    f(&mut s);
    s.elapsed = start.elapsed();
    s
}

fn skipped(name: &str, subject: &str, reason: &str) -> Section {
    let mut s = Section::new(name, subject);
    s.report.skip(name, reason);
    s
}

/// Every section after the universe summary, in a fixed order.
pub fn battery(u: &Universe, bounds: &Bounds, subject: &str, seed: u64) -> Vec<Section> {
    let mut out = Vec::new();
    let mut radicals = None;
    out.push(section("radicals", subject, |s| {
        let found = (|| {
            Ok::<_, sact::Error>(Radicals {
                hoehnke: enumerate_radicals(u, RadicalFilter::Hoehnke, bounds)?,
                hereditary: enumerate_radicals(u, RadicalFilter::Hereditary, bounds)?,
                ka: enumerate_radicals(u, RadicalFilter::Ka, bounds)?,
            })
        })();
        s.info("search space", sact::radical::search_space(u));
        match found {
            Ok(r) => {
                s.info("hoehnke radicals", r.hoehnke.len());
                s.info("hereditary radicals", r.hereditary.len());
                s.info("ka radicals", r.ka.len());
                for (k, h) in r.hereditary.iter().enumerate() {
                    for w in check_hereditary(u, h).witnesses {
                        s.report.fail(w.property, format!("hereditary#{k}: {}", w.data));
                    }
                }
                radicals = Some(r);
            }
            Err(e) => s.report.skip("radicals", e.to_string()),
        }
    }));
    let mut pairs = None;
    let torsion = section("torsion-theories", subject, |s| match enumerate_torsion_pairs(u, bounds) {
        Ok(ps) => {
            s.info("torsion theories", ps.len());
            for (k, tau) in ps.iter().enumerate() {
                s.info(format!("torsion#{k}"), tau.torsion.describe_nontrivial(u));
                for w in check_torsion_theory(u, tau).witnesses {
                    s.report.fail(w.property, format!("torsion#{k}: {}", w.data));
                }
            }
            pairs = Some(ps);
        }
        Err(e) => s.report.skip("torsion-theories", e.to_string()),
    });
    let classes = enumerate_classes(u, bounds.class_enumeration_acts);

    const NO_RADICALS: &str = "radical enumeration exceeded its bound";
    const NO_PAIRS: &str = "torsion enumeration exceeded its bound";
    match &radicals {
        Some(r) => {
            out.push(section("semisimple-determines-radical", subject, |s| {
                for (k, h) in r.hoehnke.iter().enumerate() {
                    match radical_from_semisimple(u, &semisimple_class(u, h)) {
                        Ok(back) if back == *h => {}
                        Ok(_) => s.report.fail("semisimple.determines", format!("hoehnke#{k}")),
                        Err(e) => s.report.fail("semisimple.determines", format!("hoehnke#{k}: {e}")),
                    }
                }
            }));
            out.push(section("class-characterizations", subject, |s| {
                for (k, q) in r.ka.iter().enumerate() {
                    let rc = radical_class(u, q);
                    let sc = semisimple_class(u, q);
                    if !sact::radical::no_nontrivial_image_in(u, &sc).same_members(&rc) {
                        s.report.fail("classes.radical-from-semisimple", format!("ka#{k}"));
                    }
                    if !sact::radical::no_nontrivial_subact_in(u, &rc).same_members(&sc) {
                        s.report.fail("classes.semisimple-from-radical", format!("ka#{k}"));
                    }
                    if radical_from_radical_class(u, &rc) != *q {
                        s.report.fail("classes.radical-from-class", format!("ka#{k}"));
                    }
                }
            }));
            out.push(section("pair-conditions", subject, |s| {
                for (k, q) in r.ka.iter().enumerate() {
                    let rep = check_pair_conditions(u, &radical_class(u, q), &semisimple_class(u, q));
                    for w in rep.witnesses {
                        s.report.fail(w.property, format!("ka#{k}: {}", w.data));
                    }
                }
            }));
            out.push(match &classes {
                Ok(cs) => section("pair-conditions-converse", subject, |s| pair_converse(u, cs, &r.ka, s)),
                Err(e) => skipped("pair-conditions-converse", subject, &e.to_string()),
            });
        }
        None => {
            for name in [
                "semisimple-determines-radical",
                "class-characterizations",
                "pair-conditions",
                "pair-conditions-converse",
            ] {
                out.push(skipped(name, subject, NO_RADICALS));
            }
        }
    }
    out.push(torsion);
    match (&radicals, &pairs) {
        (Some(r), Some(ps)) => {
            out.push(section("torsion-correspondence", subject, |s| correspondence(u, &r.ka, ps, s)))
        }
        (None, _) => out.push(skipped("torsion-correspondence", subject, NO_RADICALS)),
        (_, None) => out.push(skipped("torsion-correspondence", subject, NO_PAIRS)),
    }
    match &pairs {
        Some(ps) => out.push(section("torsion-construction", subject, |s| {
            for (k, tau) in ps.iter().enumerate() {
                for w in check_preimage_argument(u, tau).witnesses {
                    s.report.fail(w.property, format!("torsion#{k}: {}", w.data));
                }
            }
        })),
        None => out.push(skipped("torsion-construction", subject, NO_PAIRS)),
    }
    out.push(match &classes {
        Ok(cs) => section("orthogonality", subject, |s| orthogonality(u, cs, seed, s)),
        Err(e) => skipped("orthogonality", subject, &e.to_string()),
    });
    out.push(match &classes {
        Ok(cs) => section("radical-class-closure", subject, |s| radical_closure(u, cs, s)),
        Err(e) => skipped("radical-class-closure", subject, &e.to_string()),
    });
    match &radicals {
        Some(r) => {
            out.push(section("reflection", subject, |s| {
                for (k, h) in r.hoehnke.iter().enumerate() {
                    let rep = verify_reflection(u, h, &r.ka, &r.hoehnke);
                    for w in rep.witnesses {
                        s.report.fail(w.property, format!("hoehnke#{k}: {}", w.data));
                    }
                }
                s.report.note(sact::radical::NOTE_UNIVERSE_RELATIVE);
            }));
            out.push(section("reflection-order", subject, |s| reflection_order(u, r, s)));
            out.push(section("ka-redundancy", subject, |s| {
                let mut applicable = 0;
                for (k, h) in r.hoehnke.iter().enumerate() {
                    let rep = check_ka_redundancy(u, h);
                    if rep.notes.is_empty() {
                        applicable += 1;
                    }
                    for w in rep.witnesses {
                        s.report.fail(w.property, format!("hoehnke#{k}: {}", w.data));
                    }
                }
                s.info("radicals with properties (i) and (ii)", applicable);
            }));
        }
        None => {
            for name in ["reflection", "reflection-order", "ka-redundancy"] {
                out.push(skipped(name, subject, NO_RADICALS));
            }
        }
    }
    match &pairs {
        Some(ps) => out.push(section("coproducts", subject, |s| coproducts(u, ps, s))),
        None => out.push(skipped("coproducts", subject, NO_PAIRS)),
    }
    out
}

// classes closed under quotients, resp. subacts; the necessary halves of the pair conditions
fn closed_under_images(u: &Universe, c: &ActClass) -> bool {
    c.members().all(|i| u.quotients(i).iter().all(|q| c.contains(q.index)))
}

fn closed_under_subacts(u: &Universe, c: &ActClass) -> bool {
    c.members().all(|i| u.subacts(i).iter().all(|(_, l)| c.contains(l.index)))
}

fn pair_converse(u: &Universe, classes: &[ActClass], ka: &[RadicalAssignment], s: &mut Section) {
    let rs: Vec<&ActClass> = classes.iter().filter(|c| closed_under_images(u, c)).collect();
    let ss: Vec<&ActClass> = classes.iter().filter(|c| closed_under_subacts(u, c)).collect();
    let mut passing = 0;
    for r in &rs {
        for sc in &ss {
            if !check_pair_conditions(u, r, sc).passed() {
                continue;
            }
            passing += 1;
            let q = radical_from_radical_class(u, r);
            let label = format!("{} | {}", r.label, sc.label);
            if !ka.contains(&q) {
                s.report.fail("pair.converse-ka", format!("{label}: induced radical is not KA"));
            }
            if !radical_class(u, &q).same_members(r) || !semisimple_class(u, &q).same_members(sc) {
                s.report.fail("pair.converse-classes", format!("{label}: classes of the induced radical differ"));
            }
        }
    }
    s.info("candidate radical classes", rs.len());
    s.info("candidate semisimple classes", ss.len());
    s.info("pairs passing", passing);
    if passing != ka.len() {
        s.report.fail("pair.converse-count", format!("{passing} passing pairs for {} KA radicals", ka.len()));
    }
}

fn correspondence(u: &Universe, ka: &[RadicalAssignment], pairs: &[TorsionPair], s: &mut Section) {
    s.info("ka radicals", ka.len());
    s.info("torsion theories", pairs.len());
    if ka.len() != pairs.len() {
        s.report.fail("torsion.bijection", format!("{} KA radicals, {} torsion theories", ka.len(), pairs.len()));
    }
    for (k, q) in ka.iter().enumerate() {
        match torsion_from_ka(u, q) {
            Ok((tau, rep)) => {
                for w in rep.witnesses {
                    s.report.fail(w.property, format!("ka#{k}: {}", w.data));
                }
                if !pairs.iter().any(|p| p.torsion.same_members(&tau.torsion)) {
                    s.report.fail("torsion.bijection", format!("ka#{k}: pair not enumerated"));
                }
                match ka_from_torsion(u, &tau) {
                    Ok((back, _)) if back == *q => {}
                    Ok(_) => s.report.fail("torsion.round-trip", format!("ka#{k}: radical changed")),
                    Err(e) => s.report.fail("torsion.round-trip", format!("ka#{k}: {e}")),
                }
            }
            Err(e) => s.report.fail("torsion.bijection", format!("ka#{k}: {e}")),
        }
    }
    for (k, tau) in pairs.iter().enumerate() {
        match ka_from_torsion(u, tau) {
            Ok((q, rep)) => {
                for w in rep.witnesses {
                    s.report.fail(w.property, format!("torsion#{k}: {}", w.data));
                }
                if !ka.contains(&q) {
                    s.report.fail("torsion.bijection", format!("torsion#{k}: radical not enumerated"));
                }
                match torsion_from_ka(u, &q) {
                    Ok((back, _))
                        if back.torsion.same_members(&tau.torsion)
                            && back.torsion_free.same_members(&tau.torsion_free) => {}
                    Ok(_) => s.report.fail("torsion.round-trip", format!("torsion#{k}: pair changed")),
                    Err(e) => s.report.fail("torsion.round-trip", format!("torsion#{k}: {e}")),
                }
            }
            Err(e) => s.report.fail("torsion.bijection", format!("torsion#{k}: {e}")),
        }
    }
}

fn orthogonality(u: &Universe, classes: &[ActClass], seed: u64, s: &mut Section) {
    let chosen: Vec<&ActClass> = if classes.len() > SAMPLE_LIMIT {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v: Vec<&ActClass> = classes.choose_multiple(&mut rng, SAMPLE_LIMIT).collect();
        v.sort_by_key(|c| c.label.clone());
        s.info("sampled classes", format!("{} of {} (seed {seed})", v.len(), classes.len()));
        v
    } else {
        s.info("classes", classes.len());
        classes.iter().collect()
    };
    let rights: Vec<ActClass> = chosen.iter().map(|c| right_orthogonal(u, c)).collect();
    for (c, r) in chosen.iter().zip(&rights) {
        let lr = left_orthogonal(u, r);
        if !c.is_subset(&lr) {
            s.report.fail("orthogonality.inflationary", c.label.clone());
        }
        if !right_orthogonal(u, &lr).same_members(r) {
            s.report.fail("orthogonality.triple", c.label.clone());
        }
    }
    for (x, c) in chosen.iter().enumerate() {
        for (y, d) in chosen.iter().enumerate() {
            if c.is_subset(d) && !rights[y].is_subset(&rights[x]) {
                s.report.fail("orthogonality.antitone", format!("{} within {}", c.label, d.label));
            }
        }
    }
}

fn radical_closure(u: &Universe, classes: &[ActClass], s: &mut Section) {
    let mut checked = 0;
    for c in classes.iter().filter(|c| closed_under_subacts_and_products(u, c)) {
        checked += 1;
        match radical_from_semisimple(u, c) {
            Ok(r) => {
                for w in check_radical_closure(u, &radical_class(u, &r)).witnesses {
                    s.report.fail(w.property, format!("{}: {}", c.label, w.data));
                }
            }
            Err(e) => s.report.fail("closure.radical", format!("{}: {e}", c.label)),
        }
    }
    s.info("classes closed under subacts and products", checked);
    s.report.note(sact::radical::NOTE_INDUCTIVE);
}

fn reflection_order(u: &Universe, r: &Radicals, s: &mut Section) {
    let reflected: Vec<Option<RadicalAssignment>> = r.hoehnke.iter().map(|h| reflect(u, h).ok()).collect();
    for (x, h) in r.hoehnke.iter().enumerate() {
        let Some(hk) = &reflected[x] else {
            s.report.fail("reflection.input-hoehnke", format!("hoehnke#{x}"));
            continue;
        };
        if !hk.leq(h) {
            s.report.fail("reflection.deflationary", format!("hoehnke#{x}"));
        }
        if reflect(u, hk).ok().as_ref() != Some(hk) {
            s.report.fail("reflection.idempotent", format!("hoehnke#{x}"));
        }
        for (y, g) in r.hoehnke.iter().enumerate() {
            if let Some(gk) = &reflected[y] {
                if h.leq(g) && !hk.leq(gk) {
                    s.report.fail("reflection.monotone", format!("hoehnke#{x} <= hoehnke#{y}"));
                }
            }
        }
    }
}

fn coproducts(u: &Universe, pairs: &[TorsionPair], s: &mut Section) {
    let mut classes: Vec<ActClass> = vec![ActClass::trivial(u).with_label("trivial")];
    for tau in pairs {
        for c in [&tau.torsion, &tau.torsion_free] {
            if !classes.iter().any(|x| x.same_members(c)) {
                classes.push(c.clone());
            }
        }
    }
    for c in &classes {
        let rep = coproduct_closure_check(u, c);
        let verdict = match (rep.witnesses.first(), rep.skipped.len()) {
            (Some(w), _) => format!("not closed: {}", w.data),
            (None, 0) => "closed".to_string(),
            (None, n) => format!("closed within the bound ({n} coproducts too large)"),
        };
        s.info(c.describe_nontrivial(u), verdict);
    }
}
