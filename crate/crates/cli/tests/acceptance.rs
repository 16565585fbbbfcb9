//! Acceptance suite: one PASS/FAIL line per criterion, all tolerances exact.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use sact::class::enumerate_classes;
use sact::congruence::{enumerate_congruences, is_rees, rees_congruences, rees_of_system, system_of};
use sact::monoid::enumerate_monoids;
use sact::radical::{
    check_ka, check_pair_conditions, check_radical_closure, closed_under_subacts_and_products, enumerate_radicals,
    pointwise_join, pointwise_meet, radical_class, radical_from_radical_class, radical_from_semisimple, reflect,
    semisimple_class,
};
use sact::torsion::{
    coproduct_closure_check, enumerate_torsion_pairs, ka_from_torsion, t_congruence_at, torsion_from_ka,
};
use sact::universe::acts_of_size;
use sact::{ActClass, Bounds, Monoid, RadicalAssignment, RadicalFilter, ReesSystem, Universe};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_monoids() -> Vec<Arc<Monoid>> {
    (1..=2).flat_map(|k| enumerate_monoids(k, 4).unwrap()).map(Arc::new).collect()
}

/// KA radicals from the unpruned oracle, checked equal to the library's list.
fn ka_radicals(u: &Universe) -> Result<Vec<RadicalAssignment>, String> {
    let (_, _, ka) = oracle::Brute::new(u).radicals();
    let got = enumerate_radicals(u, RadicalFilter::Ka, &Bounds::default()).map_err(|e| e.to_string())?;
    let got_set: BTreeSet<_> = got.iter().map(oracle::assignment_of).collect();
    ensure(got_set == ka, || "enumerated KA radicals differ from the oracle".into())?;
    Ok(got)
}

fn hoehnke_radicals(u: &Universe) -> Result<Vec<RadicalAssignment>, String> {
    let (h, _, _) = oracle::Brute::new(u).radicals();
    let got = enumerate_radicals(u, RadicalFilter::Hoehnke, &Bounds::default()).map_err(|e| e.to_string())?;
    let got_set: BTreeSet<_> = got.iter().map(oracle::assignment_of).collect();
    ensure(got_set == h, || "enumerated Hoehnke radicals differ from the oracle".into())?;
    Ok(got)
}

fn congruence_oracle() -> Outcome {
    let mut acts = 0;
    for m in small_monoids() {
        for n in 0..=4 {
            for act in acts_of_size(&m, n) {
                let got: BTreeSet<Vec<usize>> = enumerate_congruences(&act, 6)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|p| p.reps().to_vec())
                    .collect();
                ensure(got == oracle::congruences(&act), || format!("act {:?}", act.rows()))?;
                acts += 1;
            }
        }
    }
    let trivial = Arc::new(Monoid::trivial());
    let bell: Vec<usize> =
        (0..=5).map(|n| enumerate_congruences(&acts_of_size(&trivial, n)[0], 6).unwrap().len()).collect();
    ensure(bell == [1, 1, 2, 5, 15, 52], || format!("Bell sequence {bell:?}"))?;
    Ok(format!("{acts} acts; Bell {bell:?}"))
}

fn rees_correspondence() -> Outcome {
    let mut systems_seen = 0;
    let mut rees_seen = 0;
    for m in small_monoids() {
        for n in 0..=4 {
            for act in acts_of_size(&m, n) {
                for members in oracle::systems(&act) {
                    let sys = ReesSystem::new(&act, members).map_err(|e| e.to_string())?;
                    ensure(system_of(&act, &rees_of_system(&act, &sys)) == sys, || format!("{sys:?}"))?;
                    systems_seen += 1;
                }
                let lattice = enumerate_congruences(&act, 6).unwrap();
                for rho in rees_congruences(&act, &lattice) {
                    ensure(is_rees(&act, &rho), || rho.to_string())?;
                    ensure(rees_of_system(&act, &system_of(&act, &rho)) == rho, || rho.to_string())?;
                    rees_seen += 1;
                }
            }
        }
    }
    Ok(format!("{systems_seen} systems, {rees_seen} Rees congruences"))
}

fn pair_conditions_both_ways() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in [("S2/2", oracle::s2(2)), ("S1/3", oracle::s1(3))] {
        let ka = ka_radicals(&u)?;
        for q in &ka {
            let rep = check_pair_conditions(&u, &radical_class(&u, q), &semisimple_class(&u, q));
            ensure(rep.passed(), || format!("{name}: {:?}", rep.witnesses))?;
        }
        let classes = enumerate_classes(&u, 16).map_err(|e| e.to_string())?;
        let mut passing = 0;
        for r in &classes {
            for s in &classes {
                if !check_pair_conditions(&u, r, s).passed() {
                    continue;
                }
                passing += 1;
                let q = radical_from_radical_class(&u, r);
                ensure(ka.contains(&q), || format!("{name}: {} | {} gives a non-KA radical", r.label, s.label))?;
                ensure(radical_class(&u, &q).same_members(r) && semisimple_class(&u, &q).same_members(s), || {
                    format!("{name}: {} | {} is not the pair of its radical", r.label, s.label)
                })?;
            }
        }
        ensure(passing == ka.len(), || format!("{name}: {passing} pairs for {} KA radicals", ka.len()))?;
        detail.push(format!("{name}: {} KA radicals, {passing} passing pairs", ka.len()));
    }
    Ok(detail.join("; "))
}

fn torsion_bijection() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in [("S2/2", oracle::s2(2)), ("S1/3", oracle::s1(3))] {
        let ka = ka_radicals(&u)?;
        let pairs = enumerate_torsion_pairs(&u, &Bounds::default()).map_err(|e| e.to_string())?;
        ensure(ka.len() == pairs.len(), || format!("{name}: {} vs {}", ka.len(), pairs.len()))?;
        let mut images = BTreeSet::new();
        for tau in &pairs {
            let (q, _) = ka_from_torsion(&u, tau).map_err(|e| e.to_string())?;
            ensure(ka.contains(&q), || format!("{name}: radical of {} not KA", tau.torsion.label))?;
            images.insert(oracle::assignment_of(&q));
            let (back, _) = torsion_from_ka(&u, &q).map_err(|e| e.to_string())?;
            ensure(
                back.torsion.same_members(&tau.torsion) && back.torsion_free.same_members(&tau.torsion_free),
                || format!("{name}: pair {} not recovered", tau.torsion.label),
            )?;
            for i in 0..u.len() {
                let (t, _) = t_congruence_at(&u, &tau.torsion, i);
                ensure(is_rees(u.act(i), &t), || format!("{name}: t({}) not Rees", u.name(i)))?;
                for block in t.blocks().iter().filter(|b| b.len() > 1) {
                    let l = u.subact(i, block).map_err(|e| e.to_string())?;
                    ensure(tau.torsion.contains(l.index), || format!("{name}: block {block:?} of {}", u.name(i)))?;
                }
                ensure(tau.torsion_free.contains(u.quotient_of(i, &t).index), || {
                    format!("{name}: {}/t not torsion-free", u.name(i))
                })?;
            }
        }
        ensure(images.len() == ka.len(), || format!("{name}: map onto KA radicals not injective"))?;
        for q in &ka {
            let (tau, _) = torsion_from_ka(&u, q).map_err(|e| e.to_string())?;
            ensure(&ka_from_torsion(&u, &tau).map_err(|e| e.to_string())?.0 == q, || format!("{name}: round trip"))?;
        }
        detail.push(format!("{name}: {} pairs", pairs.len()));
    }
    Ok(detail.join("; "))
}

/// S1/3 as required, plus Z2/3 where a Hoehnke radical is not KA.
fn reflection_universes() -> Vec<(&'static str, Universe)> {
    vec![("S1/3", oracle::s1(3)), ("Z2/3", oracle::z2(3))]
}

fn reflection_characterisations() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in reflection_universes() {
        let hs = hoehnke_radicals(&u)?;
        let ka = ka_radicals(&u)?;
        let mut moved = 0;
        for (k, h) in hs.iter().enumerate() {
            let rk = reflect(&u, h).map_err(|e| e.to_string())?;
            let below = pointwise_join(&u, ka.iter().filter(|q| q.leq(h)));
            let rc = radical_class(&u, h);
            let same = pointwise_meet(&u, hs.iter().filter(|g| radical_class(&u, g).same_members(&rc)));
            ensure(rk == below, || format!("{name}: hoehnke#{k} join of KA below differs"))?;
            ensure(rk == same, || format!("{name}: hoehnke#{k} meet of same radical class differs"))?;
            moved += usize::from(rk != *h);
        }
        detail.push(format!("{name}: {} Hoehnke, {} KA, {moved} moved", hs.len(), ka.len()));
    }
    Ok(detail.join("; "))
}

fn ka_redundancy() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in reflection_universes() {
        let hs = hoehnke_radicals(&u)?;
        let mut applicable = 0;
        for (k, h) in hs.iter().enumerate() {
            let rep = check_ka(&u, h);
            if !(rep.holds("ka.rees") && rep.holds("ka.members-radical")) {
                continue;
            }
            applicable += 1;
            ensure(rep.holds("ka.dominates"), || format!("{name}: hoehnke#{k} fails the third property"))?;
            ensure(reflect(&u, h).map_err(|e| e.to_string())? == *h, || format!("{name}: hoehnke#{k} moved"))?;
        }
        detail.push(format!("{name}: {applicable} of {} satisfy (i) and (ii)", hs.len()));
    }
    Ok(detail.join("; "))
}

fn reflection_order() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in reflection_universes() {
        let hs = hoehnke_radicals(&u)?;
        let ka = ka_radicals(&u)?;
        let refl: Vec<RadicalAssignment> = hs.iter().map(|h| reflect(&u, h).unwrap()).collect();
        let mut comparisons = 0;
        for (x, h) in hs.iter().enumerate() {
            let hk = &refl[x];
            ensure(hk.leq(h), || format!("{name}: hoehnke#{x} not deflationary"))?;
            ensure(&reflect(&u, hk).unwrap() == hk, || format!("{name}: hoehnke#{x} not idempotent"))?;
            for (y, g) in hs.iter().enumerate() {
                if h.leq(g) {
                    ensure(hk.leq(&refl[y]), || format!("{name}: not monotone at {x} <= {y}"))?;
                }
            }
            for q in &ka {
                ensure(q.leq(h) == q.leq(hk), || format!("{name}: adjunction fails at hoehnke#{x}"))?;
                comparisons += 1;
            }
        }
        detail.push(format!("{name}: {comparisons} adjunction comparisons"));
    }
    Ok(detail.join("; "))
}

fn radical_class_closure() -> Outcome {
    let u = oracle::s2(2);
    let classes = enumerate_classes(&u, 16).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for c in classes.iter().filter(|c| closed_under_subacts_and_products(&u, c)) {
        let r = radical_from_semisimple(&u, c).map_err(|e| e.to_string())?;
        let rep = check_radical_closure(&u, &radical_class(&u, &r));
        for id in ["closure.images", "closure.inductive", "closure.rees-extensions"] {
            ensure(rep.holds(id), || format!("{}: {id} {:?}", c.label, rep.witnesses))?;
        }
        ensure(rep.skipped.is_empty(), || format!("{}: skipped {:?}", c.label, rep.skipped))?;
        checked += 1;
    }
    ensure(checked > 0, || "no closed classes".into())?;
    Ok(format!("S2/2: {checked} of {} classes closed under subacts and products", classes.len()))
}

fn coproduct_claim() -> Outcome {
    let mut detail = Vec::new();
    for (name, u) in [("S2/2", oracle::s2(2)), ("S1/3", oracle::s1(3))] {
        let trivial = ActClass::trivial(&u);
        let rep = coproduct_closure_check(&u, &trivial);
        let point = u.index_by_name("A1.0").unwrap();
        let witness = rep
            .witnesses_for("closure.coproducts")
            .find(|w| w.data.starts_with("A1.0 + A1.0 = A2."))
            .ok_or_else(|| format!("{name}: no singleton coproduct witness"))?;
        ensure(u.act(point).size() == 1, || "A1.0 is not a singleton".into())?;
        let sum = u.act(point).coproduct(u.act(point)).unwrap();
        ensure(sum.size() == 2, || "coproduct of two points is not of size 2".into())?;
        let pairs = enumerate_torsion_pairs(&u, &Bounds::default()).map_err(|e| e.to_string())?;
        let (mut open, mut closed) = (0, 0);
        for tau in &pairs {
            for c in [&tau.torsion, &tau.torsion_free] {
                let r = coproduct_closure_check(&u, c);
                if r.witnesses.is_empty() {
                    closed += 1;
                } else {
                    ensure(r.witnesses.iter().all(|w| w.property == "closure.coproducts"), || {
                        format!("{name}: unexpected witness kind")
                    })?;
                    open += 1;
                }
            }
        }
        detail.push(format!(
            "{name}: `{}`; torsion classes {open} not closed, {closed} closed within bound",
            witness.data
        ));
    }
    Ok(detail.join("; "))
}

fn determinism() -> Outcome {
    let ws = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sact"))
            .args(["--workspace"])
            .arg(ws.path())
            .args(["--max-size", "2", "--format", "records", "theorems", "--monoid", "S2"])
            .env("SACT_CACHE_DIR", ws.path().join("cache"))
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.code() == Some(0), || format!("exit {:?}", first.status.code()))?;
    ensure(second.status.code() == Some(0), || format!("exit {:?}", second.status.code()))?;
    ensure(!first.stdout.is_empty(), || "empty report".into())?;
    ensure(first.stdout == second.stdout, || "reports differ between runs".into())?;
    let ka_line = String::from_utf8_lossy(&first.stdout)
        .lines()
        .find(|l| l.contains(r#""key":"ka radicals""#))
        .map(str::to_string)
        .ok_or("report has no KA-radical count")?;
    Ok(format!("{} bytes identical (cache built then loaded); {ka_line}", first.stdout.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("congruence oracle equivalence", congruence_oracle, Duration::from_secs(10)),
        ("Rees correspondence", rees_correspondence, Duration::from_secs(10)),
        ("pair conditions both directions", pair_conditions_both_ways, Duration::from_secs(120)),
        ("torsion/KA bijection", torsion_bijection, Duration::from_secs(120)),
        ("reflection characterisations", reflection_characterisations, Duration::from_secs(300)),
        ("KA third property redundant", ka_redundancy, Duration::from_secs(300)),
        ("reflection order laws", reflection_order, Duration::from_secs(300)),
        ("radical class closure", radical_class_closure, Duration::from_secs(120)),
        ("coproduct non-closure", coproduct_claim, Duration::from_secs(30)),
        ("determinism", determinism, Duration::from_secs(600)),
    ];
    println!();
    let mut failed = Vec::new();
    for (k, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.1?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        println!("criterion {:>2} {status}: {name} ({elapsed:.2?}) {detail}", k + 1);
        if status == "FAIL" {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
