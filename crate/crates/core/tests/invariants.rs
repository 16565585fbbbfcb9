//! Exhaustive checks of structural invariants on small universes.

mod oracle;

use std::collections::BTreeSet;

use sact::class::enumerate_classes;
use sact::congruence::{enumerate_congruences, is_rees, join, rees_of_system, system_of};
use sact::hom::homs;
use sact::radical::{
    check_hoehnke, closed_under_subacts_and_products, enumerate_radicals, radical_class, radical_from_semisimple,
    reflect, semisimple_class,
};
use sact::torsion::{
    check_preimage_argument, enumerate_torsion_pairs, ka_from_torsion, left_orthogonal, right_orthogonal,
    t_congruence_at, torsion_from_ka,
};
use sact::{ActClass, RadicalFilter, ReesSystem, Universe};

fn universes() -> Vec<Universe> {
    vec![oracle::s1(3), oracle::s2(2), oracle::s2(3), oracle::z2(3)]
}

#[test]
fn coproduct_and_product_universal_properties() {
    let u = oracle::s2(2);
    for a in u.acts() {
        for b in u.acts() {
            let sum = a.coproduct(b).unwrap();
            let prod = a.product(b).unwrap();
            let mut zeros = a.zeros();
            zeros.extend(b.zeros().iter().map(|z| z + a.size()));
            assert_eq!(sum.zeros(), zeros);
            for c in u.acts() {
                let out: BTreeSet<(Vec<usize>, Vec<usize>)> = homs(&sum, c)
                    .unwrap()
                    .iter()
                    .map(|h| (h.map()[..a.size()].to_vec(), h.map()[a.size()..].to_vec()))
                    .collect();
                let want: BTreeSet<(Vec<usize>, Vec<usize>)> = homs(a, c)
                    .unwrap()
                    .iter()
                    .flat_map(|f| homs(b, c).unwrap().into_iter().map(move |g| (f.map().to_vec(), g.map().to_vec())))
                    .collect();
                assert_eq!(out.len(), homs(&sum, c).unwrap().len());
                assert_eq!(out, want);

                let into: BTreeSet<(Vec<usize>, Vec<usize>)> = homs(c, &prod)
                    .unwrap()
                    .iter()
                    .map(|h| {
                        let m = h.map();
                        (m.iter().map(|x| x / b.size()).collect(), m.iter().map(|x| x % b.size()).collect())
                    })
                    .collect();
                let want: BTreeSet<(Vec<usize>, Vec<usize>)> = homs(c, a)
                    .unwrap()
                    .iter()
                    .flat_map(|f| homs(c, b).unwrap().into_iter().map(move |g| (f.map().to_vec(), g.map().to_vec())))
                    .collect();
                assert_eq!(into.len(), homs(c, &prod).unwrap().len());
                assert_eq!(into, want);
            }
        }
    }
}

// members of two systems merged along overlaps
fn merged(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut groups: Vec<BTreeSet<usize>> = Vec::new();
    for m in a.iter().chain(b) {
        let mut g: BTreeSet<usize> = m.iter().copied().collect();
        groups.retain(|h| {
            if h.is_disjoint(&g) {
                true
            } else {
                g.extend(h);
                false
            }
        });
        groups.push(g);
    }
    groups.into_iter().map(|g| g.into_iter().collect()).collect()
}

#[test]
fn join_of_rees_congruences_merges_systems() {
    for u in [oracle::s2(4), oracle::z2(4), oracle::s1(4)] {
        for act in u.acts() {
            let systems = oracle::systems(act);
            for x in &systems {
                for y in &systems {
                    let rx = rees_of_system(act, &ReesSystem::new(act, x.clone()).unwrap());
                    let ry = rees_of_system(act, &ReesSystem::new(act, y.clone()).unwrap());
                    let j = join(act, &rx, &ry).unwrap();
                    assert!(is_rees(act, &j));
                    assert_eq!(j.reps(), oracle::rees_rep(act.size(), &merged(x, y)).as_slice());
                }
            }
        }
    }
}

#[test]
fn reflection_is_monotone_idempotent_deflationary_and_adjoint() {
    let b = sact::Bounds::default();
    for u in universes() {
        let hs = enumerate_radicals(&u, RadicalFilter::Hoehnke, &b).unwrap();
        let ks = enumerate_radicals(&u, RadicalFilter::Ka, &b).unwrap();
        let refl: Vec<_> = hs.iter().map(|h| reflect(&u, h).unwrap()).collect();
        for (h, hk) in hs.iter().zip(&refl) {
            assert!(hk.leq(h));
            assert_eq!(&reflect(&u, hk).unwrap(), hk);
            assert!(ks.contains(hk));
            for (g, gk) in hs.iter().zip(&refl) {
                if h.leq(g) {
                    assert!(hk.leq(gk));
                }
            }
            for q in &ks {
                assert_eq!(q.leq(h), q.leq(hk));
            }
            for i in 0..u.len() {
                let outer = system_of(u.act(i), h.value(i));
                assert!(system_of(u.act(i), hk.value(i)).refines(&outer));
            }
        }
    }
}

#[test]
fn ka_classes_are_characterised_by_images_and_subacts() {
    let b = sact::Bounds::default();
    for u in universes() {
        for q in enumerate_radicals(&u, RadicalFilter::Ka, &b).unwrap() {
            let rc = radical_class(&u, &q);
            let sc = semisimple_class(&u, &q);
            for i in 0..u.len() {
                let act = u.act(i);
                // brute force: every proper quotient onto a semisimple act is trivial
                let no_image = oracle::congruences(act).iter().all(|chi| {
                    let (quo, _) = oracle::quotient(act, chi);
                    quo.size() <= 1 || !sc.contains(oracle::locate(&u, &quo).0)
                });
                assert_eq!(rc.contains(i), no_image, "{}", u.name(i));
                let no_sub = oracle::subacts(act)
                    .iter()
                    .all(|s| s.len() <= 1 || !rc.contains(oracle::locate(&u, &oracle::restrict(act, s)).0));
                assert_eq!(sc.contains(i), no_sub, "{}", u.name(i));
            }
        }
    }
}

// every pairwise product of members fits in the universe, so product closure is fully checked
fn products_fit(u: &Universe, c: &ActClass) -> bool {
    c.members().all(|i| c.members().all(|j| u.act(i).size() * u.act(j).size() <= u.max_size()))
}

#[test]
fn semisimple_round_trip_on_closed_classes() {
    for u in universes() {
        let classes = enumerate_classes(&u, 16).unwrap();
        for c in classes.iter().filter(|c| closed_under_subacts_and_products(&u, c)) {
            let r = radical_from_semisimple(&u, c).unwrap();
            assert!(check_hoehnke(&u, &r).passed(), "{}", c.label);
            let back = semisimple_class(&u, &r);
            assert!(c.is_subset(&back), "{}", c.label);
            if products_fit(&u, c) {
                assert!(back.same_members(c), "{}", c.label);
            }
        }
    }
}

#[test]
fn bounded_products_can_hide_a_subdirect_member() {
    // the three-element set embeds in the square of the two-element set,
    // which lies outside the universe
    let u = oracle::s1(3);
    let c = ActClass::new(&u, "two", [u.index_by_name("A2.0").unwrap()]);
    assert!(closed_under_subacts_and_products(&u, &c));
    let back = semisimple_class(&u, &radical_from_semisimple(&u, &c).unwrap());
    assert_eq!(back.describe_nontrivial(&u), "{A2.0 A3.0}");
}

#[test]
fn orthogonality_is_antitone_and_closes() {
    for u in universes() {
        let classes = enumerate_classes(&u, 16).unwrap();
        let rights: Vec<ActClass> = classes.iter().map(|c| right_orthogonal(&u, c)).collect();
        let lefts: Vec<ActClass> = classes.iter().map(|c| left_orthogonal(&u, c)).collect();
        for (x, c) in classes.iter().enumerate() {
            let lr = left_orthogonal(&u, &rights[x]);
            assert!(c.is_subset(&lr));
            assert!(right_orthogonal(&u, &lr).same_members(&rights[x]));
            let rl = right_orthogonal(&u, &lefts[x]);
            assert!(left_orthogonal(&u, &rl).same_members(&lefts[x]));
            for (y, d) in classes.iter().enumerate() {
                if c.is_subset(d) {
                    assert!(rights[y].is_subset(&rights[x]));
                    assert!(lefts[y].is_subset(&lefts[x]));
                }
            }
        }
    }
}

#[test]
fn torsion_pairs_and_ka_radicals_correspond() {
    let b = sact::Bounds::default();
    for u in universes() {
        let pairs = enumerate_torsion_pairs(&u, &b).unwrap();
        let ks = enumerate_radicals(&u, RadicalFilter::Ka, &b).unwrap();
        assert_eq!(pairs.len(), ks.len(), "{}", u.max_size());
        for tau in &pairs {
            for i in 0..u.len() {
                if tau.torsion.contains(i) && tau.torsion_free.contains(i) {
                    assert!(u.is_trivial(i));
                }
                let (t, rep) = t_congruence_at(&u, &tau.torsion, i);
                assert!(rep.passed());
                assert!(is_rees(u.act(i), &t));
                assert!(tau.torsion_free.contains(u.quotient_of(i, &t).index));
                for block in t.blocks().iter().filter(|b| b.len() > 1) {
                    let l = u.subact(i, block).unwrap();
                    assert!(tau.torsion.contains(l.index));
                }
            }
            assert!(check_preimage_argument(&u, tau).passed());
            let (q, _) = ka_from_torsion(&u, tau).unwrap();
            assert!(ks.contains(&q));
            let (back, _) = torsion_from_ka(&u, &q).unwrap();
            assert!(back.torsion.same_members(&tau.torsion));
            assert!(back.torsion_free.same_members(&tau.torsion_free));
        }
        for q in &ks {
            let (tau, _) = torsion_from_ka(&u, q).unwrap();
            assert_eq!(&ka_from_torsion(&u, &tau).unwrap().0, q);
        }
    }
}

#[test]
fn universe_lattices_match_direct_enumeration() {
    for u in universes() {
        for i in 0..u.len() {
            let direct = enumerate_congruences(u.act(i), 6).unwrap();
            assert_eq!(u.congruences(i).congruences(), direct.congruences());
        }
    }
}
