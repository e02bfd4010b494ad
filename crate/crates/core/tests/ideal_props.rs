mod common;

use common::{artinian_ideals, borel_closure_all_pairs, ideal_subset, vectors};
use proptest::prelude::*;
use ssp_core::{borel_closure, minimalize, Class, Monomial, MonomialIdeal};

fn monomials(dim: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(prop::collection::vec(0u32..4, dim), 1..6)
        .prop_map(|v| v.into_iter().map(Monomial::new).collect())
}

proptest! {
    #[test]
    fn minimalize_is_idempotent_and_order_free(
        (set, shuffled) in monomials(3).prop_flat_map(|s| (Just(s.clone()), Just(s).prop_shuffle()))
    ) {
        let once = minimalize(set.clone());
        prop_assert_eq!(minimalize(once.clone()), once.clone());
        prop_assert_eq!(minimalize(shuffled), once);
        let ideal = MonomialIdeal::new(3, set.clone()).unwrap();
        for g in &set {
            prop_assert!(ideal.contains(g).unwrap());
        }
    }

    #[test]
    fn membership_is_closed_under_multiplication(set in monomials(3), probe in prop::collection::vec(0u32..5, 3)) {
        let ideal = MonomialIdeal::new(3, set).unwrap();
        let m = Monomial::new(probe.clone());
        if ideal.contains(&m).unwrap() {
            for j in 0..3 {
                let mut up = probe.clone();
                up[j] += 1;
                prop_assert!(ideal.contains(&Monomial::new(up)).unwrap());
            }
        }
    }

    #[test]
    fn closure_is_strongly_stable_and_idempotent(dim in 1usize..4, set in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..4)) {
        let set: Vec<Monomial> = set.into_iter().map(|v| Monomial::new(v[..dim].to_vec())).collect();
        let closed = borel_closure(set.clone()).unwrap();
        prop_assert!(closed.is_strongly_stable());
        for a in &set {
            prop_assert!(closed.contains(a).unwrap());
        }
        prop_assert_eq!(&borel_closure(closed.gens().to_vec()).unwrap(), &closed);
        prop_assert_eq!(&borel_closure_all_pairs(&set), &closed);
    }
}

/// Strongly stable Artinian ideals used as the test universe.
fn stable_universe() -> Vec<MonomialIdeal> {
    let mut out = Vec::new();
    for d in 1..=3 {
        out.extend(artinian_ideals(
            d,
            if d == 3 { 4 } else { 6 },
            Class::StronglyStable,
        ));
    }
    out
}

#[test]
fn closure_is_the_smallest_stable_ideal() {
    let universe = stable_universe();
    for d in 1..=3usize {
        let singles: Vec<Monomial> = vectors(d, 3).into_iter().map(Monomial::new).collect();
        let mut seeds: Vec<Vec<Monomial>> = singles.iter().map(|a| vec![a.clone()]).collect();
        for (i, a) in singles.iter().enumerate() {
            for b in &singles[i + 1..] {
                seeds.push(vec![a.clone(), b.clone()]);
            }
        }
        let ambient: Vec<&MonomialIdeal> = universe.iter().filter(|j| j.dim() == d).collect();
        for seed in seeds {
            let closed = borel_closure(seed.clone()).unwrap();
            for j in &ambient {
                if seed.iter().all(|a| j.contains(a).unwrap()) {
                    assert!(ideal_subset(&closed, j), "Borel({seed:?}) not inside {j}");
                }
            }
        }
    }
}

#[test]
fn bgens_generate_and_are_generators() {
    for ideal in stable_universe() {
        let bg = ideal.bgens().unwrap();
        assert!(bg.iter().all(|b| ideal.gens().contains(b)));
        assert_eq!(borel_closure(bg.clone()).unwrap(), ideal);
        // construction order of the generators is irrelevant
        let reversed = MonomialIdeal::new(ideal.dim(), ideal.gens().iter().rev().cloned()).unwrap();
        assert_eq!(reversed.bgens().unwrap(), bg);
    }
}

#[test]
fn bgens_rejects_unstable() {
    for ideal in artinian_ideals(2, 4, Class::All) {
        if !ideal.is_strongly_stable() {
            assert!(ideal.bgens().is_err());
        }
    }
}

#[test]
fn pure_powers_in_stable_and_symmetric_classes() {
    for d in 1..=3 {
        for ideal in artinian_ideals(d, 3, Class::StronglyStable) {
            let n = ideal.side().unwrap();
            let degrees: Vec<u32> = ideal.pure_power_degrees().into_iter().flatten().collect();
            assert_eq!(degrees.len(), d);
            assert_eq!(
                degrees[d - 1],
                n,
                "x_d carries the largest power in {ideal}"
            );
            assert!(degrees.iter().all(|&k| k <= n));
        }
        for ideal in artinian_ideals(d, 3, Class::TotallySymmetric) {
            let n = ideal.side().unwrap();
            assert!(ideal.pure_power_degrees().iter().all(|&k| k == Some(n)));
        }
    }
}

#[test]
fn symmetric_iff_membership_is_permutation_invariant() {
    for d in 1..=3 {
        for ideal in artinian_ideals(d, 3, Class::All) {
            let n = ideal.side().unwrap();
            let invariant = vectors(d, n + 1).into_iter().all(|v| {
                let inside = ideal.contains(&Monomial::new(v.clone())).unwrap();
                Monomial::new(v)
                    .orbit()
                    .iter()
                    .all(|w| ideal.contains(w).unwrap() == inside)
            });
            assert_eq!(ideal.is_symmetric(), invariant, "{ideal}");
        }
    }
}

#[test]
fn strongly_stable_check_on_generators_matches_all_monomials() {
    for d in 2..=3 {
        for ideal in artinian_ideals(d, 3, Class::All) {
            let n = ideal.side().unwrap();
            let exchange_closed = vectors(d, n + 1).into_iter().all(|v| {
                let mono = Monomial::new(v);
                if !ideal.contains(&mono).unwrap() {
                    return true;
                }
                (1..d).all(|j| {
                    (0..j).all(|i| {
                        mono.exchange(i, j)
                            .is_none_or(|x| ideal.contains(&x).unwrap())
                    })
                })
            });
            assert_eq!(ideal.is_strongly_stable(), exchange_closed, "{ideal}");
        }
    }
}
