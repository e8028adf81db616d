use num::{BigInt, Integer};
use proptest::prelude::*;
use weightnorm::cumulants::{
    brute_cumulants, closed_form_stats, desk_scale_catalog, lemma_cumulant, lemma_cumulants,
    minuscule_nodes, minuscule_poset, multiplication_permutes_exponents, pp_distribution,
    rational_catalan_distribution, syt_maj_distribution, Catalog, QProduct,
};
use weightnorm::numeric::{int, Rational};
use weightnorm::repcore::weyl_dim;
use weightnorm::rootsystem::{CartanType, Family, RootSystem, Weight};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap())
}

#[test]
fn lemma_matches_expansion_on_catalog() {
    for entry in desk_scale_catalog() {
        let d = entry.distribution().unwrap();
        assert_eq!(brute_cumulants(&d, 6).unwrap(), lemma_cumulants(&d, 6), "{entry}");
    }
}

#[test]
fn odd_cumulants_vanish() {
    for entry in desk_scale_catalog() {
        let d = entry.distribution().unwrap();
        for r in [3, 5, 7] {
            assert_eq!(lemma_cumulant(&d, r), int(0), "{entry}");
        }
    }
}

#[test]
fn closed_forms_match_lemma() {
    let mut kappa4_checked = 0;
    for entry in desk_scale_catalog() {
        let d = entry.distribution().unwrap();
        let cf = closed_form_stats(&entry).unwrap();
        assert_eq!(cf.mean, lemma_cumulant(&d, 1), "{entry}");
        if let Some(v) = &cf.variance {
            assert_eq!(v, &lemma_cumulant(&d, 2), "{entry}");
        }
        if let Some(k4) = &cf.kappa4 {
            assert_eq!(k4, &lemma_cumulant(&d, 4), "{entry}");
            kappa4_checked += 1;
        }
    }
    assert!(kappa4_checked > 10);
}

#[test]
fn box_variance() {
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            for c in 0..=3i64 {
                let entry = Catalog::rectangle_pp(a as usize, b as usize, c as u64).unwrap();
                let d = entry.distribution().unwrap();
                assert_eq!(lemma_cumulant(&d, 2), int(a * b * c * (a + b + c)) / int(12));
            }
        }
    }
}

#[test]
fn rectangle_major_index_mean() {
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            let d = Catalog::rectangle_syt(a as usize, b as usize).unwrap().distribution().unwrap();
            assert_eq!(lemma_cumulant(&d, 1), int(a * (a - 1) * b * (b - 1)) / int(4));
            assert_eq!(brute_cumulants(&d, 1).unwrap()[0], int(a * (a - 1) * b * (b - 1)) / int(4));
        }
    }
}

#[test]
fn plane_partitions_match_enumeration() {
    for a in 1..=3 {
        for b in 1..=3 {
            let poset = minuscule_poset(&RootSystem::build(CartanType::new(Family::A, a + b - 1).unwrap()), a).unwrap();
            assert_eq!(poset.size(), a * b);
            for k in 0..=3 {
                let product = pp_distribution(&poset, k).expand().unwrap();
                assert_eq!(product, poset.brute_plane_partitions(k as u32), "{a}x{b} k={k}");
            }
        }
    }
    for (t, node) in [("D4", 1), ("D5", 5), ("E6", 1), ("B3", 3), ("C3", 1)] {
        let poset = minuscule_poset(&rs(t), node).unwrap();
        for k in 0..=2 {
            let product = pp_distribution(&poset, k).expand().unwrap();
            assert_eq!(product, poset.brute_plane_partitions(k as u32), "{t} node {node} k={k}");
        }
    }
}

#[test]
fn major_index_total_counts_linear_extensions() {
    for (t, node) in [("A3", 2), ("A5", 3), ("A5", 2), ("D4", 1), ("D5", 5), ("E6", 1), ("B3", 3)] {
        let poset = minuscule_poset(&rs(t), node).unwrap();
        let poly = syt_maj_distribution(&poset).expand().unwrap();
        let total: Rational = poly.coeffs().iter().sum();
        assert_eq!(total, Rational::from_integer(poset.linear_extension_count()), "{t}");
    }
}

#[test]
fn minuscule_poset_invariants() {
    let mut types = Vec::new();
    for n in 1..=7 {
        types.push(CartanType::new(Family::A, n).unwrap());
    }
    for n in 2..=6 {
        types.push(CartanType::new(Family::B, n).unwrap());
        types.push(CartanType::new(Family::C, n).unwrap());
    }
    for n in 4..=7 {
        types.push(CartanType::new(Family::D, n).unwrap());
    }
    types.push(CartanType::new(Family::E, 6).unwrap());
    types.push(CartanType::new(Family::E, 7).unwrap());
    for t in types {
        let r = RootSystem::build(t);
        for node in minuscule_nodes(t) {
            let poset = minuscule_poset(&r, node).unwrap();
            let h = r.h();
            let total: u32 = poset.heights().iter().sum();
            assert_eq!(2 * total, h * poset.size() as u32, "{t} node {node}");
            assert!(poset.heights().iter().all(|&x| x >= 1 && x < h));
            let omega = Weight::fundamental(r.rank(), node - 1);
            assert_eq!(poset.order_ideal_count(), weyl_dim(&r, &omega).unwrap(), "{t} node {node}");
            // Minuscule: the representation is a single Weyl orbit.
            assert_eq!(BigInt::from(r.weyl_orbit(&omega).unwrap().len()), weyl_dim(&r, &omega).unwrap());
        }
        for node in 1..=r.rank() {
            if !minuscule_nodes(t).contains(&node) {
                let omega = Weight::fundamental(r.rank(), node - 1);
                assert!(BigInt::from(r.weyl_orbit(&omega).unwrap().len()) < weyl_dim(&r, &omega).unwrap());
            }
        }
    }
}

#[test]
fn type_a_posets_are_rectangles() {
    for n in 2..=7usize {
        let r = RootSystem::build(CartanType::new(Family::A, n - 1).unwrap());
        for i in 1..n {
            let poset = minuscule_poset(&r, i).unwrap();
            let mut expected: Vec<u32> =
                (1..=i).flat_map(|a| (1..=n - i).map(move |b| (a + b - 1) as u32)).collect();
            expected.sort_unstable();
            assert_eq!(poset.heights(), expected.as_slice());
        }
    }
}

#[test]
fn multiplication_by_p_permutes_exponents() {
    for t in ["A1", "A2", "A3", "B2", "B3", "D4", "G2", "F4", "E6", "H3", "H4", "I2(7)"] {
        let r = rs(t);
        for p in 1..=30u64 {
            if p.gcd(&(r.h() as u64)) == 1 {
                if r.cartan_type().is_crystallographic() {
                    assert!(multiplication_permutes_exponents(&r, p), "{t} p={p}");
                }
                let entry = Catalog::RationalCatalan { cartan_type: r.cartan_type(), p };
                let d = entry.distribution().unwrap();
                assert!(d.expand().unwrap().has_nonnegative_coeffs(), "{t} p={p}");
                let cf = closed_form_stats(&entry).unwrap();
                assert_eq!(cf.mean, lemma_cumulant(&d, 1), "{t} p={p}");
                if let Some(v) = cf.variance {
                    assert_eq!(v, lemma_cumulant(&d, 2), "{t} p={p}");
                }
            }
        }
    }
}

/// Outside Weyl groups a unit mod h need not permute the exponents, and then
/// the variance is not `n(p−1)(p+h+1)/12`.
#[test]
fn noncrystallographic_exponents_need_not_permute() {
    let h3 = rs("H3");
    assert!(!multiplication_permutes_exponents(&h3, 3));
    let d = rational_catalan_distribution(&h3, 3).unwrap();
    assert_eq!(lemma_cumulant(&d, 1), int(3));
    assert_eq!(lemma_cumulant(&d, 2), int(5));
    let cf = closed_form_stats(&Catalog::RationalCatalan { cartan_type: h3.cartan_type(), p: 3 }).unwrap();
    assert_eq!(cf.mean, int(3));
    assert_eq!(cf.variance, None);
    assert!(multiplication_permutes_exponents(&h3, 11));
}

#[test]
fn inversions_variance_for_every_type() {
    let mut names: Vec<String> = (1..=8).map(|n| format!("A{n}")).collect();
    names.extend((2..=8).map(|n| format!("B{n}")));
    names.extend((4..=8).map(|n| format!("D{n}")));
    names.extend(["E6", "E7", "E8", "F4", "G2", "H3", "H4"].map(String::from));
    names.extend((3..=12).map(|m| format!("I2({m})")));
    for s in names {
        let entry = Catalog::Inversions { cartan_type: s.parse().unwrap() };
        let d = entry.distribution().unwrap();
        let cf = closed_form_stats(&entry).unwrap();
        assert_eq!(cf.variance.unwrap(), lemma_cumulant(&d, 2), "{s}");
    }
}

proptest! {
    #[test]
    fn lemma_matches_expansion_for_quotients(
        factors in proptest::collection::vec((1u64..6, 1u64..6), 1..4),
        r in 1u32..7,
    ) {
        // [ab]/[b] = 1 + q^b + … is always a polynomial.
        let nums = factors.iter().map(|&(a, b)| a * b).collect();
        let dens = factors.iter().map(|&(_, b)| b).collect();
        let d = QProduct::new(nums, dens);
        prop_assert_eq!(brute_cumulants(&d, r).unwrap().pop().unwrap(), lemma_cumulant(&d, r));
    }
}
