use std::collections::{BTreeMap, HashMap, VecDeque};

use num::{BigInt, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use weightnorm::numeric::{int, ratio, Rational};
use weightnorm::repcore::{
    casimir_eigenvalue, expected_norm, expected_power_norm, polynomiality_check, theorem_rhs,
    weight_multiplicities, weyl_dim, DEFAULT_DIM_CAP,
};
use weightnorm::rootsystem::{RootSystem, Weight};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap())
}

fn integer_root_coords(r: &RootSystem, w: &Weight) -> Vec<i64> {
    r.to_root_coords(w)
        .unwrap()
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "not in the root lattice");
            c.to_integer().to_i64().unwrap()
        })
        .collect()
}

/// Weyl group elements as `(w(ρ), w(λ+ρ), sign)`; `w(ρ)` identifies `w`.
fn weyl_images(r: &RootSystem, v: &Weight) -> Vec<(Weight, i64)> {
    let rho = r.rho().unwrap().clone();
    let mut seen: HashMap<Weight, (Weight, i64)> = HashMap::from([(rho.clone(), (v.clone(), 1))]);
    let mut queue = VecDeque::from([rho]);
    while let Some(x) = queue.pop_front() {
        let (img, sign) = seen[&x].clone();
        for i in 0..r.rank() {
            let y = r.reflect(&x, i).unwrap();
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), (r.reflect(&img, i).unwrap(), -sign));
                queue.push_back(y);
            }
        }
    }
    seen.into_values().collect()
}

/// Kostant's partition function on the box `[0, bound]` in root coordinates.
fn partition_table(r: &RootSystem, bound: &[i64]) -> HashMap<Vec<i64>, u64> {
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for &b in bound {
        points = points
            .into_iter()
            .flat_map(|p| (0..=b).map(move |c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    points.sort_by_key(|p| p.iter().sum::<i64>());
    let mut table: HashMap<Vec<i64>, u64> = points.iter().map(|p| (p.clone(), u64::from(p.iter().all(|&c| c == 0)))).collect();
    for alpha in r.positive_roots().unwrap() {
        for p in &points {
            let prev: Vec<i64> = p.iter().zip(&alpha.coeffs).map(|(a, b)| a - b).collect();
            if prev.iter().all(|&c| c >= 0) {
                let add = table[&prev];
                *table.get_mut(p).unwrap() += add;
            }
        }
    }
    table
}

/// Multiplicities from the alternating sum `Σ_w sign(w) P(w(λ+ρ) − (μ+ρ))`.
fn kostant_multiplicities(r: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let rho = r.rho().unwrap().clone();
    let lr = lambda + &rho;
    let lowest = -&r.dominant_representative(&-lambda).unwrap();
    let bound = integer_root_coords(r, &(lambda - &lowest));
    let table = partition_table(r, &bound);
    let images: Vec<(Vec<i64>, i64)> = weyl_images(r, &lr)
        .into_iter()
        .map(|(w, s)| (integer_root_coords(r, &(&w - &lr)), s))
        .collect();
    let simple: Vec<Weight> = (0..r.rank()).map(|i| r.root_data().unwrap().simple_root(i)).collect();

    let mut out = BTreeMap::new();
    for depth in table.keys() {
        // μ = λ − Σ depthᵢ αᵢ, so w(λ+ρ) − (μ+ρ) = (w(λ+ρ) − (λ+ρ)) + depth.
        let mut total: i64 = 0;
        for (shift, sign) in &images {
            let key: Vec<i64> = shift.iter().zip(depth).map(|(a, b)| a + b).collect();
            if let Some(&p) = table.get(&key) {
                total += sign * p as i64;
            } else if key.iter().all(|&c| c >= 0) {
                panic!("partition table too small");
            }
        }
        assert!(total >= 0);
        if total > 0 {
            let mut mu = lambda.clone();
            for (k, &c) in depth.iter().enumerate() {
                mu = &mu - &simple[k].scaled(c);
            }
            out.insert(mu, total as u64);
        }
    }
    out
}

fn dominant_grid(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| (0..=max).map(move |c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

#[test]
fn freudenthal_agrees_with_alternating_sum() {
    let mut checked = 0;
    for t in ["A1", "A2", "B2", "G2"] {
        let r = rs(t);
        let max = if r.rank() == 1 { 30 } else { 6 };
        for lambda in dominant_grid(r.rank(), max) {
            if weyl_dim(&r, &lambda).unwrap() > BigInt::from(200) {
                continue;
            }
            let ws = weight_multiplicities(&r, &lambda).unwrap();
            assert_eq!(ws.entries(), &kostant_multiplicities(&r, &lambda), "{t} {lambda}");
            checked += 1;
        }
    }
    assert!(checked > 40);
}

#[test]
fn sl3_adjoint_figure() {
    let a2 = rs("A2");
    let lam = Weight(vec![1, 1]);
    let ws = weight_multiplicities(&a2, &lam).unwrap();
    assert_eq!(weyl_dim(&a2, &lam).unwrap(), BigInt::from(8));
    assert_eq!(ws.multiplicity(&Weight::zero(2)), 2);
    let roots: Vec<&Weight> = ws.entries().keys().filter(|w| !w.is_zero()).collect();
    assert_eq!(roots.len(), 6);
    for w in roots {
        assert_eq!(ws.multiplicity(w), 1);
        assert_eq!(a2.norm(w).unwrap(), int(2));
    }
    assert_eq!(ws.expected_norm(&a2).unwrap(), ratio(3, 2));
    assert_eq!(theorem_rhs(&a2, &lam).unwrap(), ratio(3, 2));
}

/// `sp₄` with `λ = 2ε₁ + ε₂ = ω₁ + ω₂`, measured with `εᵢ` orthonormal, which
/// gives long roots `±2εᵢ` squared length 4.
#[test]
fn sp4_figure() {
    let c2 = RootSystem::build_with_form_scale("C2".parse().unwrap(), int(2)).unwrap();
    let lam = Weight(vec![1, 1]);
    assert_eq!(weyl_dim(&c2, &lam).unwrap(), BigInt::from(16));
    let ws = weight_multiplicities(&c2, &lam).unwrap();
    let mut by_norm: BTreeMap<(Rational, u64), usize> = BTreeMap::new();
    for (w, &m) in ws.entries() {
        *by_norm.entry((c2.norm(w).unwrap(), m)).or_default() += 1;
    }
    assert_eq!(by_norm, BTreeMap::from([((int(5), 1), 8), ((int(1), 2), 4)]));
    assert_eq!(ws.expected_norm(&c2).unwrap(), int(3));
    assert_eq!(theorem_rhs(&c2, &lam).unwrap(), int(3));
    let unscaled = rs("C2");
    assert_eq!(expected_norm(&unscaled, &lam).unwrap(), ratio(3, 2));
}

/// With `‖(x,−x)‖² = 2x²` on weights `(m,−m)`, i.e. four times the
/// long-root-2 form.
#[test]
fn sl2_family() {
    let a1 = rs("A1");
    let a1x4 = RootSystem::build_with_form_scale("A1".parse().unwrap(), int(4)).unwrap();
    for m in 0..=20i64 {
        let lam = Weight(vec![m]);
        assert_eq!(expected_norm(&a1, &lam).unwrap(), ratio(m * (m + 2), 6));
        assert_eq!(expected_norm(&a1x4, &lam).unwrap(), ratio(2 * m * (m + 2), 3));
    }
    assert_eq!(expected_norm(&a1x4, &Weight(vec![1])).unwrap(), int(2));
}

#[test]
fn a2_four_omega_one() {
    let a2 = rs("A2");
    let lam = Weight(vec![4, 0]);
    assert_eq!(a2.norm(&lam).unwrap(), ratio(32, 3));
    assert_eq!(theorem_rhs(&a2, &lam).unwrap(), ratio(14, 3));
    assert_eq!(expected_norm(&a2, &lam).unwrap(), ratio(14, 3));
}

#[test]
fn casimir_is_h_plus_one_times_rhs() {
    let a2 = rs("A2");
    assert_eq!(casimir_eigenvalue(&a2, &Weight(vec![1, 1])).unwrap(), int(6));
    assert_eq!(casimir_eigenvalue(&a2, &Weight::zero(2)).unwrap(), int(0));
    for t in ["B3", "D4", "G2"] {
        let r = rs(t);
        for lam in dominant_grid(r.rank(), 1) {
            assert_eq!(
                casimir_eigenvalue(&r, &lam).unwrap(),
                theorem_rhs(&r, &lam).unwrap() * int(r.h() as i64 + 1)
            );
        }
    }
}

#[test]
fn second_power_is_expected_norm() {
    let b2 = rs("B2");
    for lam in dominant_grid(2, 3) {
        assert_eq!(expected_power_norm(&b2, &lam, 2).unwrap(), expected_norm(&b2, &lam).unwrap());
    }
}

#[test]
fn main_theorem_on_exceptional_types() {
    for (t, lams) in [
        ("E6", vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]]),
        ("E7", vec![vec![0, 0, 0, 0, 0, 0, 1], vec![1, 0, 0, 0, 0, 0, 0]]),
        ("E8", vec![vec![0, 0, 0, 0, 0, 0, 0, 1]]),
        ("F4", vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0], vec![0, 0, 1, 0]]),
    ] {
        let r = rs(t);
        for lam in lams {
            let lam = Weight(lam);
            assert_eq!(expected_norm(&r, &lam).unwrap(), theorem_rhs(&r, &lam).unwrap(), "{t} {lam}");
        }
    }
}

#[test]
fn polynomial_fits_for_rank_two() {
    for t in ["A1", "A2", "B2", "G2"] {
        for r in [2, 4] {
            let fit = polynomiality_check(&rs(t), r, DEFAULT_DIM_CAP).unwrap();
            assert!(fit.holdout.len() >= 10, "{t} r={r}");
            assert!(fit.passed(), "{t} r={r}");
        }
    }
}

fn small_case() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop_oneof![
        proptest::collection::vec(0i64..4, 2).prop_map(|v| ("A2", v)),
        proptest::collection::vec(0i64..3, 2).prop_map(|v| ("B2", v)),
        proptest::collection::vec(0i64..2, 2).prop_map(|v| ("G2", v)),
        proptest::collection::vec(0i64..2, 3).prop_map(|v| ("A3", v)),
        proptest::collection::vec(0i64..2, 3).prop_map(|v| ("C3", v)),
        proptest::collection::vec(0i64..2, 4).prop_map(|v| ("D4", v)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_system_invariants((t, coords) in small_case()) {
        let r = rs(t);
        let lam = Weight(coords);
        let ws = weight_multiplicities(&r, &lam).unwrap();
        prop_assert_eq!(BigInt::from(ws.dim()), weyl_dim(&r, &lam).unwrap());
        prop_assert_eq!(ws.multiplicity(&lam), 1);
        for (mu, &m) in ws.entries() {
            prop_assert!(m > 0);
            let dom = r.dominant_representative(mu).unwrap();
            prop_assert_eq!(ws.multiplicity(&dom), m);
            let depth = r.to_root_coords(&(&lam - mu)).unwrap();
            prop_assert!(depth.iter().all(|c| c.is_integer() && !c.is_negative()));
        }
        prop_assert_eq!(ws.expected_norm(&r).unwrap(), theorem_rhs(&r, &lam).unwrap());
    }

    #[test]
    fn power_norms_are_weyl_symmetric_sums((t, coords) in small_case()) {
        let r = rs(t);
        let lam = Weight(coords);
        let ws = weight_multiplicities(&r, &lam).unwrap();
        let s4 = ws.expected_power_norm(&r, 4).unwrap();
        let direct: Rational = ws
            .entries()
            .iter()
            .map(|(mu, &m)| {
                let n = r.norm(mu).unwrap();
                &n * &n * int(m as i64)
            })
            .sum::<Rational>()
            / int(ws.dim() as i64);
        prop_assert_eq!(s4, direct);
        prop_assert!(!ws.expected_norm(&r).unwrap().is_negative() || lam.is_zero());
        prop_assert!(lam.is_zero() == ws.expected_norm(&r).unwrap().is_zero());
    }
}
