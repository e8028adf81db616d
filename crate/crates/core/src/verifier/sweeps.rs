use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num::{BigInt, Integer, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{params, timed, CheckResult};
use crate::cores::{
    alcove_points, chain_value, cx_mean, cx_mean_closed_form, expected_size_closed_form, phi, simultaneous_cores,
    size_b_mean, sym_power_norm_closed_form,
};
use crate::cumulants::{
    brute_cumulants, desk_scale_catalog, lemma_cumulants, minuscule_poset, pp_distribution, Catalog,
};
use crate::error::Error;
use crate::numeric::{binomial, int, ratio, Rational};
use crate::repcore::{self, polynomiality_check, theorem_rhs, weight_multiplicities_capped, weyl_dim};
use crate::rootsystem::{CartanType, Family, RootSystem, Weight};
use crate::typea::{
    expected_norm_tableaux, extract_linear_and_constant, identity_constant, identity_shift, pieri_rhs_closed_form,
    polynomial_identity_check, Partition,
};

/// Seed of the random vectors in the default polynomial-identity sweep.
pub const IDENTITY_SEED: u64 = 0x5eed;

fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

fn count(n: usize) -> Rational {
    int(n as i64)
}

fn ct(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).expect("valid type")
}

/// `A₁, A₂, A₃, A₄, B₂, B₃, C₃, D₄, G₂`.
pub fn main_theorem_types() -> Vec<CartanType> {
    use Family::*;
    vec![ct(A, 1), ct(A, 2), ct(A, 3), ct(A, 4), ct(B, 2), ct(B, 3), ct(C, 3), ct(D, 4), ct(G, 2)]
}

/// All vectors in `{0..=max}^n`.
fn boxed_weights(n: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Weight(vec![])];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |c| {
                    let mut v = w.0.clone();
                    v.push(c);
                    Weight(v)
                })
            })
            .collect();
    }
    out
}

/// `expected_norm(λ)` against `⟨λ, λ+2ρ⟩/(h+1)` for every dominant `λ`
/// with coordinates `≤ max_coord` and `dim V_λ ≤ dim_cap`.
pub fn sweep_main_theorem(types: &[CartanType], max_coord: i64, dim_cap: u64) -> Vec<CheckResult> {
    let systems: Vec<RootSystem> = types.iter().map(|&t| RootSystem::build(t)).collect();
    sweep_main_theorem_on(&systems, max_coord, dim_cap)
}

/// [`sweep_main_theorem`] on prebuilt root systems, which may carry a
/// rescaled or deliberately corrupted form.
pub fn sweep_main_theorem_on(systems: &[RootSystem], max_coord: i64, dim_cap: u64) -> Vec<CheckResult> {
    let points: Vec<(&RootSystem, Weight)> = systems
        .iter()
        .filter(|rs| rs.cartan_type().is_crystallographic())
        .flat_map(|rs| boxed_weights(rs.rank(), max_coord).into_iter().map(move |w| (rs, w)))
        .collect();
    points
        .par_iter()
        .flat_map_iter(|(rs, lambda)| {
            let p = params([("type", rs.cartan_type().to_string()), ("lambda", lambda.to_string())]);
            let within_cap = match weyl_dim(rs, lambda) {
                Ok(d) => d <= BigInt::from(dim_cap),
                Err(e) => return vec![CheckResult::error("main_theorem", p, &e)],
            };
            if !within_cap {
                return vec![];
            }
            timed(|| {
                let run = || -> crate::Result<CheckResult> {
                    let ws = weight_multiplicities_capped(rs, lambda, dim_cap)?;
                    let mut p = p.clone();
                    p.insert("dim".into(), ws.dim().to_string());
                    Ok(CheckResult::new("main_theorem", p, ws.expected_norm(rs)?, theorem_rhs(rs, lambda)?))
                };
                vec![run().unwrap_or_else(|e| CheckResult::error("main_theorem", p.clone(), &e))]
            })
        })
        .collect()
}

fn figure_check(figure: &str, quantity: &str, lhs: Rational, rhs: Rational) -> CheckResult {
    CheckResult::new("figure", params([("figure", figure), ("quantity", quantity)]), lhs, rhs)
}

/// The two worked figures: the adjoint of `sl₃` and `V_{ω₁+ω₂}` of `sp₄`.
pub fn sweep_figures() -> Vec<CheckResult> {
    timed(|| {
        let run = || -> crate::Result<Vec<CheckResult>> {
            let a2 = RootSystem::build(ct(Family::A, 2));
            let l = Weight(vec![1, 1]);
            let ws = repcore::weight_multiplicities(&a2, &l)?;
            let mut out = vec![
                figure_check("sl3", "dim", count(ws.dim() as usize), int(8)),
                figure_check("sl3", "zero_multiplicity", count(ws.multiplicity(&Weight::zero(2)) as usize), int(2)),
                figure_check("sl3", "expected_norm", ws.expected_norm(&a2)?, ratio(3, 2)),
            ];

            // The figure measures with εᵢ orthonormal: twice the long-root-2 form.
            let c2 = RootSystem::build(ct(Family::C, 2));
            let c2_eps = RootSystem::build_with_form_scale(ct(Family::C, 2), int(2))?;
            let ws = repcore::weight_multiplicities(&c2, &l)?;
            let doubled: Vec<&Weight> = ws.entries().iter().filter(|(_, &m)| m == 2).map(|(w, _)| w).collect();
            // The doubled weights are ±εᵢ, the orbit of ω₁.
            let short = c2.weyl_orbit(&Weight::fundamental(2, 0))?;
            let doubled_short = doubled.iter().filter(|w| short.contains(w)).count();
            out.extend([
                figure_check("sp4", "dim", count(ws.dim() as usize), int(16)),
                figure_check("sp4", "doubled_weights", count(doubled.len()), int(4)),
                figure_check("sp4", "doubled_weights_in_orbit_of_omega1", count(doubled_short), int(4)),
                figure_check("sp4", "expected_norm_eps_orthonormal", ws.expected_norm(&c2_eps)?, int(3)),
                figure_check("sp4", "expected_norm_long_root_2", ws.expected_norm(&c2)?, ratio(3, 2)),
            ]);
            Ok(out)
        };
        run().unwrap_or_else(|e| vec![CheckResult::error("figure", params([("figure", "all")]), &e)])
    })
}

/// `mω₁` of `sl₂`: `(2/3)m(m+2)` with `‖(x,−x)‖² = 2x²`, which is four times
/// the long-root-2 form, and `m(m+2)/6` under the long-root-2 form.
pub fn sweep_sl2(max_m: i64) -> Vec<CheckResult> {
    let a1 = RootSystem::build(ct(Family::A, 1));
    let a1_scale4 = RootSystem::build_with_form_scale(ct(Family::A, 1), int(4)).expect("positive scale");
    (0..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| {
            let w = Weight(vec![m]);
            timed(|| {
                let mut out = Vec::new();
                for (form, rs, rhs) in [
                    ("scale_4", &a1_scale4, ratio(2, 3) * int(m * (m + 2))),
                    ("long_root_2", &a1, int(m * (m + 2)) / int(6)),
                ] {
                    let p = params([("m", m.to_string()), ("form", form.to_string())]);
                    out.push(match repcore::expected_norm(rs, &w) {
                        Ok(v) => CheckResult::new("sl2_example", p, v, rhs),
                        Err(e) => CheckResult::error("sl2_example", p, &e),
                    });
                }
                out
            })
        })
        .collect()
}

/// Every crystallographic type of rank `≤ max_rank`, then `H₃`, `H₄` and
/// `I₂(m)` for `m ≤ 12`.
pub fn numerology_types(max_rank: usize) -> Vec<CartanType> {
    use Family::*;
    let mut out = Vec::new();
    for f in [A, B, C, D, E, F, G] {
        for n in 1..=max_rank {
            if let Ok(t) = CartanType::new(f, n) {
                out.push(t);
            }
        }
    }
    for n in 3..=4 {
        out.push(ct(H, n));
    }
    for m in 3..=12 {
        out.push(CartanType::dihedral(m).expect("valid type"));
    }
    out
}

/// The Suter identities for every type, and for Weyl groups
/// `|Φ⁺| = nh/2`, `dim 𝔤 = n(h+1)`, `Σ_{α∈Φ}‖α‖² = 2gn` and the `γ` table.
pub fn sweep_numerology(max_rank: usize) -> Vec<CheckResult> {
    numerology_types(max_rank)
        .into_par_iter()
        .flat_map_iter(|t| {
            timed(|| {
                let rs = RootSystem::build(t);
                let (n, h, g) = (rs.rank() as i64, rs.h() as i64, rs.gamma() as i64);
                let p = || params([("type", t.to_string())]);
                let pow_sum = |k: u32| -> Rational { rs.exponents().iter().map(|&e| int((e as i64).pow(k))).sum() };
                let mut out = vec![
                    CheckResult::new("suter_e2", p(), pow_sum(2), int(n * (h * h + g - h)) / int(6)),
                    CheckResult::new("suter_e3", p(), pow_sum(3), int(n * h * (g - h)) / int(4)),
                ];
                if !t.is_crystallographic() {
                    return out;
                }
                let run = || -> crate::Result<Vec<CheckResult>> {
                    let data = rs.root_data()?;
                    let roots = data.positive_roots();
                    let adjoint = weyl_dim(&rs, data.highest_root())?;
                    let mut norm_sum = Rational::zero();
                    for r in roots {
                        norm_sum += rs.norm(&r.weight)? * int(2);
                    }
                    let dual = data.dual_coxeter_number() as i64;
                    Ok(vec![
                        CheckResult::new("positive_roots", p(), count(roots.len()), int(n * h) / int(2)),
                        CheckResult::new("dim_g", p(), big(&adjoint), int(n * (h + 1))),
                        CheckResult::new("root_norm_sum", p(), norm_sum, int(2 * dual * n)),
                        CheckResult::new("gamma_from_form", p(), int(data.gamma_from_form() as i64), int(g)),
                    ])
                };
                match run() {
                    Ok(v) => out.extend(v),
                    Err(e) => out.push(CheckResult::error("positive_roots", p(), &e)),
                }
                out
            })
        })
        .collect()
}

/// Fits `λ ↦ S(‖·‖^r, λ)` on rank-one and rank-two types and checks the fit
/// on held-out weights, and Weyl invariance of its `ρ`-shift.
pub fn sweep_polynomiality(orders: &[u32]) -> Vec<CheckResult> {
    use Family::*;
    let grid: Vec<(CartanType, u32)> =
        [ct(A, 1), ct(A, 2), ct(B, 2), ct(G, 2)].into_iter().flat_map(|t| orders.iter().map(move |&r| (t, r))).collect();
    grid.into_par_iter()
        .flat_map_iter(|(t, r)| {
            timed(|| {
                let rs = RootSystem::build(t);
                let p = |extra: Option<(&str, String)>| {
                    let mut m = params([("type", t.to_string()), ("r", r.to_string())]);
                    if let Some((k, v)) = extra {
                        m.insert(k.into(), v);
                    }
                    m
                };
                match polynomiality_check(&rs, r, repcore::DEFAULT_DIM_CAP) {
                    Ok(fit) => {
                        let mut out: Vec<CheckResult> = fit
                            .holdout
                            .iter()
                            .map(|(w, s, q)| {
                                CheckResult::new("polyfit_holdout", p(Some(("lambda", w.to_string()))), q.clone(), s.clone())
                            })
                            .collect();
                        out.push(CheckResult::new(
                            "polyfit_weyl_invariant",
                            p(None),
                            int(fit.weyl_invariant as i64),
                            int(1),
                        ));
                        out
                    }
                    Err(e) => vec![CheckResult::error("polyfit_holdout", p(None), &e)],
                }
            })
        })
        .collect()
}

/// For coprime `1 ≤ a < b ≤ max_ab`: the number of `(a,b)`-cores against
/// `C(a+b, b)/(a+b)`, their mean size against `(a−1)(b−1)(a+b+1)/24`, and
/// the largest size against `(a²−1)(b²−1)/24`.
pub fn sweep_cores(max_ab: u64) -> Vec<CheckResult> {
    let pairs: Vec<(u64, u64)> =
        (1..=max_ab).flat_map(|a| (a + 1..=max_ab).map(move |b| (a, b))).filter(|&(a, b)| a.gcd(&b) == 1).collect();
    pairs
        .into_par_iter()
        .flat_map_iter(|(a, b)| {
            timed(|| {
                let p = || params([("a", a), ("b", b)]);
                let cores = match simultaneous_cores(a, b) {
                    Ok(c) => c,
                    Err(e) => return vec![CheckResult::error("core_count", p(), &e)],
                };
                let n = count(cores.len());
                let total: u64 = cores.iter().map(|c| c.size()).sum();
                let max = cores.iter().map(|c| c.size()).max().unwrap_or(0);
                let (ai, bi) = (a as i64, b as i64);
                vec![
                    CheckResult::new("core_count", p(), n.clone(), big(&binomial(a + b, b)) / int(ai + bi)),
                    CheckResult::new("core_mean_size", p(), int(total as i64) / n, expected_size_closed_form(a, b)),
                    CheckResult::new(
                        "core_max_size",
                        p(),
                        int(max as i64),
                        int((ai * ai - 1) * (bi * bi - 1)) / int(24),
                    ),
                ]
            })
        })
        .collect()
}

/// Alcove statistics for coprime `2 ≤ a ≤ max_a`, `1 ≤ b ≤ max_b`: the mean
/// of `size_b`, the mean of `⟨cx_b, x_b⟩`, and the identity chain closing to
/// the average weight norm of `V_{bω₁}`, which is also computed from the
/// weight multiplicities.
pub fn sweep_alcove(max_a: u64, max_b: u64) -> Vec<CheckResult> {
    let pairs: Vec<(u64, u64)> =
        (2..=max_a).flat_map(|a| (1..=max_b).map(move |b| (a, b))).filter(|&(a, b)| a.gcd(&b) == 1).collect();
    pairs
        .into_par_iter()
        .flat_map_iter(|(a, b)| {
            timed(|| {
                let p = || params([("a", a), ("b", b)]);
                let run = || -> crate::Result<Vec<CheckResult>> {
                    let rs = RootSystem::build(ct(Family::A, a as usize - 1));
                    let lambda = Weight::fundamental(a as usize - 1, 0).scaled(b as i64);
                    let chain = chain_value(a, b)?;
                    Ok(vec![
                        CheckResult::new("alcove_size_mean", p(), size_b_mean(a, b)?, expected_size_closed_form(a, b)),
                        CheckResult::new("alcove_cx_mean", p(), cx_mean(a, b)?, cx_mean_closed_form(a, b)),
                        CheckResult::new("alcove_chain", p(), chain.clone(), sym_power_norm_closed_form(a, b)),
                        CheckResult::new("alcove_chain_weights", p(), chain, repcore::expected_norm(&rs, &lambda)?),
                    ])
                };
                run().unwrap_or_else(|e| vec![CheckResult::error("alcove_size_mean", p(), &e)])
            })
        })
        .collect()
}

/// For `2 ≤ a ≤ max_a`, `1 ≤ b ≤ max_b`: the alcove has `C(a+b−1, b)`
/// points, `φ` is injective on them, and its image is the weight set of
/// `V_{bω₁}`.
pub fn sweep_phi(max_a: u64, max_b: u64) -> Vec<CheckResult> {
    let pairs: Vec<(u64, u64)> = (2..=max_a).flat_map(|a| (1..=max_b).map(move |b| (a, b))).collect();
    pairs
        .into_par_iter()
        .flat_map_iter(|(a, b)| {
            timed(|| {
                let p = || params([("a", a), ("b", b)]);
                let run = || -> crate::Result<Vec<CheckResult>> {
                    let pts = alcove_points(a, b)?;
                    let image = pts.iter().map(|x| phi(x, b)).collect::<crate::Result<BTreeSet<Weight>>>()?;
                    let rs = RootSystem::build(ct(Family::A, a as usize - 1));
                    let lambda = Weight::fundamental(a as usize - 1, 0).scaled(b as i64);
                    let ws = repcore::weight_multiplicities(&rs, &lambda)?;
                    let hit = ws.entries().keys().filter(|w| image.contains(w)).count();
                    Ok(vec![
                        CheckResult::new("alcove_count", p(), count(pts.len()), big(&binomial(a + b - 1, b))),
                        CheckResult::new("phi_injective", p(), count(image.len()), count(pts.len())),
                        CheckResult::new("phi_onto_weights", p(), count(hit), count(ws.entries().len())),
                    ])
                };
                run().unwrap_or_else(|e| vec![CheckResult::error("alcove_count", p(), &e)])
            })
        })
        .collect()
}

/// Partitions of size `≤ max_size` with at most `rows` parts.
fn partitions_up_to(max_size: u64, rows: usize) -> Vec<Partition> {
    fn go(rem: u64, max_part: u64, rows: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(acc.clone());
        if acc.len() == rows {
            return;
        }
        for p in 1..=rem.min(max_part) {
            acc.push(p);
            go(rem - p, p, rows, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(max_size, max_size, rows, &mut Vec::new(), &mut out);
    out.into_iter().map(|v| Partition::new(v).expect("weakly decreasing")).collect()
}

/// For `2 ≤ n ≤ max_n` letters and `|λ| ≤ max_size`: the tableau average,
/// the Pieri closed form and `⟨λ, λ+2ρ⟩/(h+1)` computed on `A_{n−1}`.
pub fn sweep_typea(max_n: usize, max_size: u64) -> Vec<CheckResult> {
    let grid: Vec<(usize, Partition)> =
        (2..=max_n).flat_map(|n| partitions_up_to(max_size, n).into_iter().map(move |l| (n, l))).collect();
    grid.into_par_iter()
        .flat_map_iter(|(n, lambda)| {
            timed(|| {
                let p = || params([("n", n.to_string()), ("lambda", lambda.to_string())]);
                let run = || -> crate::Result<Vec<CheckResult>> {
                    let rs = RootSystem::build(ct(Family::A, n - 1));
                    let tab = expected_norm_tableaux(&lambda, n)?;
                    Ok(vec![
                        CheckResult::new("typea_tableaux_vs_pieri", p(), tab.clone(), pieri_rhs_closed_form(&lambda, n)?),
                        CheckResult::new("typea_tableaux_vs_theorem", p(), tab, theorem_rhs(&rs, &lambda.to_weight(n)?)?),
                    ])
                };
                run().unwrap_or_else(|e| vec![CheckResult::error("typea_tableaux_vs_pieri", p(), &e)])
            })
        })
        .collect()
}

fn random_distinct(rng: &mut StdRng, n: usize) -> Vec<Rational> {
    loop {
        let x: Vec<Rational> = (0..n).map(|_| ratio(rng.gen_range(-40..=40), rng.gen_range(1..=9))).collect();
        if (0..n).all(|i| (i + 1..n).all(|j| x[i] != x[j])) {
            return x;
        }
    }
}

/// Both sides of the type A polynomial identity at `samples` random vectors
/// with distinct rational coordinates per `n`, plus the special evaluations
/// `xᵢ = −i` (zero), the shift to `xᵢ = −i+1` (by `n(n+1)`), and the
/// coefficients `C₁ = (n+1)²`, `C₀ = n(n+1)(3n²+5n+4)/12`.
pub fn sweep_polynomial_identity(ns: RangeInclusive<usize>, samples: usize, seed: u64) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut grid = Vec::new();
    for n in ns.clone() {
        for s in 0..samples {
            grid.push((n, s, random_distinct(&mut rng, n)));
        }
    }
    let mut out: Vec<CheckResult> = grid
        .into_par_iter()
        .flat_map_iter(|(n, s, x)| {
            timed(|| {
                let p = params([("n", n), ("sample", s)]);
                vec![match polynomial_identity_check(&x) {
                    Ok((l, r)) => CheckResult::new("identity_random", p, l, r),
                    Err(e) => CheckResult::error("identity_random", p, &e),
                }]
            })
        })
        .collect();
    for n in ns {
        out.extend(timed(|| {
            let p = || params([("n", n)]);
            let ni = n as i64;
            let run = || -> crate::Result<Vec<CheckResult>> {
                let zero: Vec<Rational> = (1..=ni).map(|i| int(-i)).collect();
                let (l, r) = polynomial_identity_check(&zero)?;
                let (c1, c0) = extract_linear_and_constant(n)?;
                Ok(vec![
                    CheckResult::new("identity_zero_lhs", p(), l, int(0)),
                    CheckResult::new("identity_zero_rhs", p(), r, int(0)),
                    CheckResult::new("identity_shift", p(), identity_shift(n)?, int(ni * (ni + 1))),
                    CheckResult::new("identity_c1", p(), c1, int((ni + 1) * (ni + 1))),
                    CheckResult::new("identity_c0", p(), c0, int(ni * (ni + 1) * (3 * ni * ni + 5 * ni + 4)) / int(12)),
                    CheckResult::new("identity_c0_formula", p(), identity_constant(n), c0_from_sum(ni)),
                ])
            };
            run().unwrap_or_else(|e| vec![CheckResult::error("identity_zero_rhs", p(), &e)])
        }));
    }
    out
}

/// `C₀ = (n+1)²Σi − 2Σ_{i≤j} ij`, summed directly.
fn c0_from_sum(n: i64) -> Rational {
    let s: i64 = (1..=n).sum();
    let pairs: i64 = (1..=n).flat_map(|i| (i..=n).map(move |j| i * j)).sum();
    int((n + 1) * (n + 1) * s - 2 * pairs)
}

/// For each catalog entry: `κ_r` from the lemma against the expanded
/// distribution for `r ≤ max_order`, and the closed-form mean, variance and
/// `κ₄` against the lemma.
pub fn sweep_cumulants(max_order: u32) -> Vec<CheckResult> {
    if !(1..=8).contains(&max_order) {
        let e = Error::InvalidArgument(format!("cumulant order {max_order} outside 1..=8"));
        return vec![CheckResult::error("cumulant_lemma_vs_oracle", params([("max_order", max_order)]), &e)];
    }
    desk_scale_catalog()
        .into_par_iter()
        .flat_map_iter(|entry| timed(|| cumulant_checks(&entry, max_order)))
        .collect()
}

fn cumulant_checks(entry: &Catalog, max_order: u32) -> Vec<CheckResult> {
    let run = || -> crate::Result<Vec<CheckResult>> {
        let d = entry.distribution()?;
        let lemma = lemma_cumulants(&d, max_order);
        let brute = brute_cumulants(&d, max_order)?;
        let mut out = Vec::new();
        for (i, (l, b)) in lemma.iter().zip(&brute).enumerate() {
            let mut p = entry.params();
            p.insert("r".into(), (i + 1).to_string());
            out.push(CheckResult::new("cumulant_lemma_vs_oracle", p, l.clone(), b.clone()));
        }
        let cf = entry.closed_form()?;
        out.push(CheckResult::new("closed_form_mean", entry.params(), cf.mean, lemma[0].clone()));
        if let (Some(v), Some(l)) = (cf.variance, lemma.get(1)) {
            out.push(CheckResult::new("closed_form_variance", entry.params(), v, l.clone()));
        }
        if let (Some(k), Some(l)) = (cf.kappa4, lemma.get(3)) {
            out.push(CheckResult::new("closed_form_kappa4", entry.params(), k, l.clone()));
        }
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![CheckResult::error("cumulant_lemma_vs_oracle", entry.params(), &e)])
}

/// For `a, b ≤ max_side` and `k ≤ max_k`: the expanded product formula for
/// plane partitions in an `a × b` rectangle against brute-force enumeration
/// of order-preserving maps to `{0..k}`. The two sides are the number of
/// agreeing coefficients and the number of coefficients.
pub fn sweep_plane_partitions(max_side: usize, max_k: u64) -> Vec<CheckResult> {
    let grid: Vec<(usize, usize, u64)> = (1..=max_side)
        .flat_map(|a| (1..=max_side).flat_map(move |b| (0..=max_k).map(move |k| (a, b, k))))
        .collect();
    grid.into_par_iter()
        .flat_map_iter(|(a, b, k)| {
            timed(|| {
                let p = params([("a", a as u64), ("b", b as u64), ("k", k)]);
                let run = || -> crate::Result<CheckResult> {
                    let rs = RootSystem::build(ct(Family::A, a + b - 1));
                    let poset = minuscule_poset(&rs, a)?;
                    let product = pp_distribution(&poset, k).expand()?;
                    let brute = poset.brute_plane_partitions(k as u32);
                    let len = product.coeffs().len().max(brute.coeffs().len());
                    let agree = (0..len).filter(|&i| product.coeff(i) == brute.coeff(i)).count();
                    Ok(CheckResult::new("pp_enumeration", p.clone(), count(agree), count(len)))
                };
                vec![run().unwrap_or_else(|e| CheckResult::error("pp_enumeration", p.clone(), &e))]
            })
        })
        .collect()
}

/// Variance of the plane-partition size in an `a × b × c` box against
/// `abc(a+b+c)/12`.
pub fn sweep_box_variance(max: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                out.extend(timed(|| {
                    let p = params([("a", a), ("b", b), ("c", c)]);
                    let rhs = int((a * b * c * (a + b + c)) as i64) / int(12);
                    vec![match Catalog::rectangle_pp(a as usize, b as usize, c).and_then(|e| e.distribution()) {
                        Ok(d) => CheckResult::new("box_variance", p, lemma_cumulants(&d, 2)[1].clone(), rhs),
                        Err(e) => CheckResult::error("box_variance", p, &e),
                    }]
                }));
            }
        }
    }
    out
}
