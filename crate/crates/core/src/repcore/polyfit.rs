//! Empirical check that `λ ↦ S(‖·‖^r, λ)` is a polynomial of degree `r`
//! whose shift `v ↦ S(‖·‖^r, v − ρ)` is Weyl-invariant.

use num::Zero;

use super::{weight_multiplicities_capped, WeightSystem};
use crate::error::{Error, Result};
use crate::numeric::linalg::{self, Matrix};
use crate::numeric::{int, Rational};
use crate::rootsystem::{RootSystem, Weight};

/// Outcome of fitting `S(‖·‖^r, λ)` on a unisolvent grid of dominant weights.
#[derive(Clone, Debug)]
pub struct PolyFit {
    pub r: u32,
    /// Exponent vectors of the monomials in the fundamental coordinates of `λ`.
    pub monomials: Vec<Vec<u32>>,
    pub coefficients: Vec<Rational>,
    pub fit_points: usize,
    /// `(λ, S(λ), p(λ))` at points not used for the fit.
    pub holdout: Vec<(Weight, Rational, Rational)>,
    /// Whether `p(v − ρ)` is unchanged by every simple reflection of `v`.
    pub weyl_invariant: bool,
}

impl PolyFit {
    pub fn holdout_matches(&self) -> bool {
        self.holdout.iter().all(|(_, s, p)| s == p)
    }

    pub fn passed(&self) -> bool {
        self.holdout_matches() && self.weyl_invariant
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        eval_poly(&self.monomials, &self.coefficients, x)
    }
}

fn monomials(rank: usize, degree: u32) -> Vec<Vec<u32>> {
    match rank {
        1 => (0..=degree).map(|i| vec![i]).collect(),
        2 => (0..=degree)
            .flat_map(|t| (0..=t).map(move |i| vec![i, t - i]))
            .collect(),
        _ => unreachable!(),
    }
}

/// Dominant weights with coordinate sum exactly `t`.
fn layer(rank: usize, t: i64) -> Vec<Weight> {
    match rank {
        1 => vec![Weight(vec![t])],
        2 => (0..=t).map(|i| Weight(vec![i, t - i])).collect(),
        _ => unreachable!(),
    }
}

fn eval_poly(monos: &[Vec<u32>], coeffs: &[Rational], x: &[Rational]) -> Rational {
    monos
        .iter()
        .zip(coeffs)
        .map(|(m, c)| {
            m.iter()
                .zip(x)
                .fold(c.clone(), |acc, (&e, xi)| acc * num::pow(xi.clone(), e as usize))
        })
        .sum()
}

fn to_rational(w: &Weight) -> Vec<Rational> {
    w.coords().iter().map(|&c| int(c)).collect()
}

/// Fits the degree-`r` interpolant of `S(‖·‖^r, ·)` for a type of rank at
/// most 2, then tests it on the next three layers of dominant weights (and
/// further layers in rank 1 until ten holdout points exist) and tests the
/// Weyl invariance of `v ↦ p(v − ρ)` on a unisolvent set.
pub fn polynomiality_check(rs: &RootSystem, r: u32, cap: u64) -> Result<PolyFit> {
    let rank = rs.rank();
    if !(1..=2).contains(&rank) {
        return Err(Error::InvalidArgument(format!(
            "polynomial fitting supports rank 1 or 2, got rank {rank}"
        )));
    }
    let data = rs.root_data()?;
    let s = |w: &Weight| -> Result<Rational> {
        let ws: WeightSystem = weight_multiplicities_capped(rs, w, cap)?;
        ws.expected_power_norm(rs, r)
    };

    let monos = monomials(rank, r);
    let fit_weights: Vec<Weight> = (0..=r as i64).flat_map(|t| layer(rank, t)).collect();
    debug_assert_eq!(fit_weights.len(), monos.len());
    let vander: Matrix = fit_weights
        .iter()
        .map(|w| {
            let x = to_rational(w);
            monos
                .iter()
                .map(|m| m.iter().zip(&x).fold(int(1), |acc, (&e, xi)| acc * num::pow(xi.clone(), e as usize)))
                .collect()
        })
        .collect();
    let values: Matrix = fit_weights.iter().map(|w| s(w).map(|v| vec![v])).collect::<Result<_>>()?;
    let sol = linalg::solve(&vander, &values).expect("principal lattice is unisolvent");
    let coefficients: Vec<Rational> = sol.into_iter().map(|row| row[0].clone()).collect();

    let mut holdout = Vec::new();
    let mut t = r as i64 + 1;
    while t <= r as i64 + 3 || holdout.len() < 10 {
        for w in layer(rank, t) {
            let actual = s(&w)?;
            let predicted = eval_poly(&monos, &coefficients, &to_rational(&w));
            holdout.push((w, actual, predicted));
        }
        t += 1;
    }

    // A polynomial of degree ≤ r vanishing on the principal lattice is zero,
    // so checking q∘sᵢ − q there decides invariance exactly.
    let rho = to_rational(data.rho());
    let q = |v: &[Rational]| -> Rational {
        let x: Vec<Rational> = v.iter().zip(&rho).map(|(a, b)| a - b).collect();
        eval_poly(&monos, &coefficients, &x)
    };
    let cartan = data.cartan_matrix();
    let weyl_invariant = fit_weights.iter().all(|w| {
        // Shift off the walls so the test points are generic.
        let v: Vec<Rational> = w.coords().iter().map(|&c| int(2 * c + 1) / int(3)).collect();
        (0..rank).all(|i| {
            let sv: Vec<Rational> =
                v.iter().zip(&cartan[i]).map(|(x, &a)| x - &v[i] * int(a)).collect();
            (q(&sv) - q(&v)).is_zero()
        })
    });

    Ok(PolyFit { r, monomials: monos, coefficients, fit_points: fit_weights.len(), holdout, weyl_invariant })
}
