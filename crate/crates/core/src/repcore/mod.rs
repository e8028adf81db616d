//! Irreducible representations of a simple Lie algebra, seen through their
//! weight multisets: dimensions, multiplicities and weight-norm averages.

mod polyfit;

use std::collections::{BTreeMap, HashMap, VecDeque};

use num::{BigInt, Integer, One, ToPrimitive};

pub use polyfit::{polynomiality_check, PolyFit};

use crate::error::{Error, Result};
use crate::numeric::{int, Rational};
use crate::rootsystem::{dominant_raw, orbit_raw, Root, RootSystem, ScaledForm, Weight};

/// Default ceiling on `dim V_λ` for explicit weight enumeration.
pub const DEFAULT_DIM_CAP: u64 = 200_000;

/// The weights of `V_λ` with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    highest_weight: Weight,
    dominant: BTreeMap<Weight, u64>,
    entries: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    /// Every weight with its multiplicity.
    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    /// Multiplicities of the dominant weights only, one per Weyl orbit.
    pub fn dominant_entries(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `(1/dim) Σ mult(μ)·⟨μ,μ⟩^{r/2}` for even `r ≥ 2`.
    pub fn expected_power_norm(&self, rs: &RootSystem, r: u32) -> Result<Rational> {
        if r == 0 || r % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "power r = {r} must be a positive even integer"
            )));
        }
        let form = rs.root_data()?.form();
        let half = r / 2;
        let mut total = BigInt::from(0);
        for (mu, &m) in &self.entries {
            let n = BigInt::from(form.pair(mu.coords(), mu.coords()));
            total += num::pow(n, half as usize) * BigInt::from(m);
        }
        let den = num::pow(BigInt::from(form.den), half as usize) * BigInt::from(self.dim());
        Ok(Rational::new(total, den))
    }

    /// `(1/dim) Σ mult(μ)·⟨μ,μ⟩`.
    pub fn expected_norm(&self, rs: &RootSystem) -> Result<Rational> {
        self.expected_power_norm(rs, 2)
    }
}

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Weyl dimension formula `∏_{α>0} ⟨α, λ+ρ⟩ / ⟨α, ρ⟩`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    let data = rs.root_data()?;
    require_dominant(rs, lambda)?;
    let form = data.engine_form();
    let rho = data.rho();
    let shifted = lambda + rho;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in data.positive_roots() {
        num *= BigInt::from(form.pair(alpha.weight.coords(), shifted.coords()));
        den *= BigInt::from(form.pair(alpha.weight.coords(), rho.coords()));
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r == BigInt::from(0));
    Ok(q)
}

/// Weight multiplicities with the default dimension cap.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<WeightSystem> {
    weight_multiplicities_capped(rs, lambda, DEFAULT_DIM_CAP)
}

/// Weight multiplicities of `V_λ`, refusing representations of dimension
/// above `cap`.
pub fn weight_multiplicities_capped(
    rs: &RootSystem,
    lambda: &Weight,
    cap: u64,
) -> Result<WeightSystem> {
    let dim = weyl_dim(rs, lambda)?;
    if dim > BigInt::from(cap) {
        return Err(Error::CapExceeded { dim: dim.to_string(), cap });
    }
    let data = rs.root_data()?;
    let dominant = freudenthal(data.cartan_matrix(), data.positive_roots(), data.engine_form(), data.rho(), lambda);

    let mut entries = BTreeMap::new();
    for (mu, &m) in &dominant {
        for x in orbit_raw(data.cartan_matrix(), mu) {
            entries.insert(x, m);
        }
    }
    let ws = WeightSystem { highest_weight: lambda.clone(), dominant, entries };
    debug_assert_eq!(BigInt::from(ws.dim()), dim);
    Ok(ws)
}

/// Dominant weights `μ ≤ λ`, each with its depth `ht(λ − μ)`.
///
/// Every dominant `μ < λ` lies below some dominant `μ + α` with `α > 0` and
/// `μ + α ≤ λ`, so subtracting positive roots while staying dominant reaches
/// them all.
fn dominant_weights_below(roots: &[Root], lambda: &Weight) -> Vec<(Weight, u32)> {
    let mut depth: HashMap<Weight, u32> = HashMap::from([(lambda.clone(), 0)]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for alpha in roots {
            let nu = &mu - &alpha.weight;
            if nu.is_dominant() && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + alpha.height);
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<(Weight, u32)> = depth.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Freudenthal's recursion
/// `m(μ)(‖λ+ρ‖² − ‖μ+ρ‖²) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)⟨μ+kα, α⟩`,
/// run over dominant weights in order of depth.
fn freudenthal(
    cartan: &[Vec<i64>],
    roots: &[Root],
    form: &ScaledForm,
    rho: &Weight,
    lambda: &Weight,
) -> BTreeMap<Weight, u64> {
    let lr = lambda + rho;
    let top = form.pair(lr.coords(), lr.coords());
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (mu, d) in dominant_weights_below(roots, lambda) {
        if d == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mr = &mu + rho;
        let gap = top - form.pair(mr.coords(), mr.coords());
        let mut acc: i128 = 0;
        for alpha in roots {
            let mut nu = &mu + &alpha.weight;
            while let Some(&m) = mult.get(&dominant_raw(cartan, &nu)) {
                acc += m as i128 * form.pair(nu.coords(), alpha.weight.coords());
                nu = &nu + &alpha.weight;
            }
        }
        let acc = 2 * acc;
        assert!(gap > 0 && acc % gap == 0, "Freudenthal step must be exact");
        let m = acc / gap;
        if m > 0 {
            mult.insert(mu, m.to_u64().expect("multiplicity fits in u64"));
        }
    }
    mult.into_iter().collect()
}

/// `(1/dim) Σ mult(μ)·⟨μ,μ⟩` over the weights of `V_λ`.
pub fn expected_norm(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    weight_multiplicities(rs, lambda)?.expected_norm(rs)
}

/// `(1/dim) Σ mult(μ)·⟨μ,μ⟩^{r/2}` over the weights of `V_λ`, `r` even.
pub fn expected_power_norm(rs: &RootSystem, lambda: &Weight, r: u32) -> Result<Rational> {
    weight_multiplicities(rs, lambda)?.expected_power_norm(rs, r)
}

/// `⟨λ, λ+2ρ⟩`, the scalar by which the Casimir element acts on `V_λ`.
pub fn casimir_eigenvalue(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    let data = rs.root_data()?;
    require_dominant(rs, lambda)?;
    let shifted = lambda + &data.rho().scaled(2);
    rs.inner(lambda, &shifted)
}

/// The closed form `⟨λ, λ+2ρ⟩ / (h+1)` for the average weight norm.
pub fn theorem_rhs(rs: &RootSystem, lambda: &Weight) -> Result<Rational> {
    Ok(casimir_eigenvalue(rs, lambda)? / int(rs.h() as i64 + 1))
}
