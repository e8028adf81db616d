//! Simultaneous `(a,b)`-cores and the lattice-point model of `sl_a` in the
//! `b`-fold dilated fundamental alcove.

use std::collections::BTreeSet;

use num::{Integer, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{int, Rational};
use crate::rootsystem::Weight;
use crate::typea::Partition;

/// Default ceiling on `a` and `b` for core enumeration.
pub const DEFAULT_CORE_CAP: u64 = 12;

/// A partition together with its first-column hook lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CorePartition {
    partition: Partition,
    beta_set: BTreeSet<u64>,
}

impl CorePartition {
    pub fn from_partition(partition: Partition) -> Self {
        let rows = partition.num_rows();
        let beta_set = partition.parts()[..rows]
            .iter()
            .enumerate()
            .map(|(i, &p)| p + (rows - 1 - i) as u64)
            .collect();
        Self { partition: Partition::new(partition.parts()[..rows].to_vec()).unwrap(), beta_set }
    }

    /// The inverse of taking first-column hooks; `0` is not a valid hook.
    pub fn from_beta_set(beta_set: BTreeSet<u64>) -> Result<Self> {
        if beta_set.contains(&0) {
            return Err(Error::InvalidArgument("beta set cannot contain 0".into()));
        }
        let parts: Vec<u64> =
            beta_set.iter().rev().enumerate().map(|(i, &b)| b - (beta_set.len() - 1 - i) as u64).collect();
        Ok(Self { partition: Partition::new(parts)?, beta_set })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn beta_set(&self) -> &BTreeSet<u64> {
        &self.beta_set
    }

    pub fn size(&self) -> u64 {
        self.partition.size()
    }

    /// `β ∈ S, β ≥ a ⇒ β − a ∈ S`.
    pub fn is_core_by_beta(&self, a: u64) -> bool {
        self.beta_set.iter().all(|&b| b < a || self.beta_set.contains(&(b - a)))
    }
}

/// No cell has hook length exactly `a`.
pub fn is_core(p: &Partition, a: u64) -> bool {
    !p.hooks().contains(&a)
}

/// No cell has hook length divisible by `a`; equivalent to [`is_core`].
pub fn is_core_by_divisibility(p: &Partition, a: u64) -> bool {
    p.hooks().iter().all(|h| h % a != 0)
}

fn check_pair(a: u64, b: u64, cap: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("a and b must be positive".into()));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    if a.max(b) > cap {
        return Err(Error::CapExceeded { dim: format!("max(a,b) = {}", a.max(b)), cap });
    }
    Ok(())
}

/// All `(a,b)`-cores with the default cap.
pub fn simultaneous_cores(a: u64, b: u64) -> Result<Vec<CorePartition>> {
    simultaneous_cores_capped(a, b, DEFAULT_CORE_CAP)
}

/// All partitions that are both `a`-cores and `b`-cores, sorted by size and
/// then by parts.
///
/// On an `a`-abacus an `a`-core is a choice of bead count `kᵣ` on each
/// runner `r ≠ 0`. Being a `b`-core only links runner `r` to runner
/// `r − b mod a`, and because `gcd(a,b) = 1` the runners form one cycle
/// through the empty runner `0`. Walking that cycle, each count is bounded by
/// the previous one alone, so the search never backtracks out of a dead end.
pub fn simultaneous_cores_capped(a: u64, b: u64, cap: u64) -> Result<Vec<CorePartition>> {
    check_pair(a, b, cap)?;
    if a == 1 || b == 1 {
        return Ok(vec![CorePartition::from_partition(Partition::empty())]);
    }
    let order: Vec<u64> = (1..a).map(|t| t * b % a).collect();
    let mut counts = vec![0u64; a as usize];
    let mut out = Vec::new();
    walk(a, b, &order, 0, &mut counts, &mut out);
    out.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.partition.cmp(&y.partition)));
    Ok(out)
}

fn walk(a: u64, b: u64, order: &[u64], t: usize, counts: &mut Vec<u64>, out: &mut Vec<CorePartition>) {
    let Some(&r) = order.get(t) else {
        let beta = (1..a).flat_map(|r| (0..counts[r as usize]).map(move |j| r + j * a)).collect();
        out.push(CorePartition::from_beta_set(beta).expect("beads avoid 0"));
        return;
    };
    let prev = (r + a - b % a) % a;
    let mut k = 0;
    loop {
        counts[r as usize] = k;
        walk(a, b, order, t + 1, counts, out);
        // Adding bead r + k·a needs r + k·a − b on the previous runner.
        let bead = r + k * a;
        if bead >= b {
            let below = bead - b;
            if below % a != prev || below / a >= counts[prev as usize] {
                break;
            }
        }
        k += 1;
    }
    counts[r as usize] = 0;
}

/// Average size of an `(a,b)`-core.
pub fn expected_size(a: u64, b: u64) -> Result<Rational> {
    let cores = simultaneous_cores(a, b)?;
    let total: u64 = cores.iter().map(|c| c.size()).sum();
    Ok(Rational::new(total.into(), (cores.len() as u64).into()))
}

/// A point of the `sl_a` coweight lattice in sum-zero coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlcovePoint {
    coords: Vec<Rational>,
}

impl AlcovePoint {
    /// Checks that the coordinates sum to zero and have integral differences.
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidArgument("need at least two coordinates".into()));
        }
        let p = AlcovePoint { coords };
        if !p.coords.iter().sum::<Rational>().is_zero() || !p.pairings().iter().all(|c| c.is_integer()) {
            return Err(Error::NotInAlcove);
        }
        Ok(p)
    }

    /// `Σ cᵢ ωᵢ` with `ωᵢ = e₁+⋯+eᵢ − (i/a)(e₁+⋯+eₐ)`.
    pub fn from_fundamental(a: usize, c: &[i64]) -> Self {
        assert_eq!(c.len() + 1, a);
        let mut coords = vec![Rational::zero(); a];
        for (i, &ci) in c.iter().enumerate() {
            let shift = int(ci * (i as i64 + 1)) / int(a as i64);
            for (j, x) in coords.iter_mut().enumerate() {
                if j <= i {
                    *x += int(ci);
                }
                *x -= &shift;
            }
        }
        AlcovePoint { coords }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn a(&self) -> usize {
        self.coords.len()
    }

    /// `⟨x, αᵢ⟩ = xᵢ − xᵢ₊₁`.
    fn pairings(&self) -> Vec<Rational> {
        self.coords.windows(2).map(|w| &w[0] - &w[1]).collect()
    }

    pub fn fundamental_coords(&self) -> Vec<i64> {
        self.pairings().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
    }

    pub fn in_dilated_alcove(&self, b: u64) -> bool {
        let c = self.fundamental_coords();
        c.iter().all(|&x| x >= 0) && c.iter().sum::<i64>() <= b as i64
    }
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(p, q)| p * q).sum()
}

/// `ρ = ((a−1)/2, (a−3)/2, …, −(a−1)/2)`; it is also `ρ̌` since `sl_a` is
/// simply laced.
fn rho(a: usize) -> Vec<Rational> {
    (0..a).map(|i| int(a as i64 - 1 - 2 * i as i64) / int(2)).collect()
}

/// The long cycle `c = s_{a−1}⋯s₂s₁` acting on coordinates:
/// `(cx)ᵢ = xᵢ₊₁`, indices mod `a`.
pub fn coxeter_element(x: &[Rational]) -> Vec<Rational> {
    let a = x.len();
    (0..a).map(|i| x[(i + 1) % a].clone()).collect()
}

/// Coweight lattice points `x` with `⟨x, αᵢ⟩ ≥ 0` and `⟨x, θ⟩ ≤ b`.
pub fn alcove_points(a: u64, b: u64) -> Result<Vec<AlcovePoint>> {
    if a < 2 {
        return Err(Error::InvalidArgument("a must be at least 2".into()));
    }
    let rank = a as usize - 1;
    let mut out = Vec::new();
    let mut c = vec![0i64; rank];
    loop {
        out.push(AlcovePoint::from_fundamental(a as usize, &c));
        // Next composition with sum ≤ b, in lexicographic order.
        let mut i = rank;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            c[i] += 1;
            if c.iter().sum::<i64>() <= b as i64 {
                break;
            }
            c[i] = 0;
        }
    }
}

/// `x_b = x − bρ̌/h` with `h = a`.
fn shifted(x: &AlcovePoint, b: u64) -> Vec<Rational> {
    let a = x.a() as i64;
    let r = rho(x.a());
    x.coords.iter().zip(&r).map(|(xi, ri)| xi - ri * int(b as i64) / int(a)).collect()
}

/// `(h/2)‖x − bρ̌/h‖² − (h/2)‖ρ̌/h‖²` with `h = a`.
pub fn size_b_statistic(x: &AlcovePoint, b: u64) -> Rational {
    let h = int(x.a() as i64);
    let xb = shifted(x, b);
    let r: Vec<Rational> = rho(x.a()).iter().map(|v| v / &h).collect();
    &h / int(2) * (dot(&xb, &xb) - dot(&r, &r))
}

/// `⟨c x_b, x_b⟩`.
pub fn cx_statistic(x: &AlcovePoint, b: u64) -> Rational {
    let xb = shifted(x, b);
    dot(&coxeter_element(&xb), &xb)
}

/// `φ(x) = (1 − c)(x − bρ̌/h)` as an `A_{a−1}` weight.
pub fn phi(x: &AlcovePoint, b: u64) -> Result<Weight> {
    if !x.in_dilated_alcove(b) {
        return Err(Error::NotInAlcove);
    }
    let xb = shifted(x, b);
    let cx = coxeter_element(&xb);
    let y: Vec<Rational> = xb.iter().zip(&cx).map(|(p, q)| p - q).collect();
    let w: Vec<i64> = y
        .windows(2)
        .map(|p| {
            let d = &p[0] - &p[1];
            assert!(d.is_integer(), "image is integral");
            d.to_integer().to_i64().unwrap()
        })
        .collect();
    Ok(Weight(w))
}

/// Average of a statistic over `alcove_points(a, b)`.
fn alcove_mean(a: u64, b: u64, f: impl Fn(&AlcovePoint) -> Rational) -> Result<Rational> {
    let pts = alcove_points(a, b)?;
    let total: Rational = pts.iter().map(f).sum();
    Ok(total / int(pts.len() as i64))
}

pub fn size_b_mean(a: u64, b: u64) -> Result<Rational> {
    alcove_mean(a, b, |x| size_b_statistic(x, b))
}

/// Average of `⟨c x_b, x_b⟩` over the dilated alcove.
pub fn cx_mean(a: u64, b: u64) -> Result<Rational> {
    alcove_mean(a, b, |x| cx_statistic(x, b))
}

/// `(a−1)(b−1)(a+b+1)/24`.
pub fn expected_size_closed_form(a: u64, b: u64) -> Rational {
    let (a, b) = (a as i64, b as i64);
    int((a - 1) * (b - 1) * (a + b + 1)) / int(24)
}

/// `(a−5)(a−1)b(a+b)/(12a(a+1))`.
pub fn cx_mean_closed_form(a: u64, b: u64) -> Rational {
    let (a, b) = (a as i64, b as i64);
    int((a - 5) * (a - 1) * b * (a + b)) / int(12 * a * (a + 1))
}

/// `(a²−1)/(6a) + (4/a)·E[size_b] − 2·E[⟨cx_b, x_b⟩]`, which equals the
/// average norm of a weight of `V_{bω₁}` when `φ` is a bijection.
pub fn chain_value(a: u64, b: u64) -> Result<Rational> {
    let ai = a as i64;
    Ok(int(ai * ai - 1) / int(6 * ai) + int(4) / int(ai) * size_b_mean(a, b)? - int(2) * cx_mean(a, b)?)
}

/// `(a−1)b(a+b)/(a(a+1))`.
pub fn sym_power_norm_closed_form(a: u64, b: u64) -> Rational {
    let (a, b) = (a as i64, b as i64);
    int((a - 1) * b * (a + b)) / int(a * (a + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn core_predicates() {
        assert!(is_core(&Partition::empty(), 3));
        assert!(is_core(&part("3,1,1"), 3));
        assert!(is_core(&part("3,1,1"), 4));
        assert!(!is_core(&part("1,1,1"), 3));
        let c = CorePartition::from_partition(part("3,1,1"));
        assert_eq!(c.beta_set(), &BTreeSet::from([1, 2, 5]));
        assert!(c.is_core_by_beta(3) && c.is_core_by_beta(4) && !c.is_core_by_beta(5));
    }

    #[test]
    fn beta_round_trip() {
        for s in ["", "1", "2,2", "4,2,1", "3,3,3,1"] {
            let c = CorePartition::from_partition(part(s));
            let back = CorePartition::from_beta_set(c.beta_set().clone()).unwrap();
            assert_eq!(back, c);
        }
        assert!(CorePartition::from_beta_set(BTreeSet::from([0, 2])).is_err());
    }

    #[test]
    fn three_four_cores() {
        let cores = simultaneous_cores(3, 4).unwrap();
        let parts: Vec<String> = cores.iter().map(|c| c.partition().to_string()).collect();
        assert_eq!(parts, vec!["()", "(1)", "(1,1)", "(2)", "(3,1,1)"]);
        assert_eq!(expected_size(3, 4).unwrap(), int(2));
    }

    #[test]
    fn small_pairs() {
        assert_eq!(simultaneous_cores(2, 3).unwrap().len(), 2);
        assert_eq!(expected_size(2, 3).unwrap(), ratio(1, 2));
        assert_eq!(simultaneous_cores(1, 7).unwrap().len(), 1);
        assert_eq!(expected_size(4, 5).unwrap(), int(5));
        assert_eq!(simultaneous_cores(4, 6), Err(Error::NotCoprime { a: 4, b: 6 }));
        assert!(matches!(simultaneous_cores(13, 14), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn alcove_counts() {
        assert_eq!(alcove_points(3, 4).unwrap().len(), 15);
        assert_eq!(alcove_points(2, 3).unwrap().len(), 4);
        assert_eq!(alcove_points(4, 0).unwrap(), vec![AlcovePoint::from_fundamental(4, &[0, 0, 0])]);
    }

    #[test]
    fn size_statistic() {
        assert_eq!(size_b_mean(2, 3).unwrap(), ratio(1, 2));
        assert_eq!(size_b_mean(3, 4).unwrap(), int(2));
        assert_eq!(cx_mean(2, 3).unwrap(), ratio(-5, 8));
        assert_eq!(cx_mean(3, 4).unwrap(), ratio(-7, 9));
        assert_eq!(chain_value(2, 3).unwrap(), ratio(5, 2));
    }

    #[test]
    fn phi_in_rank_one() {
        let img: Vec<Weight> =
            alcove_points(2, 2).unwrap().iter().map(|x| phi(x, 2).unwrap()).collect();
        assert_eq!(img, vec![Weight(vec![-2]), Weight(vec![0]), Weight(vec![2])]);
        let outside = AlcovePoint::from_fundamental(2, &[3]);
        assert_eq!(phi(&outside, 2), Err(Error::NotInAlcove));
    }

    #[test]
    fn point_validation() {
        assert!(AlcovePoint::new(vec![ratio(1, 3), ratio(1, 3), ratio(-2, 3)]).is_ok());
        assert_eq!(AlcovePoint::new(vec![ratio(1, 2), ratio(1, 3), int(0)]), Err(Error::NotInAlcove));
        let p = AlcovePoint::from_fundamental(3, &[1, 2]);
        assert_eq!(p.fundamental_coords(), vec![1, 2]);
        assert!(p.in_dilated_alcove(3) && !p.in_dilated_alcove(2));
    }
}
