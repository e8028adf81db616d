//! Cumulants of distributions whose generating function is a ratio of
//! products of `q`-integers, and the catalog of such distributions coming
//! from Coxeter combinatorics.

mod poset;

use std::collections::BTreeMap;
use std::fmt;

use num::Integer;
pub use poset::{minuscule_nodes, minuscule_poset, MinusculePoset};

use crate::error::{Error, Result};
use crate::numeric::{bernoulli, int, moments_to_cumulants, q_integer, raw_moments, QPolynomial, Rational};
use crate::rootsystem::{CartanType, RootSystem};

/// `∏ [aᵢ]_q / ∏ [bⱼ]_q`. Whether the ratio is a polynomial is only checked
/// when it is expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QProduct {
    pub numerators: Vec<u64>,
    pub denominators: Vec<u64>,
}

impl QProduct {
    pub fn new(mut numerators: Vec<u64>, mut denominators: Vec<u64>) -> Self {
        numerators.sort_unstable();
        denominators.sort_unstable();
        Self { numerators, denominators }
    }

    /// The generating polynomial, exactly divided out.
    pub fn expand(&self) -> Result<QPolynomial> {
        let prod = |xs: &[u64]| xs.iter().fold(QPolynomial::one(), |acc, &a| &acc * &q_integer(a as usize));
        prod(&self.numerators).divide_exact(&prod(&self.denominators))
    }
}

/// `κ_r = (B_r/r)(Σᵢ (aᵢʳ − 1) − Σⱼ (bⱼʳ − 1))`.
///
/// Each factor `[n]_q` contributes `(B_r/r)(nʳ − 1)`; with as many numerators
/// as denominators the `−1` terms cancel and this is `(B_r/r) Σ(aᵢʳ − bᵢʳ)`.
pub fn lemma_cumulant(d: &QProduct, r: u32) -> Rational {
    assert!(r >= 1, "cumulant order starts at 1");
    let pow_sum = |xs: &[u64]| -> Rational {
        xs.iter().map(|&x| Rational::from_integer(num::pow(num::BigInt::from(x), r as usize) - 1)).sum()
    };
    bernoulli(r as usize) / int(r as i64) * (pow_sum(&d.numerators) - pow_sum(&d.denominators))
}

/// `κ_1..κ_R` from the lemma.
pub fn lemma_cumulants(d: &QProduct, max_r: u32) -> Vec<Rational> {
    (1..=max_r).map(|r| lemma_cumulant(d, r)).collect()
}

/// `κ_1..κ_R` from the expanded distribution's raw moments.
pub fn brute_cumulants(d: &QProduct, max_r: u32) -> Result<Vec<Rational>> {
    let poly = d.expand()?;
    let moments = raw_moments(&poly, max_r as usize)?;
    Ok(moments_to_cumulants(&moments))
}

pub fn brute_cumulant(d: &QProduct, r: u32) -> Result<Rational> {
    Ok(brute_cumulants(d, r)?.pop().expect("r ≥ 1"))
}

/// Lengths of Weyl group elements: `∏ [dᵢ]_q`.
pub fn inversions_distribution(rs: &RootSystem) -> QProduct {
    QProduct::new(rs.degrees().iter().map(|&d| d as u64).collect(), vec![])
}

/// `∏ [p + (p·eᵢ mod h)]_q / [dᵢ]_q` for `gcd(p, h) = 1`.
pub fn rational_catalan_distribution(rs: &RootSystem, p: u64) -> Result<QProduct> {
    let h = rs.h() as u64;
    if p == 0 || p.gcd(&h) != 1 {
        return Err(Error::NotCoprime { a: p, b: h });
    }
    let nums = rs.exponents().iter().map(|&e| p + (p * e as u64) % h).collect();
    let dens = rs.degrees().iter().map(|&d| d as u64).collect();
    Ok(QProduct::new(nums, dens))
}

/// Plane partitions of height at most `k`: `∏_{p∈P} [k + ht(p)]_q / [ht(p)]_q`.
pub fn pp_distribution(poset: &MinusculePoset, k: u64) -> QProduct {
    let hts = poset.heights().iter().map(|&h| h as u64);
    QProduct::new(hts.clone().map(|h| k + h).collect(), hts.collect())
}

/// Major index of linear extensions: `[|P|]!_q / ∏_{p∈P} [ht(p)]_q`.
pub fn syt_maj_distribution(poset: &MinusculePoset) -> QProduct {
    QProduct::new(
        (1..=poset.size() as u64).collect(),
        poset.heights().iter().map(|&h| h as u64).collect(),
    )
}

/// Descending plane partitions: `∏_{i=0}^{n−1} [3i+1]!_q / [n+i]!_q`.
pub fn dpp_distribution(n: u64) -> Result<QProduct> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let nums = (0..n).flat_map(|i| 1..=3 * i + 1).collect();
    let dens = (0..n).flat_map(|i| 1..=n + i).collect();
    Ok(QProduct::new(nums, dens))
}

/// A named member of the catalog together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Catalog {
    Inversions { cartan_type: CartanType },
    RationalCatalan { cartan_type: CartanType, p: u64 },
    PlanePartitions { cartan_type: CartanType, node: usize, k: u64 },
    SytMaj { cartan_type: CartanType, node: usize },
    Dpp { n: u64 },
}

impl Catalog {
    /// The `a × b` rectangle is the minuscule poset of `A_{a+b−1}` at node `a`.
    pub fn rectangle_pp(a: usize, b: usize, k: u64) -> Result<Self> {
        Ok(Catalog::PlanePartitions { cartan_type: CartanType::new(crate::rootsystem::Family::A, a + b - 1)?, node: a, k })
    }

    pub fn rectangle_syt(a: usize, b: usize) -> Result<Self> {
        Ok(Catalog::SytMaj { cartan_type: CartanType::new(crate::rootsystem::Family::A, a + b - 1)?, node: a })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Catalog::Inversions { .. } => "inv",
            Catalog::RationalCatalan { .. } => "cat",
            Catalog::PlanePartitions { .. } => "pp",
            Catalog::SytMaj { .. } => "syt",
            Catalog::Dpp { .. } => "dpp",
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("kind".to_string(), self.kind().to_string());
        match self {
            Catalog::Inversions { cartan_type } => {
                m.insert("type".into(), cartan_type.to_string());
            }
            Catalog::RationalCatalan { cartan_type, p } => {
                m.insert("type".into(), cartan_type.to_string());
                m.insert("p".into(), p.to_string());
            }
            Catalog::PlanePartitions { cartan_type, node, k } => {
                m.insert("type".into(), cartan_type.to_string());
                m.insert("node".into(), node.to_string());
                m.insert("k".into(), k.to_string());
            }
            Catalog::SytMaj { cartan_type, node } => {
                m.insert("type".into(), cartan_type.to_string());
                m.insert("node".into(), node.to_string());
            }
            Catalog::Dpp { n } => {
                m.insert("n".into(), n.to_string());
            }
        }
        m
    }

    fn poset(cartan_type: CartanType, node: usize) -> Result<MinusculePoset> {
        minuscule_poset(&RootSystem::build(cartan_type), node)
    }

    pub fn distribution(&self) -> Result<QProduct> {
        match *self {
            Catalog::Inversions { cartan_type } => Ok(inversions_distribution(&RootSystem::build(cartan_type))),
            Catalog::RationalCatalan { cartan_type, p } => {
                rational_catalan_distribution(&RootSystem::build(cartan_type), p)
            }
            Catalog::PlanePartitions { cartan_type, node, k } => {
                Ok(pp_distribution(&Self::poset(cartan_type, node)?, k))
            }
            Catalog::SytMaj { cartan_type, node } => Ok(syt_maj_distribution(&Self::poset(cartan_type, node)?)),
            Catalog::Dpp { n } => dpp_distribution(n),
        }
    }

    /// The closed forms for the mean, and where known the variance and `κ₄`.
    pub fn closed_form(&self) -> Result<ClosedForm> {
        closed_form_stats(self)
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.params().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Closed-form statistics of a catalog distribution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub mean: Rational,
    pub variance: Option<Rational>,
    pub kappa4: Option<Rational>,
}

/// Closed-form mean, variance and `κ₄` as far as they are known:
///
/// | kind | `E` | `V` | `κ₄` |
/// |---|---|---|---|
/// | inversions | `|Φ⁺|/2` | `n(γ+5h+h²)/72` | |
/// | rational Catalan | `n(p−1)/2` | `n(p−1)(p+h+1)/12` (when `p` permutes the exponents mod `h`) | `−n(p−1)(h+p+1)(p²+ph+γ+1)/120` (Weyl groups) |
/// | plane partitions | `k|P|/2` | `k(k+h)|P|/12` | |
/// | major index | `|P|(|P|+1−h)/4` | | |
/// | DPP | `n(n²−1)/6` | `n²(n²−1)/12` | |
pub fn closed_form_stats(kind: &Catalog) -> Result<ClosedForm> {
    let z = |x: i64| int(x);
    Ok(match *kind {
        Catalog::Inversions { cartan_type } => {
            let rs = RootSystem::build(cartan_type);
            let (n, h, g) = (rs.rank() as i64, rs.h() as i64, rs.gamma() as i64);
            ClosedForm {
                mean: z(rs.num_positive_roots() as i64) / z(2),
                variance: Some(z(n * (g + 5 * h + h * h)) / z(72)),
                kappa4: None,
            }
        }
        Catalog::RationalCatalan { cartan_type, p } => {
            let rs = RootSystem::build(cartan_type);
            rational_catalan_distribution(&rs, p)?;
            // The variance formula rests on p permuting the exponents mod h,
            // which can fail for H₃, H₄ and I₂(m).
            let permutes = multiplication_permutes_exponents(&rs, p);
            let (n, h, g, p) = (rs.rank() as i64, rs.h() as i64, rs.gamma() as i64, p as i64);
            ClosedForm {
                mean: z(n * (p - 1)) / z(2),
                variance: permutes.then(|| z(n * (p - 1) * (p + h + 1)) / z(12)),
                kappa4: cartan_type
                    .is_crystallographic()
                    .then(|| -z(n * (p - 1) * (h + p + 1) * (p * p + p * h + g + 1)) / z(120)),
            }
        }
        Catalog::PlanePartitions { cartan_type, node, k } => {
            let poset = Catalog::poset(cartan_type, node)?;
            let (size, h, k) = (poset.size() as i64, poset.ambient_h() as i64, k as i64);
            ClosedForm {
                mean: z(k * size) / z(2),
                variance: Some(z(k * (k + h) * size) / z(12)),
                kappa4: None,
            }
        }
        Catalog::SytMaj { cartan_type, node } => {
            let poset = Catalog::poset(cartan_type, node)?;
            let (size, h) = (poset.size() as i64, poset.ambient_h() as i64);
            ClosedForm { mean: z(size * (size + 1 - h)) / z(4), variance: None, kappa4: None }
        }
        Catalog::Dpp { n } => {
            dpp_distribution(n)?;
            let n = n as i64;
            ClosedForm {
                mean: z(n * (n * n - 1)) / z(6),
                variance: Some(z(n * n * (n * n - 1)) / z(12)),
                kappa4: None,
            }
        }
    })
}

/// The desk-scale grid: inversions for every type of rank ≤ 4 and `H₃`,
/// rational Catalan for `A₁..A₃`, `B₂` with coprime `p ≤ 9`, plane
/// partitions in rectangles with `a, b, k ≤ 3` and in `D₄` at node 1 with
/// `k ≤ 2`, major index on rectangles with `a, b ≤ 3`, and DPP for `n ≤ 5`.
pub fn desk_scale_catalog() -> Vec<Catalog> {
    use crate::rootsystem::Family::*;
    let ct = |f, n| CartanType::new(f, n).expect("valid type");
    let mut out = Vec::new();
    let mut small = Vec::new();
    for n in 1..=4 {
        small.push(ct(A, n));
    }
    for n in 2..=4 {
        small.push(ct(B, n));
        small.push(ct(C, n));
    }
    small.push(ct(D, 4));
    small.push(ct(F, 4));
    small.push(ct(G, 2));
    small.push(ct(H, 2));
    small.push(ct(H, 3));
    small.push(ct(H, 4));
    for m in 3..=8 {
        small.push(CartanType::dihedral(m).expect("valid type"));
    }
    for t in small {
        out.push(Catalog::Inversions { cartan_type: t });
    }
    for t in [ct(A, 1), ct(A, 2), ct(A, 3), ct(B, 2)] {
        let h = t.degrees().last().copied().unwrap() as u64;
        for p in 1..=9u64 {
            if p.gcd(&h) == 1 {
                out.push(Catalog::RationalCatalan { cartan_type: t, p });
            }
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for k in 0..=3 {
                out.push(Catalog::rectangle_pp(a, b, k).expect("valid rectangle"));
            }
            out.push(Catalog::rectangle_syt(a, b).expect("valid rectangle"));
        }
    }
    for k in 0..=2 {
        out.push(Catalog::PlanePartitions { cartan_type: ct(D, 4), node: 1, k });
    }
    for n in 1..=5 {
        out.push(Catalog::Dpp { n });
    }
    out
}

/// Whether `eᵢ ↦ p·eᵢ mod h` permutes the exponents.
pub fn multiplication_permutes_exponents(rs: &RootSystem, p: u64) -> bool {
    let h = rs.h() as u64;
    let mut e: Vec<u64> = rs.exponents().iter().map(|&x| x as u64).collect();
    let mut pe: Vec<u64> = e.iter().map(|&x| p * x % h).collect();
    e.sort_unstable();
    pe.sort_unstable();
    e == pe
}
