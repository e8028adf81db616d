use num::{BigInt, One, Zero};

use super::{binomial, QPolynomial, Rational};
use crate::error::{Error, Result};

/// Cumulants `κ_1..κ_R` from raw moments `m_0 = 1, m_1, …, m_R` through
/// `κ_n = m_n − Σ_{k=1}^{n−1} C(n−1, k−1) κ_k m_{n−k}`.
pub fn moments_to_cumulants(moments: &[Rational]) -> Vec<Rational> {
    assert!(
        moments.first().is_some_and(One::is_one),
        "zeroth raw moment must be 1"
    );
    let order = moments.len() - 1;
    let mut kappa: Vec<Rational> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut k_n = moments[n].clone();
        for k in 1..n {
            let c = Rational::from_integer(binomial(n as u64 - 1, k as u64 - 1));
            k_n -= c * &kappa[k - 1] * &moments[n - k];
        }
        kappa.push(k_n);
    }
    kappa
}

/// Raw moments `m_0..m_R` of the distribution whose generating function is
/// `dist` (coefficient of `q^k` is the weight of outcome `k`).
pub fn raw_moments(dist: &QPolynomial, order: usize) -> Result<Vec<Rational>> {
    if let Some(k) = dist.coeffs().iter().position(|c| c < &Rational::zero()) {
        return Err(Error::NegativeCoefficient(k));
    }
    let total: Rational = dist.coeffs().iter().sum();
    if total.is_zero() {
        return Err(Error::InvalidArgument("distribution has zero total mass".into()));
    }
    let mut moments = vec![Rational::zero(); order + 1];
    for (k, c) in dist.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let kk = BigInt::from(k);
        let mut pow = BigInt::one();
        for m in moments.iter_mut() {
            *m += c * Rational::from_integer(pow.clone());
            pow *= &kk;
        }
    }
    Ok(moments.into_iter().map(|m| m / &total).collect())
}
