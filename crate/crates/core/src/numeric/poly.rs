use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` over the rationals; `coeffs[k]` is the
/// coefficient of `q^k`. The highest stored coefficient is nonzero unless the
/// polynomial is zero, in which case `coeffs` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(super::int).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + c)
    }

    /// Returns `self / den`, failing unless the remainder vanishes.
    pub fn divide_exact(&self, den: &QPolynomial) -> Result<QPolynomial> {
        let (quot, rem) = self.div_rem(den)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    /// Long division. Fails only for a zero divisor.
    pub fn div_rem(&self, den: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let dd = den
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (k, d) in den.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// `[n]_q = 1 + q + ⋯ + q^{n-1}`, the generating function of the uniform
/// distribution on `{0, …, n-1}`.
pub fn q_integer(n: usize) -> QPolynomial {
    QPolynomial::new(vec![Rational::one(); n])
}

/// `[n]!_q = [1]_q [2]_q ⋯ [n]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &q_integer(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_integers(c.iter().copied())
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(1), p(&[1]));
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
        assert_eq!(q_integer(5), p(&[1, 1, 1, 1, 1]));
        assert_eq!(q_integer(3).to_string(), "1 + q + q^2");
    }

    #[test]
    fn long_division() {
        assert_eq!(p(&[1, 1, 1, 1]).divide_exact(&p(&[1, 1])).unwrap(), p(&[1, 0, 1]));
        let x = p(&[3, -2, 0, 5]);
        assert_eq!(x.divide_exact(&QPolynomial::one()).unwrap(), x);
        assert_eq!(p(&[1, 1, 1]).divide_exact(&p(&[1, 1])), Err(Error::NonExactDivision));
    }

    #[test]
    fn six_over_two_three_is_exact() {
        // [6] = (1+q)(1+q+q^2)(1-q+q^2), so the quotient is a polynomial with a
        // negative middle coefficient.
        let num = &q_integer(6) * &q_integer(1);
        let den = &q_integer(2) * &q_integer(3);
        assert_eq!(num.divide_exact(&den).unwrap(), p(&[1, -1, 1]));
    }

    #[test]
    fn zero_divisor_is_rejected() {
        assert!(p(&[1]).divide_exact(&QPolynomial::zero()).is_err());
    }

    proptest! {
        #[test]
        fn product_divides_back(
            a in proptest::collection::vec(-5i64..=5, 0..6),
            b in proptest::collection::vec(-5i64..=5, 1..5),
        ) {
            let a = p(&a);
            let b = p(&b);
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
        }

        #[test]
        fn div_rem_reconstructs(
            a in proptest::collection::vec(-5i64..=5, 0..7),
            b in proptest::collection::vec(-5i64..=5, 1..4),
        ) {
            let a = p(&a);
            let b = p(&b);
            prop_assume!(!b.is_zero());
            let (qt, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&qt * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
