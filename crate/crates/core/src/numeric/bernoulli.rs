use std::sync::RwLock;

use num::{BigInt, One, Zero};

use super::{binomial, Rational};

// Table grows on demand; readers take the shared lock.
static TABLE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// The `r`-th Bernoulli number with the convention `B_1 = +1/2`.
///
/// This is the sign that makes `κ_1([n]_q) = (B_1/1)(n-1) = (n-1)/2`, the mean
/// of the uniform distribution on `{0, …, n-1}`. Most references use
/// `B_1 = -1/2`; all other values agree.
pub fn bernoulli(r: usize) -> Rational {
    {
        let table = TABLE.read().unwrap_or_else(|e| e.into_inner());
        if let Some(b) = table.get(r) {
            return b.clone();
        }
    }
    let mut table = TABLE.write().unwrap_or_else(|e| e.into_inner());
    // Σ_{k=0}^{m} C(m+1, k) B_k = m + 1
    while table.len() <= r {
        let m = table.len();
        if m == 0 {
            table.push(Rational::one());
            continue;
        }
        let mut acc = Rational::from_integer(BigInt::from(m + 1));
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc -= Rational::from_integer(binomial(m as u64 + 1, k as u64)) * b;
            }
        }
        let lead = Rational::from_integer(BigInt::from(m + 1));
        table.push(acc / lead);
    }
    table[r].clone()
}
