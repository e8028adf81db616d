//! Type A through tableaux: weights of `V_λ` for `gl_n` are the contents of
//! semistandard tableaux of shape `λ` with entries at most `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, int, Rational};
use crate::rootsystem::Weight;

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// kept: their number records how many letters are in play.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.iter().take_while(|&&p| p > 0).count()
    }

    /// The first `n` parts, padded with zeros.
    pub fn padded(&self, n: usize) -> Vec<u64> {
        (0..n).map(|i| self.0.get(i).copied().unwrap_or(0)).collect()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u64).collect())
    }

    /// Hook length of the cell in row `r`, column `c` (0-based).
    pub fn hook(&self, r: usize, c: usize) -> u64 {
        let arm = self.0[r] - c as u64 - 1;
        let leg = self.0[r + 1..].iter().filter(|&&p| p > c as u64).count() as u64;
        arm + leg + 1
    }

    /// All hook lengths in reading order.
    pub fn hooks(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (r, &p) in self.0.iter().enumerate() {
            for c in 0..p as usize {
                out.push(self.hook(r, c));
            }
        }
        out
    }

    /// The `A_{n−1}` weight with fundamental coordinates `λᵢ − λᵢ₊₁`.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        self.check_rows(n)?;
        let p = self.padded(n);
        Ok(Weight(p.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect()))
    }

    fn check_rows(&self, n: usize) -> Result<()> {
        let rows = self.num_rows();
        if rows > n {
            return Err(Error::TooManyRows { rows, n });
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1,0`, `(2,1,0)` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// How many times each letter `1..=n` occurs in a tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContentVector(pub Vec<u64>);

impl ContentVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `⟨μ̄, μ̄⟩ = ⟨μ, μ⟩ − m²/n`, the squared length after projecting away
    /// from `(1,…,1)`.
    pub fn normalized_norm(&self) -> Rational {
        let n = self.0.len() as i64;
        let m: i64 = self.0.iter().map(|&c| c as i64).sum();
        let sq: i64 = self.0.iter().map(|&c| (c * c) as i64).sum();
        int(sq) - int(m * m) / int(n)
    }
}

/// Kostka numbers: semistandard tableaux of shape `λ` with entries in
/// `1..=n`, counted by content.
pub fn enumerate_ssyt(lambda: &Partition, n: usize) -> Result<BTreeMap<ContentVector, u64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    lambda.check_rows(n)?;
    let shape: Vec<usize> = lambda.parts()[..lambda.num_rows()].iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u8>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u64; n];
    let mut out = BTreeMap::new();
    fill(&cells, 0, n as u8, &mut grid, &mut content, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: u8,
    grid: &mut Vec<Vec<u8>>,
    content: &mut Vec<u64>,
    out: &mut BTreeMap<ContentVector, u64>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *out.entry(ContentVector(content.clone())).or_insert(0) += 1;
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    // Rows below in this column need strictly larger letters.
    let below = grid[r + 1..].iter().filter(|row| row.len() > c).count() as u8;
    for v in left.max(above)..=n.saturating_sub(below) {
        grid[r][c] = v;
        content[v as usize - 1] += 1;
        fill(cells, k + 1, n, grid, content, out);
        content[v as usize - 1] -= 1;
    }
    grid[r][c] = 0;
}

/// `s_λ(1,…,1) = ∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`; zero when `λ` has more
/// than `n` rows.
pub fn schur_eval_ones(lambda: &Partition, n: usize) -> BigInt {
    if lambda.num_rows() > n {
        return BigInt::zero();
    }
    let p = lambda.padded(n);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(p[i] as i64 - p[j] as i64 + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// `h_i(1,…,1) = C(n+i−1, i)`.
pub fn homog_eval_ones(i: u64, n: u64) -> BigInt {
    binomial(n + i - 1, i)
}

/// Average of `⟨μ̄, μ̄⟩` over all semistandard tableaux of shape `λ`.
pub fn expected_norm_tableaux(lambda: &Partition, n: usize) -> Result<Rational> {
    let kostka = enumerate_ssyt(lambda, n)?;
    let mut total = Rational::zero();
    let mut count = 0u64;
    for (mu, &k) in &kostka {
        total += mu.normalized_norm() * int(k as i64);
        count += k;
    }
    Ok(total / int(count as i64))
}

/// `⟨x̄, ȳ⟩ = Σ xᵢyᵢ − (Σxᵢ)(Σyᵢ)/n`.
fn normalized_inner(x: &[i64], y: &[i64]) -> Rational {
    let n = x.len() as i64;
    let dot: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let sx: i64 = x.iter().sum();
    let sy: i64 = y.iter().sum();
    int(dot) - int(sx * sy) / int(n)
}

/// `(1/(n+1)) ⟨λ̄, overline{λ+2ρ}⟩` with `ρ = (n−1, n−2, …, 0)`.
pub fn theorem_rhs_tableaux(lambda: &Partition, n: usize) -> Result<Rational> {
    lambda.check_rows(n)?;
    let p: Vec<i64> = lambda.padded(n).iter().map(|&x| x as i64).collect();
    let shifted: Vec<i64> = p.iter().enumerate().map(|(i, &x)| x + 2 * (n - 1 - i) as i64).collect();
    Ok(normalized_inner(&p, &shifted) / int(n as i64 + 1))
}

/// `C(n+x, x)` continued polynomially to `x ≥ −n`: `(x+1)⋯(x+n)/n!`.
fn binomial_poly(n: i64, x: i64) -> Rational {
    let prod: i64 = (1..=n).map(|k| x + k).product();
    Rational::new(BigInt::from(prod), factorial(n as u64))
}

/// The inclusion-exclusion evaluation
/// `−m²/n + (n!/(n+1)) Σⱼ [∏_{i≠j} 1/(λⱼ−λᵢ+i−j)] C(n+λⱼ−j, λⱼ−j) (n+2(λⱼ−j)+1)`.
pub fn pieri_rhs_closed_form(lambda: &Partition, n: usize) -> Result<Rational> {
    lambda.check_rows(n)?;
    let ni = n as i64;
    let p: Vec<i64> = lambda.padded(n).iter().map(|&x| x as i64).collect();
    let m: i64 = p.iter().sum();
    let mut sum = Rational::zero();
    for j in 1..=ni {
        let lj = p[j as usize - 1];
        let mut term = Rational::one();
        for i in (1..=ni).filter(|&i| i != j) {
            term /= int(lj - p[i as usize - 1] + i - j);
        }
        sum += term * binomial_poly(ni, lj - j) * int(ni + 2 * (lj - j) + 1);
    }
    let nf = Rational::from_integer(factorial(n as u64));
    Ok(-int(m * m) / int(ni) + nf / int(ni + 1) * sum)
}

/// Both sides of the degree-two identity behind the inclusion-exclusion
/// formula:
/// `2Σ_{i≤j} xᵢxⱼ + (n+1)² Σxᵢ + n(n+1)(3n²+5n+4)/12`
/// and `Σⱼ P(xⱼ)/∏_{i≠j}(xⱼ−xᵢ)` with `P(x) = (n+2x+1)∏ᵢ(x+i)`.
pub fn polynomial_identity_check(x: &[Rational]) -> Result<(Rational, Rational)> {
    let n = x.len() as i64;
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one coordinate".into()));
    }
    let rhs = identity_rhs(x)?;
    let quad = quadratic_part(x);
    let s: Rational = x.iter().sum();
    let lhs = quad + int((n + 1) * (n + 1)) * s + identity_constant(n as usize);
    Ok((lhs, rhs))
}

fn quadratic_part(x: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..x.len() {
        for j in i..x.len() {
            acc += &x[i] * &x[j];
        }
    }
    acc * int(2)
}

/// `n(n+1)(3n²+5n+4)/12`.
pub fn identity_constant(n: usize) -> Rational {
    let n = n as i64;
    int(n * (n + 1) * (3 * n * n + 5 * n + 4)) / int(12)
}

fn identity_rhs(x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    for i in 0..n {
        for j in i + 1..n {
            if x[i] == x[j] {
                return Err(Error::RepeatedCoordinate(i, j));
            }
        }
    }
    let big_p = |t: &Rational| -> Rational {
        let lead = int(n as i64 + 1) + t * int(2);
        (1..=n as i64).fold(lead, |acc, i| acc * (t + int(i)))
    };
    let mut sum = Rational::zero();
    for j in 0..n {
        let mut den = Rational::one();
        for i in (0..n).filter(|&i| i != j) {
            den *= &x[j] - &x[i];
        }
        sum += big_p(&x[j]) / den;
    }
    Ok(sum)
}

/// Recovers `(C₁, C₀)` in `RHS = 2Σ_{i≤j} xᵢxⱼ + C₁Σxᵢ + C₀` from the right
/// side alone, using the two specializations `xᵢ = −i` and `xᵢ = −i+1`.
pub fn extract_linear_and_constant(n: usize) -> Result<(Rational, Rational)> {
    let a: Vec<Rational> = (1..=n as i64).map(|i| int(-i)).collect();
    let b: Vec<Rational> = (1..=n as i64).map(|i| int(1 - i)).collect();
    let ra = identity_rhs(&a)? - quadratic_part(&a);
    let rb = identity_rhs(&b)? - quadratic_part(&b);
    let sa: Rational = a.iter().sum();
    let sb: Rational = b.iter().sum();
    let c1 = (&ra - &rb) / (&sa - &sb);
    let c0 = ra - &c1 * sa;
    Ok((c1, c0))
}

/// The right side at `xᵢ = −i+1` minus its value at `xᵢ = −i`.
pub fn identity_shift(n: usize) -> Result<Rational> {
    let a: Vec<Rational> = (1..=n as i64).map(|i| int(-i)).collect();
    let b: Vec<Rational> = (1..=n as i64).map(|i| int(1 - i)).collect();
    Ok(identity_rhs(&b)? - identity_rhs(&a)?)
}
