//! Finite root systems with the invariant form normalized so that long roots
//! have squared length 2, plus the degree/exponent data of the
//! noncrystallographic Coxeter groups.

mod cartan_type;
mod weight;

use std::collections::{BTreeSet, HashSet, VecDeque};

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

pub use cartan_type::{CartanType, Family};
pub use weight::Weight;

use crate::error::{Error, Result};
use crate::numeric::linalg::{self, Matrix};
use crate::numeric::{int, ratio, Rational};

/// A positive root, stored both in the simple-root basis and as a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub weight: Weight,
    pub height: u32,
}

/// Integer matrix `scaled` with `gram = scaled / den`.
#[derive(Clone, Debug)]
pub(crate) struct ScaledForm {
    pub scaled: Vec<Vec<i64>>,
    pub den: i64,
}

impl ScaledForm {
    fn from_gram(gram: &Matrix) -> Self {
        let den = gram
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        (x * Rational::from_integer(den.clone()))
                            .to_integer()
                            .to_i64()
                            .expect("scaled Gram entry fits in i64")
                    })
                    .collect()
            })
            .collect();
        Self { scaled, den: den.to_i64().expect("Gram denominator fits in i64") }
    }

    /// `den · ⟨x, y⟩`.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            let row = &self.scaled[i];
            let s: i128 = row.iter().zip(y).map(|(g, yj)| *g as i128 * *yj as i128).sum();
            acc += *xi as i128 * s;
        }
        acc
    }
}

/// Root-level data, present only for the crystallographic families.
#[derive(Clone, Debug)]
pub struct RootData {
    /// `cartan[i][j] = ⟨αᵢ, α̌ⱼ⟩`; row `i` is `αᵢ` in fundamental coordinates.
    cartan: Vec<Vec<i64>>,
    root_norms: Vec<Rational>,
    positive_roots: Vec<Root>,
    gram: Matrix,
    form: ScaledForm,
    // Untouched by fault injection; the multiplicity engine reads this one.
    engine_form: ScaledForm,
    fund_to_root: Matrix,
    rho: Weight,
    highest_root: Weight,
    dual_coxeter: u32,
    gamma_from_form: u64,
}

impl RootData {
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths of the simple roots.
    pub fn simple_root_norms(&self) -> &[Rational] {
        &self.root_norms
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Inner products of the fundamental weights.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn dual_coxeter_number(&self) -> u32 {
        self.dual_coxeter
    }

    /// `γ` computed from its defining expression in the highest root, the
    /// highest short root and the two dual Coxeter numbers.
    pub fn gamma_from_form(&self) -> u64 {
        self.gamma_from_form
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub(crate) fn form(&self) -> &ScaledForm {
        &self.form
    }

    pub(crate) fn engine_form(&self) -> &ScaledForm {
        &self.engine_form
    }
}

/// Static data of a finite irreducible Coxeter group and, for Weyl groups,
/// its root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    degrees: Vec<u32>,
    exponents: Vec<u32>,
    h: u32,
    gamma: u64,
    data: Option<RootData>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let degrees = cartan_type.degrees();
        let exponents = degrees.iter().map(|d| d - 1).collect();
        let h = *degrees.last().expect("rank is positive");
        let data = cartan_type.is_crystallographic().then(|| build_root_data(&cartan_type));
        Self { cartan_type, degrees, exponents, h, gamma: cartan_type.gamma(), data }
    }

    /// Like [`RootSystem::build`], but with the invariant form multiplied by
    /// `scale`, so that long roots have squared length `2·scale`. Dimensions
    /// and multiplicities do not depend on the scale; norms scale linearly.
    pub fn build_with_form_scale(cartan_type: CartanType, scale: Rational) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::InvalidArgument(format!("form scale {scale} must be positive")));
        }
        let mut rs = Self::build(cartan_type);
        if let Some(data) = rs.data.as_mut() {
            for row in data.gram.iter_mut() {
                for x in row.iter_mut() {
                    *x *= &scale;
                }
            }
            data.form = ScaledForm::from_gram(&data.gram);
            data.engine_form = data.form.clone();
        }
        Ok(rs)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Coxeter number.
    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn gamma(&self) -> u64 {
        self.gamma
    }

    /// `|W| = ∏ dᵢ`.
    pub fn weyl_group_order(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Number of positive roots (reflections), `Σ eᵢ`.
    pub fn num_positive_roots(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn root_data(&self) -> Result<&RootData> {
        self.data
            .as_ref()
            .ok_or_else(|| Error::UnsupportedType(self.cartan_type.to_string()))
    }

    pub fn positive_roots(&self) -> Result<&[Root]> {
        Ok(self.root_data()?.positive_roots())
    }

    pub fn rho(&self) -> Result<&Weight> {
        Ok(self.root_data()?.rho())
    }

    pub fn highest_root(&self) -> Result<&Weight> {
        Ok(self.root_data()?.highest_root())
    }

    pub fn dual_coxeter_number(&self) -> Result<u32> {
        Ok(self.root_data()?.dual_coxeter)
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: w.rank() });
        }
        Ok(())
    }

    /// The invariant form `⟨x, y⟩` via the Gram matrix of fundamental weights.
    pub fn inner(&self, x: &Weight, y: &Weight) -> Result<Rational> {
        let data = self.root_data()?;
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(Rational::new(
            BigInt::from(data.form.pair(x.coords(), y.coords())),
            BigInt::from(data.form.den),
        ))
    }

    pub fn norm(&self, x: &Weight) -> Result<Rational> {
        self.inner(x, x)
    }

    /// Simple reflection `sᵢ(x) = x − ⟨x, α̌ᵢ⟩ αᵢ`.
    pub fn reflect(&self, x: &Weight, i: usize) -> Result<Weight> {
        let data = self.root_data()?;
        self.check_len(x)?;
        Ok(reflect_raw(&data.cartan, x, i))
    }

    /// Closure of `{w}` under the simple reflections.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        let data = self.root_data()?;
        self.check_len(w)?;
        Ok(orbit_raw(&data.cartan, w))
    }

    /// The unique dominant element of the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        let data = self.root_data()?;
        self.check_len(w)?;
        Ok(dominant_raw(&data.cartan, w))
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn to_root_coords(&self, w: &Weight) -> Result<Vec<Rational>> {
        let data = self.root_data()?;
        self.check_len(w)?;
        Ok((0..self.rank())
            .map(|k| {
                w.coords()
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| int(c) * &data.fund_to_root[j][k])
                    .sum()
            })
            .collect())
    }

    /// Whether the two power-sum identities for the exponents hold exactly:
    /// `Σeᵢ² = n(h²+γ−h)/6` and `Σeᵢ³ = nh(γ−h)/4`.
    pub fn suter_checks(&self) -> (bool, bool) {
        let n = int(self.rank() as i64);
        let h = int(self.h as i64);
        let g = int(self.gamma as i64);
        let s2: Rational = self.exponents.iter().map(|&e| int(e as i64 * e as i64)).sum();
        let s3: Rational = self.exponents.iter().map(|&e| int((e as i64).pow(3))).sum();
        let rhs2 = &n * (&h * &h + &g - &h) / int(6);
        let rhs3 = &n * &h * (&g - &h) / int(4);
        (s2 == rhs2, s3 == rhs3)
    }

    /// Perturbs the Gram matrix used by [`RootSystem::inner`] so that it is no
    /// longer Weyl-invariant. Used to exercise failure paths of the verifier.
    #[doc(hidden)]
    pub fn corrupt_gram(&mut self) {
        if let Some(data) = self.data.as_mut() {
            data.gram[0][0] += ratio(1, 7);
            data.form = ScaledForm::from_gram(&data.gram);
        }
    }
}

pub(crate) fn reflect_raw(cartan: &[Vec<i64>], x: &Weight, i: usize) -> Weight {
    let c = x.0[i];
    if c == 0 {
        return x.clone();
    }
    Weight(x.0.iter().zip(&cartan[i]).map(|(a, r)| a - c * r).collect())
}

pub(crate) fn orbit_raw(cartan: &[Vec<i64>], w: &Weight) -> BTreeSet<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..cartan.len() {
            if x.0[i] == 0 {
                continue;
            }
            let y = reflect_raw(cartan, &x, i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub(crate) fn dominant_raw(cartan: &[Vec<i64>], w: &Weight) -> Weight {
    let mut x = w.clone();
    while let Some(i) = x.0.iter().position(|&c| c < 0) {
        x = reflect_raw(cartan, &x, i);
    }
    x
}

/// Simple-root norms and Dynkin edges in Bourbaki numbering (0-based).
fn dynkin_data(t: &CartanType) -> (Vec<Rational>, Vec<(usize, usize)>) {
    let n = t.rank();
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A => (vec![int(2); n], chain(n)),
        Family::B => {
            let mut norms = vec![int(2); n];
            norms[n - 1] = int(1);
            (norms, chain(n))
        }
        Family::C => {
            let mut norms = vec![int(1); n];
            norms[n - 1] = int(2);
            (norms, chain(n))
        }
        Family::D => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            (vec![int(2); n], edges)
        }
        Family::E => {
            let edges = [(0, 2), (2, 3), (3, 4), (1, 3), (4, 5), (5, 6), (6, 7)]
                .into_iter()
                .filter(|&(a, b)| a < n && b < n)
                .collect();
            (vec![int(2); n], edges)
        }
        Family::F => (vec![int(2), int(2), int(1), int(1)], chain(4)),
        Family::G => (vec![ratio(2, 3), int(2)], chain(2)),
        Family::H | Family::I => unreachable!("noncrystallographic"),
    }
}

/// Positive roots in the simple-root basis, generated by root strings:
/// if `β − pαᵢ, …, β` are roots and `p − ⟨β, α̌ᵢ⟩ > 0` then `β + αᵢ` is a root.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer_start = 0;
    while layer_start < roots.len() {
        let layer_end = roots.len();
        for idx in layer_start..layer_end {
            let beta = roots[idx].clone();
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        layer_start = layer_end;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

fn cartan_from(norms: &[Rational], edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = norms.len();
    let mut sym = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        sym[i][i] = norms[i].clone();
    }
    // Adjacent simple roots pair to minus half the longer squared length.
    for &(a, b) in edges {
        let v = -(norms[a].clone().max(norms[b].clone())) / int(2);
        sym[a][b] = v.clone();
        sym[b][a] = v;
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = int(2) * &sym[i][j] / &norms[j];
                    assert!(v.is_integer(), "Cartan entry must be integral");
                    v.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect()
}

/// `1 + Σ m^∨ᵢ` where `θ̌ = Σ m^∨ᵢ α̌ᵢ`; with `|θ|² = 2`, `m^∨ᵢ = mᵢ |αᵢ|² / 2`.
fn dual_coxeter_of(highest: &[i64], norms: &[Rational]) -> u32 {
    let s: Rational = highest.iter().zip(norms).map(|(&m, nrm)| int(m) * nrm / int(2)).sum();
    assert!(s.is_integer());
    1 + s.to_integer().to_u32().unwrap()
}

fn build_root_data(t: &CartanType) -> RootData {
    let n = t.rank();
    let (norms, edges) = dynkin_data(t);
    let cartan = cartan_from(&norms, &edges);

    let root_coeffs = positive_roots_by_closure(&cartan);
    let positive_roots: Vec<Root> = root_coeffs
        .iter()
        .map(|c| Root {
            coeffs: c.clone(),
            weight: Weight((0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect()),
            height: c.iter().sum::<i64>() as u32,
        })
        .collect();

    // ⟨ωᵢ, ωⱼ⟩ = (C⁻¹)ᵢⱼ |αⱼ|²/2, since ⟨αₖ, ωⱼ⟩ = δₖⱼ |αⱼ|²/2.
    let c_rat: Matrix = cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let c_inv = linalg::invert(&c_rat).expect("Cartan matrix is invertible");
    let gram: Matrix = (0..n)
        .map(|i| (0..n).map(|j| &c_inv[i][j] * &norms[j] / int(2)).collect())
        .collect();
    // αᵢ = Σⱼ Cᵢⱼ ωⱼ, so ωⱼ = Σₖ (C⁻¹)ⱼₖ αₖ.
    let fund_to_root = c_inv.clone();

    let top = positive_roots.last().expect("at least one root");
    let highest_root = top.weight.clone();
    let dual_coxeter = dual_coxeter_of(&top.coeffs, &norms);

    // Dual system: Cartan matrix transposed, norms 4/|α|² rescaled so long = 2.
    let min_norm = norms.iter().min().unwrap().clone();
    let dual_norms: Vec<Rational> = norms.iter().map(|x| int(2) * &min_norm / x).collect();
    let dual_cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
    let dual_roots = positive_roots_by_closure(&dual_cartan);
    let dual_g = dual_coxeter_of(dual_roots.last().unwrap(), &dual_norms);
    let gamma = int(2) / &min_norm * int(dual_coxeter as i64) * int(dual_g as i64);
    assert!(gamma.is_integer() && gamma.is_positive());

    let form = ScaledForm::from_gram(&gram);
    RootData {
        cartan,
        root_norms: norms,
        positive_roots,
        engine_form: form.clone(),
        form,
        gram,
        fund_to_root,
        rho: Weight(vec![1; n]),
        highest_root,
        dual_coxeter,
        gamma_from_form: gamma.to_integer().to_u64().unwrap(),
    }
}
