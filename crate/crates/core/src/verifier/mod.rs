//! Theorem sweeps over finite grids, with exact comparisons and JSON-lines
//! reports.
//!
//! Every check reduces to a pair of rationals that must be equal. A sweep
//! never stops at the first failure: errors raised while evaluating a grid
//! point are recorded as failed checks carrying an `error` parameter.

mod sweeps;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::numeric::{format_rational, int, parse_rational, Rational};

pub use sweeps::*;

/// Outcome of one exact comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "ser_rational", deserialize_with = "de_rational")]
    pub rhs: Rational,
    pub passed: bool,
    pub elapsed_ms: u64,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
}

impl CheckResult {
    pub fn new(check_id: &str, params: BTreeMap<String, String>, lhs: Rational, rhs: Rational) -> Self {
        let passed = lhs == rhs;
        CheckResult { check_id: check_id.to_string(), params, lhs, rhs, passed, elapsed_ms: 0 }
    }

    /// A failed check for a grid point whose evaluation raised `err`.
    /// The sides are set to `0` and `1` so that `passed ⇔ lhs = rhs` holds.
    pub fn error(check_id: &str, mut params: BTreeMap<String, String>, err: &Error) -> Self {
        params.insert("error".into(), err.to_string());
        Self::new(check_id, params, int(0), int(1))
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = ms;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("check results serialize")
    }
}

/// Builds a parameter map from `(key, value)` pairs.
pub fn params<K: ToString, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// Runs `f` and stamps the wall-clock time, split evenly, on its results.
pub(crate) fn timed(f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = Instant::now();
    let out = f();
    let ms = start.elapsed().as_millis() as u64;
    let share = if out.is_empty() { 0 } else { ms / out.len() as u64 };
    out.into_iter().map(|c| c.with_elapsed(share)).collect()
}

/// Sorts by `check_id`, then `params`, so reports do not depend on
/// scheduling.
pub fn sort_results(results: &mut [CheckResult]) {
    results.sort_by(|x, y| (&x.check_id, &x.params).cmp(&(&y.check_id, &y.params)));
}

/// Sets every `elapsed_ms` to zero, making reports byte-for-byte reproducible.
pub fn strip_timing(results: &mut [CheckResult]) {
    for r in results {
        r.elapsed_ms = 0;
    }
}

pub fn to_jsonl(results: &[CheckResult]) -> String {
    results.iter().map(|r| r.to_json_line() + "\n").collect()
}

pub fn failures(results: &[CheckResult]) -> usize {
    results.iter().filter(|r| !r.passed).count()
}

/// One row per `check_id` with counts of passed and failed checks.
pub fn summary_table(results: &[CheckResult]) -> String {
    let mut rows: BTreeMap<&str, (usize, usize, u64)> = BTreeMap::new();
    for r in results {
        let e = rows.entry(&r.check_id).or_default();
        if r.passed {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
        e.2 += r.elapsed_ms;
    }
    let width = rows.keys().map(|k| k.len()).max().unwrap_or(0).max("check".len());
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:>7}  {:>7}  {:>9}", "check", "passed", "failed", "time_ms").unwrap();
    for (id, (p, f, ms)) in &rows {
        writeln!(out, "{id:<width$}  {p:>7}  {f:>7}  {ms:>9}").unwrap();
    }
    let (p, f) = (results.len() - failures(results), failures(results));
    writeln!(out, "{:<width$}  {p:>7}  {f:>7}", "total").unwrap();
    out
}

/// Named groups of sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Main,
    Cores,
    TypeA,
    Cumulants,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "main" => Ok(Suite::Main),
            "cores" => Ok(Suite::Cores),
            "typea" => Ok(Suite::TypeA),
            "cumulants" => Ok(Suite::Cumulants),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

/// Caps and switches for [`run_suite`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest `dim V_λ` included in the main-theorem sweep.
    pub dim_cap: u64,
    /// Keep wall-clock timings; otherwise `elapsed_ms` is zero everywhere.
    pub timing: bool,
    /// Fault injection: run the main sweeps against a perturbed Gram matrix.
    pub corrupt_gram: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { dim_cap: 20_000, timing: false, corrupt_gram: false }
    }
}

/// Runs a suite at its default grid and returns sorted results.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = match suite {
        Suite::Main => main_suite(config),
        Suite::Cores => {
            let mut v = sweep_cores(9);
            v.extend(sweep_alcove(5, 6));
            v.extend(sweep_phi(5, 5));
            v
        }
        Suite::TypeA => {
            let mut v = sweep_typea(4, 8);
            v.extend(sweep_polynomial_identity(2..=6, 100, IDENTITY_SEED));
            v
        }
        Suite::Cumulants => {
            let mut v = sweep_cumulants(6);
            v.extend(sweep_plane_partitions(3, 3));
            v.extend(sweep_box_variance(3));
            v
        }
        Suite::All => {
            let mut v = Vec::new();
            for s in [Suite::Main, Suite::Cores, Suite::TypeA, Suite::Cumulants] {
                v.extend(run_suite(s, config));
            }
            v
        }
    };
    if !config.timing {
        strip_timing(&mut out);
    }
    sort_results(&mut out);
    out
}

fn main_suite(config: &VerifyConfig) -> Vec<CheckResult> {
    let systems = main_theorem_types()
        .into_iter()
        .map(|t| {
            let mut rs = crate::rootsystem::RootSystem::build(t);
            if config.corrupt_gram {
                rs.corrupt_gram();
            }
            rs
        })
        .collect::<Vec<_>>();
    let mut v = sweep_main_theorem_on(&systems, 2, config.dim_cap);
    v.extend(sweep_figures());
    v.extend(sweep_sl2(20));
    v.extend(sweep_numerology(8));
    v.extend(sweep_polynomiality(&[2, 4]));
    v
}
