//! Acceptance criteria, each reduced to exact rational comparisons run
//! through the verifier. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;

use weightnorm::cores::{alcove_points, simultaneous_cores};
use weightnorm::numeric::{int, Rational};
use weightnorm::verifier::{
    main_theorem_types, sweep_alcove, sweep_box_variance, sweep_cores, sweep_cumulants, sweep_figures,
    sweep_main_theorem, sweep_numerology, sweep_phi, sweep_plane_partitions, sweep_polynomial_identity, sweep_sl2,
    sweep_typea, CheckResult, IDENTITY_SEED,
};

struct Criterion {
    id: &'static str,
    title: &'static str,
    checks: Vec<CheckResult>,
    /// Conditions beyond "every check passed", e.g. grid coverage.
    extra: Vec<(String, bool)>,
}

impl Criterion {
    fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed) && self.extra.iter().all(|(_, ok)| *ok)
    }
}

fn only(checks: Vec<CheckResult>, ids: &[&str]) -> Vec<CheckResult> {
    checks.into_iter().filter(|c| ids.contains(&c.check_id.as_str())).collect()
}

fn find<'a>(rs: &'a [CheckResult], id: &str, kv: &[(&str, &str)]) -> Option<&'a CheckResult> {
    rs.iter().find(|r| r.check_id == id && kv.iter().all(|(k, v)| r.params.get(*k).map(String::as_str) == Some(*v)))
}

/// The check exists, passed, and its left side is `value`.
fn value_is(rs: &[CheckResult], id: &str, kv: &[(&str, &str)], value: Rational) -> (String, bool) {
    let ok = find(rs, id, kv).is_some_and(|c| c.passed && c.lhs == value);
    (format!("{id} {kv:?} = {value}"), ok)
}

fn coprime_pairs(lo: u64, max: u64) -> usize {
    (lo..=max).flat_map(|a| (a + 1..=max).map(move |b| (a, b))).filter(|&(a, b)| num::integer::gcd(a, b) == 1).count()
}

fn ac01() -> Criterion {
    let checks = sweep_main_theorem(&main_theorem_types(), 2, 20_000);
    let types_covered = main_theorem_types().iter().all(|t| checks.iter().any(|c| c.params["type"] == t.to_string()));
    Criterion {
        id: "AC-01",
        title: "main theorem on A1-A4, B2, B3, C3, D4, G2, coordinates <= 2, dim <= 20000",
        checks,
        extra: vec![("every type has grid points".into(), types_covered)],
    }
}

fn ac02() -> Criterion {
    let checks = sweep_figures();
    let extra = vec![
        value_is(&checks, "figure", &[("figure", "sl3"), ("quantity", "dim")], int(8)),
        value_is(&checks, "figure", &[("figure", "sl3"), ("quantity", "zero_multiplicity")], int(2)),
        value_is(&checks, "figure", &[("figure", "sl3"), ("quantity", "expected_norm")], int(3) / int(2)),
        value_is(&checks, "figure", &[("figure", "sp4"), ("quantity", "dim")], int(16)),
        value_is(&checks, "figure", &[("figure", "sp4"), ("quantity", "doubled_weights")], int(4)),
        value_is(&checks, "figure", &[("figure", "sp4"), ("quantity", "expected_norm_eps_orthonormal")], int(3)),
    ];
    Criterion { id: "AC-02", title: "worked figures for sl3 (1,1) and sp4 (2,1)", checks, extra }
}

fn ac03() -> Criterion {
    let checks = sweep_sl2(20);
    let scaled = checks.iter().filter(|c| c.params["form"] == "scale_4").count();
    Criterion {
        id: "AC-03",
        title: "sl2: expected norm of m*omega1 is (2/3)m(m+2) for m <= 20",
        checks,
        extra: vec![("21 values of m".into(), scaled == 21)],
    }
}

fn ac04() -> Criterion {
    let checks: Vec<CheckResult> = only(sweep_cores(9), &["core_count", "core_mean_size"])
        .into_iter()
        .filter(|c| c.params["a"] != "1")
        .collect();
    let mut sizes: Vec<u64> = simultaneous_cores(3, 4).map(|cs| cs.iter().map(|c| c.size()).collect()).unwrap_or_default();
    sizes.sort_unstable();
    let extra = vec![
        ("all coprime pairs 2 <= a < b <= 9".into(), checks.len() == 2 * coprime_pairs(2, 9)),
        ("(3,4)-core sizes are 0,1,2,2,5".into(), sizes == [0, 1, 2, 2, 5]),
        value_is(&checks, "core_count", &[("a", "3"), ("b", "4")], int(5)),
        value_is(&checks, "core_mean_size", &[("a", "3"), ("b", "4")], int(2)),
    ];
    Criterion { id: "AC-04", title: "Anderson count and mean core size, coprime 2 <= a < b <= 9", checks, extra }
}

fn ac05() -> Criterion {
    let checks = sweep_alcove(5, 6);
    let pairs = (2..=5u64).flat_map(|a| (1..=6).map(move |b| (a, b))).filter(|&(a, b)| num::integer::gcd(a, b) == 1);
    let n = pairs.count();
    Criterion {
        id: "AC-05",
        title: "alcove means of size_b and <cx_b, x_b> and the identity chain, a <= 5, b <= 6",
        extra: vec![("every coprime pair".into(), checks.len() == 4 * n)],
        checks,
    }
}

fn ac06() -> Criterion {
    let checks = sweep_phi(5, 5);
    let fig3 = alcove_points(3, 4).map(|p| p.len()).unwrap_or(0);
    let extra = vec![
        ("20 pairs".into(), checks.len() == 3 * 20),
        ("(3,4) alcove has 15 points".into(), fig3 == 15),
        value_is(&checks, "phi_injective", &[("a", "3"), ("b", "4")], int(15)),
        value_is(&checks, "phi_onto_weights", &[("a", "3"), ("b", "4")], int(15)),
    ];
    Criterion { id: "AC-06", title: "phi is a bijection onto the weights of V_{b omega1}, a <= 5, b <= 5", checks, extra }
}

fn ac07() -> Criterion {
    // Letters 2..=5 cover both readings of n: letters, and rank of A_{n}.
    let checks = sweep_typea(5, 8);
    Criterion {
        id: "AC-07",
        title: "type A: tableau average = Pieri closed form = theorem value, |lambda| <= 8",
        extra: vec![],
        checks,
    }
}

fn ac08() -> Criterion {
    let checks = sweep_polynomial_identity(2..=6, 100, IDENTITY_SEED);
    let random = checks.iter().filter(|c| c.check_id == "identity_random").count();
    Criterion {
        id: "AC-08",
        title: "type A polynomial identity at 100 random points per n = 2..6 and special evaluations",
        extra: vec![("500 random vectors".into(), random == 500)],
        checks,
    }
}

fn ac09() -> Criterion {
    let checks = only(sweep_cumulants(6), &["cumulant_lemma_vs_oracle"]);
    let h3 = checks.iter().any(|c| c.params.get("type").map(String::as_str) == Some("H3"));
    Criterion {
        id: "AC-09",
        title: "lemma cumulants equal expanded-distribution cumulants, r <= 6, desk-scale catalog",
        extra: vec![("catalog includes H3".into(), h3)],
        checks,
    }
}

fn ac10() -> Criterion {
    let mut checks =
        only(sweep_cumulants(6), &["closed_form_mean", "closed_form_variance", "closed_form_kappa4"]);
    let kappa4 = checks.iter().filter(|c| c.check_id == "closed_form_kappa4").count();
    let extra = vec![
        ("kappa4 checked for rational Catalan".into(), kappa4 > 0),
        value_is(&checks, "closed_form_mean", &[("kind", "dpp"), ("n", "2")], int(1)),
        value_is(&checks, "closed_form_variance", &[("kind", "dpp"), ("n", "2")], int(1)),
        value_is(&checks, "closed_form_mean", &[("kind", "syt"), ("type", "A3"), ("node", "2")], int(1)),
    ];
    checks.extend(sweep_box_variance(3));
    Criterion { id: "AC-10", title: "closed-form mean, variance and kappa4 agree with the lemma", checks, extra }
}

fn ac11() -> Criterion {
    let checks = sweep_numerology(8);
    let ids = ["suter_e2", "suter_e3", "positive_roots", "dim_g", "root_norm_sum"];
    let covered = ids.iter().all(|id| checks.iter().any(|c| c.check_id == *id));
    let e8 = find(&checks, "dim_g", &[("type", "E8")]).is_some();
    Criterion {
        id: "AC-11",
        title: "Suter identities and root-system numerology",
        extra: vec![("all identities present".into(), covered), ("rank 8 reached".into(), e8)],
        checks,
    }
}

fn ac12() -> Criterion {
    let checks = sweep_plane_partitions(3, 3);
    Criterion {
        id: "AC-12",
        title: "plane-partition product equals enumeration, rectangles a, b <= 3, k <= 3",
        extra: vec![("36 cases".into(), checks.len() == 36)],
        checks,
    }
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 12] = [ac01, ac02, ac03, ac04, ac05, ac06, ac07, ac08, ac09, ac10, ac11, ac12];
    let mut failed = 0;
    for build in criteria {
        let start = std::time::Instant::now();
        let c = build();
        let ok = c.passed();
        let good = c.checks.iter().filter(|r| r.passed).count();
        println!(
            "[{}] {} {} ({}/{} checks, {} ms)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            good,
            c.checks.len(),
            start.elapsed().as_millis()
        );
        if !ok {
            failed += 1;
            for r in c.checks.iter().filter(|r| !r.passed).take(5) {
                println!("       {}", r.to_json_line());
            }
            for (what, _) in c.extra.iter().filter(|(_, ok)| !ok) {
                println!("       condition not met: {what}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
