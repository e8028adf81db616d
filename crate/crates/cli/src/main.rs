mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weightnorm::cores::{
    alcove_points, chain_value, cx_mean, cx_mean_closed_form, expected_size_closed_form, phi, simultaneous_cores,
    size_b_mean, sym_power_norm_closed_form,
};
use weightnorm::cumulants::{brute_cumulants, lemma_cumulants, Catalog};
use weightnorm::numeric::{int, Rational};
use weightnorm::repcore::{self, theorem_rhs, weight_multiplicities_capped};
use weightnorm::rootsystem::{CartanType, RootSystem, Weight};
use weightnorm::typea::{
    enumerate_ssyt, expected_norm_tableaux, pieri_rhs_closed_form, theorem_rhs_tableaux, Partition,
};
use weightnorm::verifier::{self, Suite, VerifyConfig};
use weightnorm::Error;

use report::{csv_block, Cell, Format, Report, Table};

/// Exact expected weight norms, simultaneous cores and q-product cumulants.
#[derive(Parser, Debug)]
#[command(name = "weightnorm", version)]
struct Cli {
    /// Output format. Rationals are exact `p/q` strings in json and csv.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Show decimal approximations next to rationals in pretty output.
    #[arg(long, global = true)]
    approx: bool,
    /// Largest representation dimension to compute.
    #[arg(long, global = true)]
    dim_cap: Option<u64>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Average squared norm of the weights of an irreducible representation.
    ExpectedNorm {
        /// Cartan type such as A2, C3, E8.
        #[arg(long = "type")]
        cartan_type: String,
        /// Highest weight in fundamental coordinates, e.g. 1,1.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// List dominant weights with orbit sizes and multiplicities.
        #[arg(long)]
        weights: bool,
        /// Also report the average of the norm raised to this even power.
        #[arg(long)]
        power: Option<u32>,
        /// Multiply the invariant form by this rational (long roots then have
        /// squared length twice this value).
        #[arg(long, default_value = "1")]
        form_scale: String,
    },
    /// Simultaneous (a,b)-cores and the dilated alcove.
    Cores {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// List the cores.
        #[arg(long)]
        list: bool,
        /// Alcove statistics.
        #[arg(long)]
        alcove: bool,
        /// Image of the alcove points under φ, checked against the weights of V_{bω₁}.
        #[arg(long)]
        phi: bool,
    },
    /// Semistandard tableaux of a shape in n letters.
    Tableaux {
        /// Number of letters.
        #[arg(long)]
        n: usize,
        /// Partition, e.g. 2,1.
        #[arg(long)]
        shape: String,
        /// List content vectors with their tableau counts.
        #[arg(long)]
        list: bool,
    },
    /// Cumulants of q-product distributions.
    Cumulants(CumulantArgs),
    /// Run a verification suite and emit one JSON line per check.
    Verify {
        #[arg(long, default_value = "main")]
        suite: String,
        /// Record wall-clock times (reports are then no longer reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long, hide = true)]
        corrupt_gram: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Inv,
    Cat,
    Pp,
    Syt,
    Dpp,
}

#[derive(Args, Debug)]
struct CumulantArgs {
    #[arg(value_enum)]
    kind: Kind,
    #[arg(long = "type")]
    cartan_type: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    /// Minuscule node, 1-based.
    #[arg(long)]
    node: Option<usize>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    /// Highest cumulant order.
    #[arg(long, default_value_t = 4)]
    r: u32,
    /// Also compute cumulants from the expanded distribution.
    #[arg(long)]
    oracle: bool,
}

/// Failure modes mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Cap(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let report = match &cli.command {
        Command::ExpectedNorm { cartan_type, weight, weights, power, form_scale } => {
            expected_norm_cmd(cli, cartan_type, weight, *weights, *power, form_scale)?
        }
        Command::Cores { a, b, list, alcove, phi } => cores_cmd(*a, *b, *list, *alcove, *phi)?,
        Command::Tableaux { n, shape, list } => tableaux_cmd(*n, shape, *list)?,
        Command::Cumulants(args) => cumulants_cmd(args)?,
        Command::Verify { suite, timing, corrupt_gram } => return verify_cmd(cli, suite, *timing, *corrupt_gram),
    };
    emit(cli, &report.render(cli.format, cli.approx))
}

fn parse_type(s: &str) -> Result<CartanType, Failure> {
    Ok(s.parse::<CartanType>()?)
}

fn expected_norm_cmd(
    cli: &Cli,
    cartan_type: &str,
    weight: &str,
    list: bool,
    power: Option<u32>,
    form_scale: &str,
) -> Result<Report, Failure> {
    let t = parse_type(cartan_type)?;
    let lambda: Weight = weight.parse()?;
    let scale: Rational =
        weightnorm::numeric::parse_rational(form_scale).ok_or_else(|| usage(format!("bad form scale {form_scale:?}")))?;
    let rs = RootSystem::build_with_form_scale(t, scale)?;
    let cap = cli.dim_cap.unwrap_or(repcore::DEFAULT_DIM_CAP);
    let ws = weight_multiplicities_capped(&rs, &lambda, cap)?;
    let value = ws.expected_norm(&rs)?;
    let rhs = theorem_rhs(&rs, &lambda)?;

    let mut r = Report::default();
    r.field("type", t.to_string());
    r.field("weight", lambda.to_string());
    r.field("dim", ws.dim());
    r.field("expected_norm", value.clone());
    r.field("theorem_rhs", rhs.clone());
    r.field("equal", value == rhs);
    if let Some(p) = power {
        r.field(&format!("expected_norm_power_{p}"), ws.expected_power_norm(&rs, p)?);
    }
    if list {
        let mut t = Table::new(&["dominant_weight", "orbit_size", "multiplicity", "norm"]);
        for (mu, &m) in ws.dominant_entries().iter().rev() {
            let orbit = rs.weyl_orbit(mu)?.len();
            t.push(vec![mu.to_string().into(), orbit.into(), m.into(), rs.norm(mu)?.into()]);
        }
        r.table("weights", t);
    }
    Ok(r)
}

fn cores_cmd(a: u64, b: u64, list: bool, alcove: bool, show_phi: bool) -> Result<Report, Failure> {
    let cores = simultaneous_cores(a, b)?;
    let n = cores.len();
    let total: u64 = cores.iter().map(|c| c.size()).sum();
    let mut r = Report::default();
    r.field("a", a);
    r.field("b", b);
    r.field("count", n);
    r.field("mean_size", int(total as i64) / int(n as i64));
    r.field("mean_size_closed_form", expected_size_closed_form(a, b));
    r.field("max_size", cores.iter().map(|c| c.size()).max().unwrap_or(0));
    if list {
        let mut t = Table::new(&["partition", "size"]);
        for c in &cores {
            t.push(vec![c.partition().to_string().into(), c.size().into()]);
        }
        r.table("cores", t);
    }
    if alcove {
        r.field("alcove_points", alcove_points(a, b)?.len());
        r.field("alcove_mean_size_b", size_b_mean(a, b)?);
        r.field("alcove_mean_cx", cx_mean(a, b)?);
        r.field("alcove_mean_cx_closed_form", cx_mean_closed_form(a, b));
        r.field("chain_value", chain_value(a, b)?);
        r.field("chain_closed_form", sym_power_norm_closed_form(a, b));
    }
    if show_phi {
        let pts = alcove_points(a, b)?;
        let rs = RootSystem::build(CartanType::new(weightnorm::rootsystem::Family::A, a as usize - 1)?);
        let lambda = Weight::fundamental(a as usize - 1, 0).scaled(b as i64);
        let ws = repcore::weight_multiplicities(&rs, &lambda)?;
        let mut t = Table::new(&["alcove_point", "phi", "is_weight"]);
        let mut image = std::collections::BTreeSet::new();
        for x in &pts {
            let y = phi(x, b)?;
            let is_weight = ws.entries().contains_key(&y);
            t.push(vec![Weight(x.fundamental_coords()).to_string().into(), y.to_string().into(), is_weight.into()]);
            image.insert(y);
        }
        let onto = ws.entries().keys().all(|w| image.contains(w));
        r.field("phi_image_size", image.len());
        r.field("weights_of_sym_power", ws.entries().len());
        r.field("phi_bijective", image.len() == pts.len() && onto && image.len() == ws.entries().len());
        r.table("phi", t);
    }
    Ok(r)
}

fn tableaux_cmd(n: usize, shape: &str, list: bool) -> Result<Report, Failure> {
    let lambda: Partition = shape.parse()?;
    let contents = enumerate_ssyt(&lambda, n)?;
    let total: u64 = contents.values().sum();
    let mut r = Report::default();
    r.field("n", n);
    r.field("shape", lambda.to_string());
    r.field("tableaux", total);
    r.field("expected_norm", expected_norm_tableaux(&lambda, n)?);
    r.field("pieri_rhs", pieri_rhs_closed_form(&lambda, n)?);
    r.field("theorem_rhs", theorem_rhs_tableaux(&lambda, n)?);
    if list {
        let mut t = Table::new(&["content", "tableaux", "normalized_norm"]);
        for (c, &m) in &contents {
            let content = c.counts().iter().map(u64::to_string).collect::<Vec<_>>().join(",");
            t.push(vec![format!("({content})").into(), m.into(), c.normalized_norm().into()]);
        }
        r.table("contents", t);
    }
    Ok(r)
}

fn cumulants_cmd(args: &CumulantArgs) -> Result<Report, Failure> {
    let need_type = || -> Result<CartanType, Failure> {
        parse_type(args.cartan_type.as_deref().ok_or_else(|| usage("--type is required for this kind"))?)
    };
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| usage(format!("{flag} is required for this kind")));
    let node = || args.node.ok_or_else(|| usage("--node is required for this kind"));
    let entry = match args.kind {
        Kind::Inv => Catalog::Inversions { cartan_type: need_type()? },
        Kind::Cat => Catalog::RationalCatalan { cartan_type: need_type()?, p: need(args.p, "--p")? },
        Kind::Pp => Catalog::PlanePartitions { cartan_type: need_type()?, node: node()?, k: need(args.k, "--k")? },
        Kind::Syt => Catalog::SytMaj { cartan_type: need_type()?, node: node()? },
        Kind::Dpp => Catalog::Dpp { n: need(args.n, "--n")? },
    };
    if args.r == 0 {
        return Err(usage("--r must be at least 1"));
    }
    let d = entry.distribution()?;
    let lemma = lemma_cumulants(&d, args.r);
    let mut r = Report::default();
    for (k, v) in entry.params() {
        r.field(&k, v);
    }
    let cf = entry.closed_form()?;
    r.field("mean_closed_form", cf.mean);
    if let Some(v) = cf.variance {
        r.field("variance_closed_form", v);
    }
    if let Some(k) = cf.kappa4 {
        r.field("kappa4_closed_form", k);
    }
    let mut t = if args.oracle {
        Table::new(&["r", "lemma", "oracle", "equal"])
    } else {
        Table::new(&["r", "lemma"])
    };
    let oracle = if args.oracle { Some(brute_cumulants(&d, args.r)?) } else { None };
    for (i, l) in lemma.iter().enumerate() {
        let mut row: Vec<Cell> = vec![(i + 1).into(), l.clone().into()];
        if let Some(o) = &oracle {
            row.push(o[i].clone().into());
            row.push((o[i] == *l).into());
        }
        t.push(row);
    }
    r.table("cumulants", t);
    Ok(r)
}

fn verify_cmd(cli: &Cli, suite: &str, timing: bool, corrupt_gram: bool) -> Result<(), Failure> {
    let suite: Suite = suite.parse()?;
    let config = VerifyConfig {
        dim_cap: cli.dim_cap.unwrap_or(VerifyConfig::default().dim_cap),
        timing,
        corrupt_gram,
    };
    let results = verifier::run_suite(suite, &config);
    let summary = verifier::summary_table(&results);
    let body = match cli.format {
        Format::Json => verifier::to_jsonl(&results),
        Format::Csv => {
            let header: Vec<String> =
                ["check_id", "params", "lhs", "rhs", "passed", "elapsed_ms"].iter().map(|s| s.to_string()).collect();
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|c| {
                    let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    vec![
                        c.check_id.clone(),
                        params.join(";"),
                        weightnorm::numeric::format_rational(&c.lhs),
                        weightnorm::numeric::format_rational(&c.rhs),
                        c.passed.to_string(),
                        c.elapsed_ms.to_string(),
                    ]
                })
                .collect();
            csv_block(&header, &rows)
        }
        Format::Pretty => summary.clone(),
    };
    emit(cli, &body)?;
    if cli.format != Format::Pretty {
        eprint!("{summary}");
    }
    match verifier::failures(&results) {
        0 => Ok(()),
        n => Err(Failure::Checks(format!("{n} of {} checks failed", results.len()))),
    }
}
