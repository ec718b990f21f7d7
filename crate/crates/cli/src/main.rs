//! Command-line front end: sampling, analysis, construction verification,
//! oracle checks, closed-form calculators, and Monte Carlo sweeps.
//!
//! Exit codes: 0 on success, 1 when a verification or check fails, 2 on
//! usage or input-parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use squareperc::analysis::analyze;
use squareperc::constructions::{
    verify_bipartite_demo, verify_g, verify_g_prime, verify_ladder, LadderParams,
    VerificationReport,
};
use squareperc::edgelist::{graph_to_string, read_graph};
use squareperc::experiments::{
    aggregate_csv, aggregate_json, expected_isolated_t1, expected_nonbonded_squares, raw_csv,
    raw_json, sweep, Caps, Metric, MetricSet, PSpec, SweepConfig,
};
use squareperc::oracle::{run_oracle_suite, OracleConfig};
use squareperc::sampler::{derive_trial_seed, sample_gnp};
use std::fs;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "squareperc",
    version,
    about = "Square graphs of arbitrary and random graphs: build, analyze, verify, sweep"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n,p) and write it as an edge-list file
    Sample(SampleArgs),
    /// Analyze an edge-list file: squares, components, bonded status
    Analyze(AnalyzeArgs),
    /// Build a named graph family and check its claimed properties
    VerifyConstruction(VerifyArgs),
    /// Cross-validate the fast paths against brute-force oracles
    OracleCheck(OracleArgs),
    /// Run a seeded Monte Carlo sweep and write CSV tables
    Sweep(SweepArgs),
    /// Evaluate a closed-form expectation
    Expected(ExpectedArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// number of vertices
    #[arg(long)]
    n: usize,
    /// edge probability in [0, 1]
    #[arg(long)]
    p: f64,
    /// master seed (trial index 0 is used)
    #[arg(long)]
    seed: u64,
    /// output path for the edge-list file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// input edge-list file
    #[arg(long = "in")]
    input: PathBuf,
    /// report format; the JSON schema is stable, text is for humans
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// abort if the graph has more induced squares than this
    #[arg(long, default_value_t = squareperc::squares::DEFAULT_SQUARE_CAP as u64)]
    square_cap: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    GPrime,
    G,
    Ladder,
    BipartiteDemo,
}

#[derive(Args)]
struct VerifyArgs {
    /// which construction to verify
    #[arg(long, value_enum)]
    family: Family,
    /// ladder only: vertices per layer
    #[arg(long)]
    m: Option<u32>,
    /// ladder only: shift of the second cross-edge family
    #[arg(long)]
    shift: Option<u32>,
}

#[derive(Args)]
struct OracleArgs {
    /// largest instance size (brute force is O(n^4))
    #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(2..=64))]
    n_max: u64,
    /// number of random instances
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// master seed
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct SweepArgs {
    /// number of vertices
    #[arg(long)]
    n: usize,
    /// first scaling constant of a c-grid (p = c sqrt(ln n / n))
    #[arg(long, requires = "c_max", requires = "c_step", conflicts_with = "p_list")]
    c_min: Option<f64>,
    /// last scaling constant of the c-grid (inclusive)
    #[arg(long, requires = "c_min")]
    c_max: Option<f64>,
    /// step of the c-grid
    #[arg(long, requires = "c_min")]
    c_step: Option<f64>,
    /// comma-separated explicit edge probabilities
    #[arg(long, value_delimiter = ',')]
    p_list: Option<Vec<f64>>,
    /// trials per grid point
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// master seed
    #[arg(long)]
    seed: u64,
    /// comma-separated metric names (raw CSV column names)
    #[arg(long, value_delimiter = ',')]
    metrics: Option<Vec<String>>,
    /// aggregate CSV output path
    #[arg(long)]
    out: PathBuf,
    /// optional raw per-trial CSV output path
    #[arg(long)]
    raw_out: Option<PathBuf>,
    /// optional aggregate JSON mirror
    #[arg(long)]
    json_out: Option<PathBuf>,
    /// optional raw JSON mirror
    #[arg(long)]
    raw_json_out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Formula {
    /// C(n,2) (1-p) (1-p^2)^(n-2)
    IsolatedT1,
    /// C(n,4) 3 p^4 (1-p)^2 (1 - 2p^2(1-p^2))^(n-4)
    NonBonded,
}

#[derive(Args)]
struct ExpectedArgs {
    #[arg(long, value_enum)]
    formula: Formula,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
}

/// Failure carrying the process exit code.
enum Failure {
    /// verification or check failed (exit 1)
    Check(String),
    /// usage or parse error (exit 2)
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sample(a) => cmd_sample(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::VerifyConstruction(a) => cmd_verify(a),
        Command::OracleCheck(a) => cmd_oracle(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Expected(a) => cmd_expected(a),
    }
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Check(format!("writing {}: {e}", path.display())))
}

fn cmd_sample(a: SampleArgs) -> Result<(), Failure> {
    let g = sample_gnp(a.n, a.p, derive_trial_seed(a.seed, 0))
        .map_err(|e| Failure::Usage(e.to_string()))?;
    write_file(&a.out, &graph_to_string(&g))?;
    println!("{} {}", g.n(), g.m());
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<(), Failure> {
    let file = fs::File::open(&a.input)
        .map_err(|e| Failure::Usage(format!("opening {}: {e}", a.input.display())))?;
    let g = read_graph(BufReader::new(file)).map_err(|e| Failure::Usage(e.to_string()))?;
    let report = analyze(&g);
    if report.num_squares > a.square_cap {
        return Err(Failure::Check(format!(
            "square count {} exceeds --square-cap {}",
            report.num_squares, a.square_cap
        )));
    }
    match a.report {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
        }
        ReportFormat::Text => {
            println!("graph: n = {}, m = {}", report.n, report.m);
            println!("induced squares: {}", report.num_squares);
            println!(
                "T1: {} vertices, {} components ({} non-trivial, {} isolated)",
                squareperc::graph::pair_count(report.n) - report.m,
                report.num_components,
                report.num_nontrivial,
                report.isolated_count
            );
            println!(
                "largest component: {}, second largest: {}",
                report.largest, report.second_largest
            );
            println!(
                "full-support components: {:?}",
                report.full_support_component_ids
            );
            let degenerate = if report.num_components <= 1 && report.num_squares == 0 {
                " (degenerate)"
            } else {
                ""
            };
            println!(
                "T1 connected: {}{degenerate}, S connected: {}",
                report.t1_connected, report.s_connected
            );
            println!(
                "bonded: {} ({} non-bonded of {})",
                report.all_bonded, report.non_bonded_count, report.num_squares
            );
            println!("extremal-bound violations: {:?}", report.extremal_violations);
        }
    }
    Ok(())
}

fn print_report(report: &VerificationReport) {
    println!("family: {}", report.family);
    for c in &report.checks {
        println!(
            "  [{}] {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    if !report.certificate.is_empty() {
        println!("certificate:");
        for line in report.certificate.lines() {
            println!("  {line}");
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    if a.family != Family::Ladder && (a.m.is_some() || a.shift.is_some()) {
        return Err(Failure::Usage(
            "--m and --shift apply only to --family ladder".into(),
        ));
    }
    let report = match a.family {
        Family::GPrime => verify_g_prime(),
        Family::G => verify_g(),
        Family::BipartiteDemo => verify_bipartite_demo(),
        Family::Ladder => {
            let (m, s) = match (a.m, a.shift) {
                (Some(m), Some(s)) => (m, s),
                _ => {
                    return Err(Failure::Usage(
                        "--family ladder requires --m and --shift".into(),
                    ))
                }
            };
            verify_ladder(LadderParams { m, s })
                .map_err(|e| Failure::Usage(e.to_string()))?
        }
    };
    print_report(&report);
    match report.first_failure() {
        None => {
            println!("PASS");
            Ok(())
        }
        Some(first) => Err(Failure::Check(format!(
            "verification failed at check '{}'",
            first.name
        ))),
    }
}

fn cmd_oracle(a: OracleArgs) -> Result<(), Failure> {
    let config = OracleConfig {
        n_max: a.n_max as usize,
        trials: a.trials,
        master_seed: a.seed,
    };
    match run_oracle_suite(&config) {
        Ok(stats) => {
            println!(
                "oracle suite clean: {} instances (n up to {}), {} squares cross-checked",
                stats.instances, stats.largest_instance, stats.squares_checked
            );
            Ok(())
        }
        Err(failure) => {
            println!("{failure}");
            Err(Failure::Check(format!(
                "oracle discrepancy in check '{}' at trial {}",
                failure.check, failure.trial
            )))
        }
    }
}

fn cmd_sweep(a: SweepArgs) -> Result<(), Failure> {
    let p_spec = match (&a.p_list, a.c_min, a.c_max, a.c_step) {
        (Some(ps), None, None, None) => PSpec::Explicit(ps.clone()),
        (None, Some(lo), Some(hi), Some(step)) => {
            if !(step > 0.0) || hi < lo {
                return Err(Failure::Usage(
                    "need c_min <= c_max and c_step > 0".into(),
                ));
            }
            let mut cs = Vec::new();
            let mut k = 0u32;
            loop {
                let c = lo + step * k as f64;
                if c > hi + 1e-9 {
                    break;
                }
                cs.push(c);
                k += 1;
            }
            PSpec::Scaled(cs)
        }
        _ => {
            return Err(Failure::Usage(
                "provide either --p-list or all of --c-min/--c-max/--c-step".into(),
            ))
        }
    };
    let metrics: MetricSet = match &a.metrics {
        None => squareperc::experiments::decomposition_metrics(),
        Some(names) => {
            let mut set = MetricSet::new();
            for name in names {
                let m = Metric::parse(name).ok_or_else(|| {
                    Failure::Usage(format!(
                        "unknown metric '{name}' (valid: {})",
                        Metric::ALL.map(|m| m.csv_name()).join(", ")
                    ))
                })?;
                set.insert(m);
            }
            set
        }
    };
    let config = SweepConfig {
        n: a.n,
        p_spec,
        trials: a.trials,
        master_seed: a.seed,
        metrics,
        caps: Caps::default(),
        keep_raw: a.raw_out.is_some() || a.raw_json_out.is_some(),
    };
    let table = sweep(&config).map_err(|e| Failure::Usage(e.to_string()))?;
    write_file(&a.out, &aggregate_csv(&table))?;
    if let Some(path) = &a.raw_out {
        write_file(path, &raw_csv(&table.raw))?;
    }
    if let Some(path) = &a.json_out {
        write_file(path, &aggregate_json(&table))?;
    }
    if let Some(path) = &a.raw_json_out {
        write_file(path, &raw_json(&table.raw))?;
    }
    println!(
        "wrote {} aggregate rows ({} trials each) to {}",
        table.aggregates.len(),
        config.trials,
        a.out.display()
    );
    Ok(())
}

/// Rounds to six significant digits and drops trailing zeros.
fn format_significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn cmd_expected(a: ExpectedArgs) -> Result<(), Failure> {
    if !(0.0..=1.0).contains(&a.p) {
        return Err(Failure::Usage(format!("p = {} outside [0, 1]", a.p)));
    }
    let value = match a.formula {
        Formula::IsolatedT1 => {
            if a.n < 2 {
                return Err(Failure::Usage("isolated-t1 needs n >= 2".into()));
            }
            expected_isolated_t1(a.n, a.p)
        }
        Formula::NonBonded => {
            if a.n < 4 {
                return Err(Failure::Usage("non-bonded needs n >= 4".into()));
            }
            expected_nonbonded_squares(a.n, a.p)
        }
    };
    println!("{}", format_significant(value));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::format_significant;

    #[test]
    fn significant_formatting() {
        assert_eq!(format_significant(0.0), "0");
        assert_eq!(format_significant(6.0), "6");
        assert_eq!(format_significant(3.0 / 64.0), "0.046875");
        assert_eq!(format_significant(218.27991512850292), "218.28");
        assert_eq!(format_significant(1234567.0), "1234567");
    }
}
