//! Command-line front end: run named checks against a chosen quartic, scan
//! candidate ranks, and emit human-readable or JSON reports.
//!
//! Exit codes: 0 = PASS (or SKIP), 1 = FAIL, 2 = usage or input error,
//! 3 = DEGENERATE (a precondition of the computation failed).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quartic_cert::mukai::{divisibility_scan, ScanRow};
use quartic_cert::report::{CheckResult, CheckStatus, Report};
use quartic_cert::verify::{
    list_checks, run_all, run_check, Config, CostFilter, ExpectedValues, QuarticChoice, VerifyError,
};

#[derive(Parser)]
#[command(
    name = "quartic-cert",
    version,
    about = "Exact-arithmetic certificates for rank and kernel claims about \
             multiplication maps on quartic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a single check by id.
    Check {
        /// Check id; see `list` for the catalog.
        id: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run every check admitted by the cost filter and aggregate a report.
    All {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Candidate ranks r | 2d^2 + 1 per degree, with exclusion status.
    Scan {
        #[arg(long, default_value_t = -11, allow_hyphen_values = true)]
        d_min: i64,
        #[arg(long, default_value_t = 11, allow_hyphen_values = true)]
        d_max: i64,
        /// Write the rows as JSON to this path instead of printing a table.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the check catalog: id, cost class, summary, and anchor.
    List,
}

#[derive(Args)]
struct RunOpts {
    /// Quartic(s) to run on: fermat | random | file:<path>.
    #[arg(long, default_value = "fermat")]
    quartic: String,
    /// Seed for all randomness (random quartics and certificate primes).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// How many random quartics `--quartic random` draws.
    #[arg(long, default_value_t = 3)]
    n_random: u32,
    /// Independent primes behind each modular certificate.
    #[arg(long, default_value_t = 3)]
    primes: u32,
    /// Force full rational elimination instead of modular certificates.
    #[arg(long)]
    exact: bool,
    /// Only run checks of this cost class: fast | medium | heavy | all.
    #[arg(long, default_value = "all")]
    cost: String,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Override the bundled expected-values table (for harness testing).
    #[arg(long)]
    expected: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Check { id, opts } => {
            let config = config_from(&opts)?;
            let res = run_check(&id, &config).map_err(describe)?;
            print_result(&res);
            if let Some(path) = &opts.json {
                let report = Report::new(config.report_config(), vec![res.clone()]);
                write_json(path, &report)?;
            }
            Ok(exit_for_status(res.status))
        }
        Cmd::All { opts } => {
            let config = config_from(&opts)?;
            let report = run_all(&config).map_err(describe)?;
            for res in &report.results {
                print_result(res);
            }
            println!("overall: {}", report.overall);
            if let Some(path) = &opts.json {
                write_json(path, &report)?;
            }
            Ok(exit_for_report(&report))
        }
        Cmd::Scan { d_min, d_max, json } => {
            if d_min > d_max {
                return Err(format!("empty degree range: {d_min} > {d_max}"));
            }
            let rows = divisibility_scan(d_min, d_max);
            match json {
                Some(path) => write_json(&path, &rows)?,
                None => print_scan(&rows),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::List => {
            for spec in list_checks() {
                println!(
                    "{:<22} {:<7} {}",
                    spec.id,
                    spec.cost.to_string(),
                    spec.summary
                );
                println!("{:22} {:7} anchor: {}", "", "", spec.anchor());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn config_from(opts: &RunOpts) -> Result<Config, String> {
    let quartic: QuarticChoice = opts.quartic.parse()?;
    let cost: CostFilter = opts.cost.parse()?;
    let expected = match &opts.expected {
        None => ExpectedValues::bundled().clone(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read `{}`: {e}", path.display()))?;
            ExpectedValues::parse(&text).map_err(|e| e.to_string())?
        }
    };
    Ok(Config {
        quartic,
        seed: opts.seed,
        n_random: opts.n_random,
        primes: opts.primes,
        exact: opts.exact,
        cost,
        expected,
    })
}

/// Usage-shaped runner errors (unknown id, unreadable/malformed input) keep
/// their message; anything else is also a caller-visible error string.
fn describe(e: VerifyError) -> String {
    e.to_string()
}

fn exit_for_status(status: CheckStatus) -> ExitCode {
    match status {
        CheckStatus::Pass | CheckStatus::Skip => ExitCode::SUCCESS,
        CheckStatus::Fail => ExitCode::from(1),
        CheckStatus::Degenerate => ExitCode::from(3),
    }
}

fn exit_for_report(report: &Report) -> ExitCode {
    if report.overall == CheckStatus::Fail {
        return ExitCode::from(1);
    }
    if report
        .results
        .iter()
        .any(|r| r.status == CheckStatus::Degenerate)
    {
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}

fn print_result(res: &CheckResult) {
    println!(
        "[{}] {} ({} ms, quartic {}, seed {})",
        res.status, res.id, res.runtime_ms, res.quartic, res.seed
    );
    println!("    anchor: {}", res.paper_anchor);
    for (key, expected) in &res.expected {
        let computed = res
            .computed
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .unwrap_or("<missing>");
        if computed == expected {
            println!("    {key} = {computed}");
        } else {
            println!("    {key}: expected {expected}, computed {computed}  << MISMATCH");
        }
    }
    for (key, computed) in &res.computed {
        if !res.expected.iter().any(|(k, _)| k == key) {
            println!("    {key} = {computed} (informational)");
        }
    }
    for line in &res.evidence {
        println!("    note: {line}");
    }
}

fn print_scan(rows: &[ScanRow]) {
    println!("{:>4}  {:>8}  candidate ranks", "d", "2d^2+1");
    for row in rows {
        let entries = row
            .entries
            .iter()
            .map(|(r, status)| format!("{r} {status}"))
            .collect::<Vec<_>>()
            .join(", ");
        println!("{:>4}  {:>8}  {}", row.d, row.rs, entries);
    }
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> Result<(), String> {
    let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    std::fs::write(path, json).map_err(|e| format!("cannot write `{}`: {e}", path.display()))
}
