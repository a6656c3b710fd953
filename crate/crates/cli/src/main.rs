//! `mixlat`: evaluate operations, run verification suites, audit the grid
//! sup-norm claims and draw 2-D ray-space pictures.
//!
//! Exit codes: 0 pass, 1 law violation, 2 usage or input error.

mod eval;
mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use mixlat_core::audit::DEFAULT_VALUE_BOUND;
use mixlat_core::{audit_sup_claims, run_suite, Error, SpaceHandle, Suite};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "mixlat",
    version,
    about = "Mixed lattice spaces: operations, law checks, audits and plots"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Space spec (JSON file)
    #[arg(long, global = true, value_name = "FILE")]
    space: Option<PathBuf>,
    /// Base set spec (JSON file) for hull and gauge operations
    #[arg(long, global = true, value_name = "FILE")]
    set: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Output file; standard output when absent
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one operation and print {op, inputs, output}
    Eval(eval::EvalArgs),
    /// Run a verification suite and write the report
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Exhaustive check of the sup-norm claims on the three-point grid
    Audit {
        #[arg(long, default_value_t = DEFAULT_VALUE_BOUND)]
        bound: u32,
    },
    /// SVG picture of a 2-D ray space with cone-norm segments
    Plot {
        /// Sample point as a JSON array; repeat up to 16 times
        #[arg(long = "point", value_name = "JSON")]
        points: Vec<String>,
    },
}

/// Failure that maps to exit code 2.
#[derive(Debug)]
pub(crate) struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<serde_json::Error> for UsageError {
    fn from(e: serde_json::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub(crate) type CliResult<T> = Result<T, UsageError>;

fn load_space(common: &Common) -> CliResult<SpaceHandle> {
    let path = common
        .space
        .as_ref()
        .ok_or_else(|| UsageError("--space FILE is required".into()))?;
    let text = read(path)?;
    Ok(SpaceHandle::from_json(&text)?)
}

pub(crate) fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn emit(common: &Common, body: &str) -> CliResult<()> {
    match &common.out {
        Some(p) => fs::write(p, body).map_err(|e| UsageError(format!("{}: {e}", p.display()))),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(common: &Common, value: &T) -> CliResult<()> {
    emit(common, &serde_json::to_string_pretty(value)?)
}

fn timestamp() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    format!("unix:{secs}")
}

fn run(cli: &Cli) -> CliResult<u8> {
    let common = &cli.common;
    match &cli.command {
        Command::Eval(args) => {
            let space = load_space(common)?;
            let value = eval::run(&space, common, args)?;
            emit_json(common, &value)?;
            Ok(0)
        }
        Command::Verify { suite } => {
            let suite = Suite::parse(suite)?;
            let space = load_space(common)?;
            let mut report = run_suite(&space, suite, common.samples, common.seed, common.tol)?;
            report.environment.timestamp = Some(timestamp());
            emit_json(common, &report)?;
            for r in report.failing() {
                eprintln!(
                    "FAIL {}: {} of {} samples, max violation {:e}",
                    r.law, r.failure_count, r.samples, r.max_violation
                );
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Audit { bound } => {
            let space = load_space(common)?;
            let report = audit_sup_claims(&space, *bound)?;
            emit_json(common, &report)?;
            Ok(0)
        }
        Command::Plot { points } => {
            let space = load_space(common)?;
            let svg = plot::render(&space, points, common.seed)?;
            emit(common, &svg)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            println!("{}", serde_json::json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}
