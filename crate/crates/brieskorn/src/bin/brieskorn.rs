//! Command-line front end: classify, compare, verify, enumerate, sample.
//!
//! Reports print as JSON on stdout; `--out` writes a CSV sidecar. Exit codes:
//! 0 on success, 1 when a `verify` check misses its tolerance, 2 on bad input.

use brieskorn::{
    cmd_classify, cmd_compare, cmd_enumerate, cmd_sample, cmd_verify, resolve_seed, CompareMode,
    Report, VerifyCheck,
};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "brieskorn",
    version,
    about = "Classify and numerically verify mixed Pham-Brieskorn surface germs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symbolic classification of one family
    Classify {
        /// Holomorphic exponents, comma-separated (e.g. 2,3)
        #[arg(short, long, value_delimiter = ',', required = true)]
        a: Vec<u32>,
        /// Conjugate exponents, comma-separated (e.g. 0,1)
        #[arg(short, long, value_delimiter = ',', required = true)]
        b: Vec<u32>,
        /// Write the verdict table as CSV to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equivalence comparison of two families
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        a1: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        b1: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        a2: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        b2: Vec<u32>,
        /// top | bilip | outer | ambient
        #[arg(long, default_value = "top")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Numeric verification of symbolic predictions
    Verify {
        #[arg(short, long, value_delimiter = ',', required = true)]
        a: Vec<u32>,
        #[arg(short, long, value_delimiter = ',', required = true)]
        b: Vec<u32>,
        /// Checks to run: cone, beta, ne, conj, mult (comma-separated)
        #[arg(long, value_delimiter = ',', required = true)]
        checks: Vec<String>,
        /// RNG seed (the BRIESKORN_SEED environment variable overrides this)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate Lipschitz classes over a bounded conjugate-exponent grid
    Enumerate {
        #[arg(short, long, value_delimiter = ',', required = true)]
        a: Vec<u32>,
        /// Upper bound for every conjugate exponent b_i
        #[arg(long = "b-bound")]
        b_bound: u32,
        /// Write one CSV row per grid member with its class index
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample a seeded point cloud on the surface
    Sample {
        #[arg(short, long, value_delimiter = ',', required = true)]
        a: Vec<u32>,
        #[arg(short, long, value_delimiter = ',', required = true)]
        b: Vec<u32>,
        #[arg(long, default_value_t = 2000)]
        count: usize,
        #[arg(long, default_value_t = 1e-2)]
        r_min: f64,
        #[arg(long, default_value_t = 1.0)]
        r_max: f64,
        /// RNG seed (the BRIESKORN_SEED environment variable overrides this)
        #[arg(long)]
        seed: Option<u64>,
        /// Write the cloud as CSV to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Prints to stdout, treating a closed pipe (e.g. `| head`) as success.
fn print_stdout(text: &str) -> Result<(), String> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(format!("cannot write to stdout: {e}")),
    }
}

fn emit(report: &Report, csv: Option<(&Path, &str)>) -> Result<(), String> {
    print_stdout(&report.to_json())?;
    if let Some((path, contents)) = csv {
        write_file(path, contents)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify { a, b, out } => {
            let report = cmd_classify(&a, &b).map_err(|e| e.to_string())?;
            let csv = report.verdicts_csv();
            emit(&report, out.as_deref().map(|p| (p, csv.as_str())))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            a1,
            b1,
            a2,
            b2,
            mode,
            out,
        } => {
            let mode: CompareMode = mode.parse().map_err(|e: brieskorn::Error| e.to_string())?;
            let report = cmd_compare(&a1, &b1, &a2, &b2, mode).map_err(|e| e.to_string())?;
            let csv = report.verdicts_csv();
            emit(&report, out.as_deref().map(|p| (p, csv.as_str())))?;
            // A comparison verdict, including NotEquivalent, is a successful run.
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            a,
            b,
            checks,
            seed,
            out,
        } => {
            let checks = checks
                .iter()
                .map(|c| c.parse::<VerifyCheck>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let seed = resolve_seed(seed).map_err(|e| e.to_string())?;
            let report = cmd_verify(&a, &b, &checks, seed).map_err(|e| e.to_string())?;
            let csv = report.verdicts_csv();
            emit(&report, out.as_deref().map(|p| (p, csv.as_str())))?;
            if report.any_failure() {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Enumerate { a, b_bound, out } => {
            let (report, csv) = cmd_enumerate(&a, b_bound).map_err(|e| e.to_string())?;
            emit(&report, out.as_deref().map(|p| (p, csv.as_str())))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample {
            a,
            b,
            count,
            r_min,
            r_max,
            seed,
            out,
        } => {
            let seed = resolve_seed(seed).map_err(|e| e.to_string())?;
            let (report, cloud) =
                cmd_sample(&a, &b, count, (r_min, r_max), seed).map_err(|e| e.to_string())?;
            print_stdout(&report.to_json())?;
            if let Some(path) = out {
                let mut buf = Vec::new();
                cloud
                    .write_csv(&mut buf)
                    .map_err(|e| e.to_string())?;
                write_file(&path, &String::from_utf8_lossy(&buf))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
