//! Command-line surface for exact plane-branch invariants.
//!
//! Exit codes: 0 when every applicable check passes, 1 on any check
//! failure, 2 on input or validation errors. Conjecture counter-evidence is
//! a discovery, not a failure: the `conjecture` command exits 0 and prints
//! prominent EVIDENCE lines instead.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use plane_branch::parse::{parse_bivar, parse_param_spec};
use plane_branch::report::{
    analyze_param, analyze_poly, primes_in_range, sweep, ConjectureEvidence, SweepOutcome,
    SweepRow,
};
use plane_branch::{Parametrization, PrimeField};
use serde::Serialize;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "plane-branch",
    version,
    about = "Exact invariants of plane branch singularities over prime fields",
    long_about = "Computes the semigroup, conductor, delta invariant, Milnor number and polar \
                  intersection numbers of a plane branch over F_p in exact arithmetic, and \
                  verifies the classical identities relating them on the given instance."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance and verify every applicable identity
    Analyze {
        /// Prime characteristic
        #[arg(long)]
        p: u64,
        /// Parametrization "<n>; <y(t)>", e.g. "4; t^6+t^7"
        #[arg(long, conflicts_with = "poly")]
        param: Option<String>,
        /// Implicit equation f(x, y), e.g. "(y^2+x^3)^2+x^5*y"
        #[arg(long)]
        poly: Option<String>,
        /// Semigroup generators asserted for poly mode, e.g. 4,6,13
        #[arg(long, requires = "poly", value_delimiter = ',')]
        generators: Option<Vec<u64>>,
        /// Truncation-degree cap for the Milnor computation
        #[arg(long)]
        dmax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-run the analysis across a range of primes
    Sweep {
        /// Inclusive prime range "<lo>..<hi>", e.g. 5..19
        #[arg(long)]
        primes: String,
        /// Parametrization template "<n>; <y(t)>" with integer coefficients
        #[arg(long)]
        param: String,
        #[arg(long)]
        dmax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep a prime range and report evidence on the mu = c equivalence
    /// extended to the first generator (an open question)
    Conjecture {
        /// Inclusive prime range "<lo>..<hi>", e.g. 5..19
        #[arg(long)]
        primes: String,
        /// Parametrization template "<n>; <y(t)>" with integer coefficients
        #[arg(long)]
        param: String,
        #[arg(long)]
        dmax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn input_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {}", msg);
    EXIT_INPUT_ERROR
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Analyze {
            p,
            param,
            poly,
            generators,
            dmax,
            format,
        } => run_analyze(p, param, poly, generators, dmax, format),
        Command::Sweep {
            primes,
            param,
            dmax,
            format,
        } => run_sweep(primes, param, dmax, format),
        Command::Conjecture {
            primes,
            param,
            dmax,
            format,
        } => run_conjecture(primes, param, dmax, format),
    }
}

fn run_analyze(
    p: u64,
    param: Option<String>,
    poly: Option<String>,
    generators: Option<Vec<u64>>,
    dmax: Option<u64>,
    format: Format,
) -> u8 {
    let report = match (param, poly) {
        (Some(param), None) => {
            let (n, y) = match parse_param_spec(&param) {
                Ok(v) => v,
                Err(e) => return input_error(e),
            };
            let branch = match Parametrization::validate(p, n, &y) {
                Ok(b) => b,
                Err(e) => return input_error(e),
            };
            match analyze_param(&branch, dmax) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            }
        }
        (None, Some(poly)) => {
            let field = match PrimeField::new(p) {
                Ok(f) => f,
                Err(e) => return input_error(e),
            };
            let f = match parse_bivar(&poly) {
                Ok(t) => t.reduce(field),
                Err(e) => return input_error(e),
            };
            match analyze_poly(field, &f, generators.as_deref(), dmax) {
                Ok(r) => r,
                Err(e) => return input_error(e),
            }
        }
        (None, None) => return input_error("exactly one of --param or --poly is required"),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };

    match format {
        Format::Text => print!("{}", render::report_text(&report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    if report.any_check_failed() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn parse_prime_range(spec: &str) -> Result<(u64, u64), String> {
    let parts: Vec<&str> = spec.split("..").collect();
    if parts.len() != 2 {
        return Err(format!("invalid prime range '{}': expected <lo>..<hi>", spec));
    }
    let lo: u64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("invalid lower bound '{}'", parts[0]))?;
    let hi: u64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("invalid upper bound '{}'", parts[1]))?;
    if lo > hi {
        return Err(format!("empty prime range {}..{}", lo, hi));
    }
    Ok((lo, hi))
}

fn run_template_sweep(
    primes: &str,
    param: &str,
    dmax: Option<u64>,
) -> Result<(u64, String, Vec<SweepRow>), u8> {
    let (lo, hi) = parse_prime_range(primes).map_err(input_error)?;
    let (n, y) = parse_param_spec(param).map_err(input_error)?;
    let primes = primes_in_range(lo, hi);
    let rows = sweep(n, &y, &primes, dmax);
    Ok((n, y.to_string(), rows))
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    n: u64,
    y: &'a str,
    rows: &'a [SweepRow],
}

#[derive(Serialize)]
struct ConjectureRow<'a> {
    p: u64,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    evidence: Option<&'a ConjectureEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

#[derive(Serialize)]
struct ConjectureDocument<'a> {
    n: u64,
    y: &'a str,
    rows: Vec<ConjectureRow<'a>>,
}

fn run_sweep(primes: String, param: String, dmax: Option<u64>, format: Format) -> u8 {
    let (n, y, rows) = match run_template_sweep(&primes, &param, dmax) {
        Ok(v) => v,
        Err(code) => return code,
    };
    match format {
        Format::Text => print!("{}", render::sweep_text(n, &y, &rows)),
        Format::Json => {
            let doc = SweepDocument {
                n,
                y: &y,
                rows: &rows,
            };
            println!("{}", serde_json::to_string_pretty(&doc).expect("sweep serializes"));
        }
    }
    let failed = rows.iter().any(|row| match &row.outcome {
        SweepOutcome::Analyzed { report } => report.any_check_failed(),
        SweepOutcome::Skipped { .. } => false,
    });
    if failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn run_conjecture(primes: String, param: String, dmax: Option<u64>, format: Format) -> u8 {
    let (n, y, rows) = match run_template_sweep(&primes, &param, dmax) {
        Ok(v) => v,
        Err(code) => return code,
    };
    match format {
        Format::Text => print!("{}", render::conjecture_text(n, &y, &rows)),
        Format::Json => {
            let probe_rows: Vec<ConjectureRow<'_>> = rows
                .iter()
                .map(|row| match &row.outcome {
                    SweepOutcome::Analyzed { report } => ConjectureRow {
                        p: row.p,
                        status: "analyzed",
                        evidence: Some(&report.conjecture_evidence),
                        reason: None,
                    },
                    SweepOutcome::Skipped { reason } => ConjectureRow {
                        p: row.p,
                        status: "skipped",
                        evidence: None,
                        reason: Some(reason),
                    },
                })
                .collect();
            let doc = ConjectureDocument {
                n,
                y: &y,
                rows: probe_rows,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("probe serializes")
            );
        }
    }
    // Counter-evidence is a discovery, not a failure.
    EXIT_OK
}
