//! Command-line front end. Every subcommand writes one JSON document.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::brace::BraceSpec;
use crate::classification::{
    exhaustive_search, generate_row, orders_crosscheck, row_membership, Execution, RowLabel,
    RowParams, Sign,
};
use crate::ybe::YbeSolution;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zbrace", version, about = "Check, classify and search λ-homomorphic braces on Z²")]
pub struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a pair (φ, ψ) gives a brace.
    Check {
        /// Inline JSON `{"phi": [[..]], "psi": [[..]]}` or a path to a file holding it.
        spec: String,
    },
    /// List the classification rows a pair belongs to.
    Classify { spec: String },
    /// Build the pair of a row from its parameters.
    Generate {
        #[arg(long)]
        row: RowLabel,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        sign1: Option<Sign>,
        #[arg(long, allow_hyphen_values = true)]
        sign2: Option<Sign>,
    },
    /// Check every pair with entries in [-bound, bound] against the rows.
    Search {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Compare the det/trace order rule with repeated multiplication.
    Orders {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
    },
    /// Sample the Yang–Baxter, involutivity and non-degeneracy checks.
    Ybe {
        spec: String,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "box", default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
        half_width: i64,
    },
}

struct Outcome {
    json: String,
    code: i32,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn read_spec(input: &str) -> Result<BraceSpec, String> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))?
    };
    serde_json::from_str(&text).map_err(|e| format!("bad spec: {e}"))
}

fn execute(command: &Command, err: &mut dyn Write) -> Result<Outcome, String> {
    let outcome = match command {
        Command::Check { spec } => {
            let spec = read_spec(spec)?;
            let verdict = spec.check_pair().map_err(|e| e.to_string())?;
            let code = if verdict.valid { EXIT_OK } else { EXIT_FAILED };
            Outcome { json: to_json(&verdict), code }
        }
        Command::Classify { spec } => {
            let spec = read_spec(spec)?;
            let valid = spec.is_valid().map_err(|e| e.to_string())?;
            let rows = row_membership(&spec).map_err(|e| e.to_string())?;
            let mut code = EXIT_OK;
            let listed: Vec<RowLabel> = if valid {
                if rows.is_empty() {
                    let _ = writeln!(err, "valid pair {spec} matches no row of the classification");
                    code = EXIT_FAILED;
                }
                rows.into_iter().collect()
            } else {
                let _ = writeln!(err, "not a brace");
                if !rows.is_empty() {
                    let names: Vec<&str> = rows.iter().map(|r| r.as_str()).collect();
                    let _ = writeln!(err, "invalid pair satisfies row conditions {names:?}");
                    code = EXIT_FAILED;
                }
                Vec::new()
            };
            Outcome { json: to_json(&listed), code }
        }
        Command::Generate { row, m, p, q, n, sign1, sign2 } => {
            let params = RowParams { m: *m, p: *p, q: *q, n: *n, sign1: *sign1, sign2: *sign2 };
            let spec = generate_row(*row, &params).map_err(|e| e.to_string())?;
            Outcome { json: to_json(&spec), code: EXIT_OK }
        }
        Command::Search { bound, sequential } => {
            let execution = if *sequential { Execution::Sequential } else { Execution::Parallel };
            let report = exhaustive_search(*bound, execution);
            let clean = report.classification_holds()
                && report.kernel_mismatches.is_empty()
                && report.overflows.is_empty();
            Outcome { json: to_json(&report), code: if clean { EXIT_OK } else { EXIT_FAILED } }
        }
        Command::Orders { bound } => {
            let report = orders_crosscheck(*bound).map_err(|e| e.to_string())?;
            let code = if report.disagreements.is_empty() { EXIT_OK } else { EXIT_FAILED };
            Outcome { json: to_json(&report), code }
        }
        Command::Ybe { spec, samples, seed, half_width } => {
            let spec = read_spec(spec)?;
            let solution = YbeSolution::new(spec).map_err(|e| e.to_string())?;
            let _ = writeln!(err, "seed: {seed}");
            let report = solution
                .run_suite(*samples as usize, *seed, *half_width)
                .map_err(|e| e.to_string())?;
            let code = if report.is_clean() { EXIT_OK } else { EXIT_FAILED };
            Outcome { json: to_json(&report), code }
        }
    };
    Ok(outcome)
}

/// Runs a parsed command, writing JSON to `out` (or `--output`) and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match execute(&cli.command, err) {
        Ok(o) => o,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &outcome.json).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(outcome.json.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    outcome.code
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            if code == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            }
        }
    }
}
