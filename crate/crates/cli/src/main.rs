//! `repstab`: exact character polynomial, free module and stability
//! computations with oracle-checked output.

mod commands;
mod operand;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use repstab::verify::Suite;
use repstab::{Cutoffs, Error};

use report::{error_json, Exit, Report};

#[derive(Parser, Debug)]
#[command(
    name = "repstab",
    version,
    about = "Representation stability calculator for FI and FI^m"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit the canonical JSON report (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit the result as a CSV table.
    #[arg(long, global = true)]
    csv: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Largest coordinate for brute-force oracle checks.
    #[arg(long, global = true, env = "REPSTAB_MAX_COORD", default_value_t = 7)]
    max_coord: usize,
    /// Read the primary operand from a file holding a document or a report.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Values of the indicator polynomial binom(X, mu) on every class of a group.
    Indicator {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        group: String,
    },
    /// Product of two character polynomials.
    Multiply {
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: String,
    },
    /// Inner product of two character polynomials.
    Inner {
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        q: String,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Expectation of a character polynomial.
    Expect {
        #[arg(long)]
        p: Option<String>,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Character polynomial of Ind(V) for a representation DEG:REP.
    IndChar {
        #[arg(long)]
        rep: Option<String>,
    },
    /// Tensor product of two virtual free modules.
    Tensor {
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: String,
    },
    /// Dual of a virtual free module.
    Dual {
        #[arg(long)]
        m: Option<String>,
    },
    /// Dimension of coinvariants of a module at each size.
    Coinv {
        #[arg(long)]
        m: Option<String>,
        /// Sizes: `a..b`, `(1,1)..(3,3)` or a `;`-separated list.
        #[arg(long)]
        range: String,
    },
    /// Stable irreducible multiplicities of a module.
    StableDecompose {
        #[arg(long)]
        m: Option<String>,
    },
    /// Gram matrix of the stable irreducible character polynomials.
    Orthonormality {
        #[arg(long)]
        bound: String,
    },
    /// Run an invariant suite and emit a certificate.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Re-emit any document in canonical form.
    Canon { doc: Option<String> },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RangeArgs {
    /// Value in the stable range.
    #[arg(long)]
    stable: bool,
    /// Sizes: `a..b`, `(1,1)..(3,3)` or a `;`-separated list.
    #[arg(long)]
    range: Option<String>,
}

fn emit(global: &Global, text: &str) -> Result<(), Error> {
    match &global.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Parse(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<Exit, Error> {
    let cutoffs = Cutoffs::with_oracle_limit(cli.global.max_coord);
    let (command, mut outcome) = commands::execute(&cli.command, &cli.global, &cutoffs)?;
    let table = std::mem::take(&mut outcome.table);
    let report = Report::new(command, outcome);
    let passed = report.verification.passed;
    if cli.global.csv {
        emit(&cli.global, &table.to_csv())?;
    } else {
        emit(&cli.global, &(report.to_json() + "\n"))?;
    }
    Ok(if passed {
        Exit::Success
    } else {
        Exit::VerificationFailure
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(exit) => ExitCode::from(exit as u8),
        Err(error) => {
            eprintln!("{}", error_json(&error));
            ExitCode::from(Exit::of_error(&error) as u8)
        }
    }
}
