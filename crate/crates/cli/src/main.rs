use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use octoquad_cli::commands::DEFAULT_TOL;
use octoquad_cli::{run_solve, run_spectrum, run_table, Exit, Options, Outcome};
use serde::Serialize;

/// Solve left octonionic quadratics x² + b·x + c = 0 and compute left
/// spectra of 2×2 octonionic matrices.
#[derive(Parser)]
#[command(name = "octoquad", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Emit the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Residual warning threshold (scaled by 1 + the input norms).
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Number of sphere members to sample when the solution set is a sphere.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    /// Seed for sphere sample directions.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve x² + b·x + c = 0.
    Solve {
        /// Linear coefficient, e.g. `1+2i-3jl`
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Constant term
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        common: Common,
    },
    /// Left spectrum of [[a, b], [c, d]].
    Spectrum {
        /// Top-left entry
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Top-right entry
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Bottom-left entry
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Bottom-right entry
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the octonion basis multiplication table.
    Table {
        /// Recompute every entry with the Cayley–Dickson product.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
}

fn emit<R: Serialize>(out: Outcome<R>, json: bool) -> ExitCode {
    if json {
        match serde_json::to_string_pretty(&out.report) {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(Exit::Error as u8);
            }
        }
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.exit as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Exit::Error as u8),
            };
        }
    };

    let opts = |c: &Common| Options {
        tol: c.tol,
        samples: c.samples,
        seed: c.seed,
    };
    let result = match &cli.command {
        Command::Solve { b, c, common } => {
            run_solve(b, c, &opts(common)).map(|o| emit(o, common.json))
        }
        Command::Spectrum {
            a,
            b,
            c,
            d,
            common,
        } => run_spectrum([a, b, c, d], &opts(common)).map(|o| emit(o, common.json)),
        Command::Table { check, json } => Ok(emit(run_table(*check), *json)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}
