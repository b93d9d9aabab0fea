//! Thin command-line front end: argument parsing and file IO only.
//! All behaviour lives in [`wallcross::cli`].

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wallcross::cli::{
    parse_localization, parse_manifold, parse_sign, run_crossing, run_dim, run_localize,
    to_stable_json, CliError, Route,
};

#[derive(Parser)]
#[command(
    name = "wallcross",
    version,
    about = "Exact wall-crossing and equivariant localization computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expected dimension and index rank from a manifold file
    Dim {
        /// Path to a manifold JSON file
        file: PathBuf,
    },
    /// Wall-crossing value from a manifold file
    Crossing {
        /// Path to a manifold JSON file
        file: PathBuf,
        /// Comma-separated curve names to insert, in order
        #[arg(long, value_delimiter = ',')]
        curves: Vec<String>,
        /// Overall sign convention: +1 or -1
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        sign: String,
        /// Evaluation route: closed_form, localization, or both
        #[arg(long, default_value = "closed_form")]
        via: String,
    },
    /// Localization value from a fixed-point data file
    Localize {
        /// Path to a localization JSON file
        file: PathBuf,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Dim { file } => {
            let input = parse_manifold(&read_file(&file)?)?;
            Ok(to_stable_json(&run_dim(&input)?))
        }
        Command::Crossing {
            file,
            curves,
            sign,
            via,
        } => {
            let sign = parse_sign(&sign).ok_or_else(|| {
                CliError::Validation(format!("--sign must be +1 or -1, got {sign:?}"))
            })?;
            let route = Route::parse(&via).ok_or_else(|| {
                CliError::Validation(format!(
                    "--via must be closed_form, localization, or both, got {via:?}"
                ))
            })?;
            let input = parse_manifold(&read_file(&file)?)?;
            Ok(to_stable_json(&run_crossing(&input, &curves, sign, route)?))
        }
        Command::Localize { file } => {
            let input = parse_localization(&read_file(&file)?)?;
            Ok(to_stable_json(&run_localize(&input)?))
        }
    }
}

fn main() -> ExitCode {
    // Reserve exit code 2 for inputs outside the formulas' hypotheses:
    // argument mistakes are reported as validation failures (exit 1),
    // while --help and --version keep exit 0.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(report) => {
            println!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
