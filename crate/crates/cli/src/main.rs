use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mtutte::commands::{
    cmd_coeffs, cmd_tutte, cmd_verify, Engine, FamilyChoice, Options, Outcome, EXIT_INPUT,
};
use mtutte::input::DEFAULT_MAX_N;

const AFTER_HELP: &str = "\
Input is a JSON file (or - for stdin):
  {\"matroid\": {\"type\": \"uniform\", \"r\": 2, \"n\": 3}}
  {\"matroid\": {\"type\": \"rank_table\", \"n\": 2, \"rank\": [0, 1, 1, 1]},
   \"multiplicity\": {\"type\": \"table\", \"values\": [\"1\", \"1\", \"1\", \"5\"]}}
  {\"matroid\": {\"type\": \"graphic\", \"vertices\": 3, \"edges\": [[0, 1], [1, 2], [0, 2]]}}
  {\"matroid\": {\"type\": \"integer_matrix\", \"matrix\": [[\"1\", \"2\"], [\"0\", \"2\"]]},
   \"multiplicity\": {\"type\": \"from_matrix\"}}
Tables are indexed by bitmask: element e contributes bit 2^e.
Integer matrices default to the gcd-of-minors multiplicity, everything else to m = 1.

Exit codes: 0 pass, 1 verification failure, 2 input error, 3 size guard.";

#[derive(Parser)]
#[command(
    name = "mtutte",
    version,
    about = "Exact Tutte and multiplicity Tutte polynomials of small matroids",
    after_help = AFTER_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Matroid input file, or - for stdin
    file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Largest accepted ground set (at most 24)
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (multiplicity) Tutte polynomial
    Tutte {
        #[command(flatten)]
        common: Common,
        /// definition, convolution, delcon or activity
        #[arg(long, default_value = "definition")]
        engine: Engine,
        /// Element order for the activity engine, least first, e.g. 2,0,1
        #[arg(long)]
        order: Option<String>,
    },
    /// Evaluate the extreme-coefficient formulas against the polynomial
    Coeffs {
        #[command(flatten)]
        common: Common,
        /// top, dual or both
        #[arg(long, default_value = "both")]
        family: FamilyChoice,
    },
    /// Check every applicable identity and report pass or fail per identity
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::Tutte { common, .. }
        | Command::Coeffs { common, .. }
        | Command::Verify { common } => common,
    };
    let text = match read_input(&common.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let opts = Options {
        json: common.json,
        max_n: common.max_n,
    };
    let outcome: Outcome = match &cli.command {
        Command::Tutte { engine, order, .. } => cmd_tutte(&text, *engine, order.as_deref(), &opts),
        Command::Coeffs { family, .. } => cmd_coeffs(&text, *family, &opts),
        Command::Verify { .. } => cmd_verify(&text, &opts),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
