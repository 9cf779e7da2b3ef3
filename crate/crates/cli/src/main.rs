//! `clifford`: exact Clifford correspondence from the command line.
//!
//! Exit codes: 0 success, 2 invalid input, 3 hypotheses not met or
//! unsupported instance, 4 a verification that should always hold failed.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use clifford_core::{Error, ErrorClass};

mod commands;
mod inputs;
mod render;

use inputs::Inputs;

#[derive(Debug, Parser)]
#[command(name = "clifford", version, about = "Clifford correspondence for split semisimple algebras over GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    inputs: Inputs,
    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Check algebra, subalgebra and module axioms
    Validate,
    /// Wedderburn certificate: blocks, idempotents and simple modules
    Simples,
    /// The induced module A (x)_B V
    Induce,
    /// Stability of V and invariance of its annihilator
    Stable,
    /// The endomorphism algebra E of the induced module
    Endo,
    /// V-socle of the induced module restricted to B
    Socle,
    /// Whether B is a normal subring of A
    Normal,
    /// The two constructed stabilizers, and an optional --stabilizer candidate
    Stabilizer,
    /// The Clifford correspondence with all its checks
    Correspond,
    /// Presentations of the simple A-modules containing V
    Presentation,
    /// Run every invariant over the bundled examples
    Verify,
    /// Brute-force oracle cross-checks over the bundled examples
    Oracle,
}

fn exit_code(e: &Error) -> u8 {
    match e.class() {
        ErrorClass::InvalidInput => 2,
        ErrorClass::Unsupported => 3,
        ErrorClass::TheoremCheck => 4,
    }
}

fn run(cli: &Cli) -> Result<commands::Outcome, Error> {
    let inp = &cli.inputs;
    let seed = cli.seed;
    match cli.command {
        Command::Validate => commands::validate(inp),
        Command::Simples => commands::simples(inp, seed),
        Command::Induce => commands::induce_cmd(inp),
        Command::Stable => commands::stable(inp, seed),
        Command::Endo => commands::endo(inp, seed),
        Command::Socle => commands::socle(inp, seed),
        Command::Normal => commands::normal(inp, seed),
        Command::Stabilizer => commands::stabilizer(inp, seed),
        Command::Correspond => commands::correspond_cmd(inp, seed),
        Command::Presentation => commands::presentation(inp, seed),
        Command::Verify => commands::verify(seed),
        Command::Oracle => commands::oracle(seed),
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome.value).expect("json value") + "\n",
        Format::Text => render::text(&outcome.value),
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if outcome.defect {
        eprintln!("error: invariant checks failed");
        return ExitCode::from(4);
    }
    ExitCode::SUCCESS
}
