mod commands;
mod error;
mod input;
mod lattices;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Sort sequences in lattices and check lattices for distributivity.
#[derive(Debug, Parser)]
#[command(name = "latsort", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sort a sequence in the selected lattice
    Sort(commands::sort::SortArgs),
    /// Compare the insertion sort against the subset definition
    Compare(commands::compare::CompareArgs),
    /// Time sorts of (1, .., n) and write CSV
    Bench(commands::bench::BenchArgs),
    /// Decide distributivity of a finite lattice file
    Check(commands::check::CheckArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sort(args) => commands::sort::run(args),
        Command::Compare(args) => commands::compare::run(args),
        Command::Bench(args) => commands::bench::run(args),
        Command::Check(args) => commands::check::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("latsort: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
