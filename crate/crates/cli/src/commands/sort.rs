use std::path::PathBuf;

use clap::Args;
use latsort_core::{sort_pascal, sort_spec};

use super::Algorithm;
use crate::error::Result;
use crate::input::read_tokens;
use crate::lattices::{CliLattice, Selector};
use crate::with_lattice;

#[derive(Debug, Args)]
pub struct SortArgs {
    /// div, order, powerset:<u> or finite:<file>
    #[arg(long)]
    lattice: Selector,
    #[arg(long, value_enum, default_value = "pascal")]
    algo: Algorithm,
    /// Read tokens from this file (`-` for standard input)
    #[arg(long)]
    file: Option<PathBuf>,
    /// Tokens to sort; standard input is read when none are given
    #[arg(allow_negative_numbers = true)]
    values: Vec<String>,
}

pub fn run(args: &SortArgs) -> Result<u8> {
    let tokens = read_tokens(&args.values, args.file.as_deref())?;
    let loaded = args.lattice.load()?;
    let line = with_lattice!(&loaded, l => sort_line(l, &tokens, args.algo)?);
    println!("{line}");
    Ok(0)
}

fn sort_line<L: CliLattice>(lattice: &L, tokens: &[String], algo: Algorithm) -> Result<String> {
    let xs = lattice.parse_seq(tokens)?;
    let sorted = match algo {
        Algorithm::Spec => sort_spec(lattice, &xs),
        Algorithm::Pascal => sort_pascal(lattice, &xs),
    };
    Ok(lattice.format_seq(&sorted))
}
