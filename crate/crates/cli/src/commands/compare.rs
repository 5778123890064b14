use clap::Args;
use latsort_core::analysis::Sequences;
use latsort_core::{sort_pascal, sort_spec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, Result};
use crate::lattices::{CliLattice, Selector};
use crate::with_lattice;

const MAX_ORACLE_LEN: usize = 20;
const MAX_EXHAUSTIVE: u128 = 10_000_000;

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    lattice: Selector,
    /// Sequence length
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow lengths above 20 and very large exhaustive runs
    #[arg(long)]
    force: bool,
    /// Compare on every sequence of length n instead of random ones
    #[arg(long)]
    exhaustive: bool,
}

pub fn run(args: &CompareArgs) -> Result<u8> {
    if args.n > MAX_ORACLE_LEN && !args.force {
        return Err(CliError::Input(format!(
            "n = {} exceeds {MAX_ORACLE_LEN}; the reference sort is exponential (use --force)",
            args.n
        )));
    }
    let loaded = args.lattice.load()?;
    with_lattice!(&loaded, l => compare(l, args))
}

fn compare<L: CliLattice>(lattice: &L, args: &CompareArgs) -> Result<u8> {
    let cases: Box<dyn Iterator<Item = Vec<L::Element>>> = if args.exhaustive {
        let elements = lattice.all_elements().ok_or_else(|| {
            CliError::Input(format!("lattice {} is too large to enumerate", args.lattice))
        })?;
        let count = (elements.len() as u128).checked_pow(args.n as u32);
        if count.is_none_or(|c| c > MAX_EXHAUSTIVE) && !args.force {
            return Err(CliError::Input(format!(
                "{}^{} sequences is too many (use --force)",
                elements.len(),
                args.n
            )));
        }
        println!("exhaustive: all sequences of length {}", args.n);
        Box::new(Sequences::new(&elements, args.n).collect::<Vec<_>>().into_iter())
    } else {
        println!("prng: ChaCha8 seed={}", args.seed);
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let n = args.n;
        let cases: Vec<Vec<L::Element>> = (0..args.trials)
            .map(|_| (0..n).map(|_| lattice.random_element(&mut rng)).collect())
            .collect();
        Box::new(cases.into_iter())
    };

    let mut total = 0usize;
    let mut matched = 0usize;
    for (i, xs) in cases.enumerate() {
        total += 1;
        let pascal = sort_pascal(lattice, &xs);
        let spec = sort_spec(lattice, &xs);
        if pascal == spec {
            matched += 1;
            println!("trial {}: match", i + 1);
        } else {
            println!(
                "trial {}: MISMATCH input=({}) pascal=({}) spec=({})",
                i + 1,
                lattice.format_seq(&xs),
                lattice.format_seq(&pascal),
                lattice.format_seq(&spec)
            );
        }
    }
    println!("{matched}/{total} match");
    Ok(if matched == total { 0 } else { 1 })
}
