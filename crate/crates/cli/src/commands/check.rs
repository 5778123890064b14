use std::path::PathBuf;

use clap::Args;
use latsort_core::{check_distributivity, FiniteLattice, Verdict};

use crate::error::Result;
use crate::lattices::load_finite;

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Lattice file (`elements:` / `covers:` format)
    file: PathBuf,
}

pub fn run(args: &CheckArgs) -> Result<u8> {
    let lattice = load_finite(&args.file)?;
    println!("lattice: {} ({} elements)", args.file.display(), lattice.len());
    let report = check_distributivity(&lattice);

    println!("distributive law: {}", report.direct.verdict);
    if let Some((a, b, c)) = report.direct.law_witness {
        let n = |x: usize| lattice.name(x);
        println!(
            "  witness: a={} b={} c={}: a^(bvc) = {} but (a^b)v(a^c) = {}",
            n(a),
            n(b),
            n(c),
            n(meet(&lattice, a, join(&lattice, b, c))),
            n(join(&lattice, meet(&lattice, a, b), meet(&lattice, a, c))),
        );
    }
    println!("pascal identity: {}", report.identity.verdict);
    if let Some(w) = &report.identity.identity_witness {
        println!(
            "  witness: ({}) pascal=({}) spec=({})",
            lattice.display(&w.sequence),
            lattice.display(&w.pascal),
            lattice.display(&w.spec)
        );
    }

    if !report.agree() {
        println!("DISAGREE");
        return Ok(4);
    }
    println!("AGREE");
    Ok(match report.direct.verdict {
        Verdict::Distributive => 0,
        Verdict::NotDistributive => 1,
    })
}

fn meet(l: &FiniteLattice, a: usize, b: usize) -> usize {
    latsort_core::Lattice::meet(l, &a, &b)
}

fn join(l: &FiniteLattice, a: usize, b: usize) -> usize {
    latsort_core::Lattice::join(l, &a, &b)
}
