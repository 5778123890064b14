use std::fs::File;
use std::hint::black_box;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use latsort_core::{
    sort_pascal_counted_with, sort_pascal_with, sort_spec, CountMode, Counting, SortOptions,
};

use super::Algorithm;
use crate::error::{CliError, Result};
use crate::lattices::{CliLattice, Selector};
use crate::with_lattice;

pub const CSV_HEADER: [&str; 8] = [
    "algorithm",
    "lattice",
    "n",
    "rep",
    "wall_seconds",
    "meets",
    "joins",
    "mode",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Literal,
    Optimized,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    algo: Algorithm,
    #[arg(long)]
    lattice: Selector,
    /// Comma-separated sequence lengths; each run sorts (1, 2, .., n)
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
    /// Write one CSV row per (size, repetition) here
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Sentinel counting mode of the insertion sort
    #[arg(long, value_enum, default_value = "optimized")]
    mode: Mode,
    /// Count meets and joins (adds counter overhead to the timing)
    #[arg(long)]
    count: bool,
}

struct BenchRecord {
    algorithm: Algorithm,
    n: usize,
    rep: usize,
    wall: Duration,
    ops: Option<(u64, u64)>,
    mode: Mode,
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let mut writer = match &args.csv {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let mut w = csv::Writer::from_writer(file);
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            Some(w)
        }
        None => None,
    };
    let loaded = args.lattice.load()?;
    let lattice_id = args.lattice.to_string();

    println!("{:>8}  {:>14}", "n", "median_s");
    for &n in &args.sizes {
        let records = with_lattice!(&loaded, l => bench_size(l, args, n)?);
        if let Some(w) = writer.as_mut() {
            for r in &records {
                let (meets, joins) = match r.ops {
                    Some((m, j)) => (m.to_string(), j.to_string()),
                    None => (String::new(), String::new()),
                };
                w.write_record([
                    r.algorithm.name().to_string(),
                    lattice_id.clone(),
                    r.n.to_string(),
                    r.rep.to_string(),
                    format!("{:.6}", r.wall.as_secs_f64()),
                    meets,
                    joins,
                    mode_name(r.mode).to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.flush()
                .map_err(|e| CliError::Input(format!("writing CSV: {e}")))?;
        }
        let walls: Vec<Duration> = records.iter().map(|r| r.wall).collect();
        println!("{n:>8}  {:>14.6}", median(&walls).as_secs_f64());
    }
    if let Some(path) = &args.csv {
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn bench_size<L: CliLattice>(lattice: &L, args: &BenchArgs, n: usize) -> Result<Vec<BenchRecord>> {
    let xs = lattice.workload(n).map_err(CliError::Input)?;
    // The reference sort has no sentinels: every operation it performs is real.
    let mode = match args.algo {
        Algorithm::Spec => Mode::Literal,
        Algorithm::Pascal => args.mode,
    };
    let options = SortOptions {
        mode: match mode {
            Mode::Literal => CountMode::Literal,
            Mode::Optimized => CountMode::Optimized,
        },
        dominating_fast_path: false,
    };
    let mut records = Vec::with_capacity(args.reps);
    for rep in 1..=args.reps {
        let (wall, ops) = match (args.algo, args.count) {
            (Algorithm::Spec, false) => time(|| sort_spec(lattice, &xs)),
            (Algorithm::Spec, true) => {
                let counting = Counting::new(lattice);
                let (wall, _) = time(|| sort_spec(&counting, &xs));
                let c = counting.counts();
                (wall, Some((c.meets, c.joins)))
            }
            (Algorithm::Pascal, false) => time(|| sort_pascal_with(lattice, &xs, options)),
            (Algorithm::Pascal, true) => {
                let start = Instant::now();
                let (out, c) = sort_pascal_counted_with(lattice, &xs, options);
                let wall = start.elapsed();
                black_box(out);
                (wall, Some((c.meets, c.joins)))
            }
        };
        records.push(BenchRecord {
            algorithm: args.algo,
            n,
            rep,
            wall,
            ops,
            mode,
        });
    }
    Ok(records)
}

fn time<T>(f: impl FnOnce() -> T) -> (Duration, Option<(u64, u64)>) {
    let start = Instant::now();
    let out = f();
    let wall = start.elapsed();
    black_box(out);
    (wall, None)
}

fn median(walls: &[Duration]) -> Duration {
    let mut sorted = walls.to_vec();
    sorted.sort();
    let mid = sorted.len() / 2;
    if sorted.len().is_multiple_of(2) {
        (sorted[mid - 1] + sorted[mid]) / 2
    } else {
        sorted[mid]
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Literal => "literal",
        Mode::Optimized => "optimized",
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Input(format!("writing CSV: {e}"))
}
