pub mod bench;
pub mod check;
pub mod compare;
pub mod sort;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Subset definition (exponential).
    Spec,
    /// Insertion sort by the Pascal recurrence (quadratic).
    Pascal,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Spec => "spec",
            Algorithm::Pascal => "pascal",
        }
    }
}
