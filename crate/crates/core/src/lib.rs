//! Sorting sequences in bounded lattices.
//!
//! * [`spec`] sorts by the subset definition (exponential, the reference).
//! * [`pascal`] sorts by insertion with the Pascal-style recurrence
//!   (quadratic, correct on distributive lattices).
//! * [`analysis`] decides distributivity of finite lattices, directly and by
//!   comparing the two sorts.

pub mod analysis;
pub mod counting;
pub mod finite;
pub mod lattice;
pub mod laws;
pub mod pascal;
pub mod spec;

pub use analysis::{
    check_distributivity, is_distributive_direct, pascal_identity_holds, DistributivityReport,
    IdentityWitness, Verdict,
};
pub use counting::{Counting, OpCounter};
pub use finite::{canonical_m3, canonical_n5, FiniteLattice, FormatError, LatticeError};
pub use lattice::{BoundedLattice, Enumerable, Lattice};
pub use laws::{verify_lattice_laws, Law, LawReport};
pub use pascal::{
    insert_dominating, insert_step, insert_step_with, sort_pascal, sort_pascal_counted,
    sort_pascal_counted_with, sort_pascal_with, CountMode, PascalRow, PreconditionViolated,
    SortOptions,
};
pub use spec::{k_subsets, sort3, sort_spec, sort_spec_with_stats, KSubsets, SpecStats};
