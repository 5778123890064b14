//! Insertion sort for bounded distributive lattices.
//!
//! Row `m` holds the sorted prefix `x_1..x_m`; the next row follows from
//!
//! ```text
//! new[k] = row(k) ^ (row(k-1) v x_next)        for k = 1..=m+1
//! ```
//!
//! with `row(0) = bottom` and `row(m+1) = top`. Each step costs `m+1` joins
//! and `m+1` meets, so a full sort of `n` elements costs `n(n+1) - 2`
//! operations. The recurrence only reproduces the subset definition when the
//! lattice is distributive; on other lattices it still terminates but the
//! output may differ (see [`crate::analysis`]).

use std::borrow::Cow;

use crate::counting::{Counting, OpCounter};
use crate::lattice::BoundedLattice;

/// How sentinel operations are treated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum CountMode {
    /// `bottom v x` and `top ^ y` are evaluated through the lattice like any
    /// other operation. A step into row `n` costs exactly `n` joins and `n` meets.
    #[default]
    Literal,
    /// `bottom v x = x` and `top ^ y = y` are applied as rewrites, saving two
    /// operations per step (`n(n-1)` in total).
    Optimized,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SortOptions {
    pub mode: CountMode,
    /// Append elements that dominate the current row maximum without running
    /// the recurrence. Costs one `leq` per insertion.
    pub dominating_fast_path: bool,
}

impl SortOptions {
    pub fn literal() -> Self {
        Self::default()
    }

    pub fn optimized() -> Self {
        Self {
            mode: CountMode::Optimized,
            dominating_fast_path: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("new element does not dominate the largest element of the row")]
pub struct PreconditionViolated;

/// The sorted prefix of length `m`, with virtual sentinels at positions `0`
/// (bottom) and `m + 1` (top).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalRow<E> {
    cells: Vec<E>,
}

impl<E: Clone> Default for PascalRow<E> {
    fn default() -> Self {
        Self::new()
    }
}

impl<E: Clone> PascalRow<E> {
    pub fn new() -> Self {
        Self { cells: Vec::new() }
    }

    pub fn singleton(x: E) -> Self {
        Self { cells: vec![x] }
    }

    /// Wraps cells as a row. The cells must be the sorted form of some
    /// sequence for the recurrence to stay meaningful; this is not checked.
    pub fn from_cells(cells: Vec<E>) -> Self {
        Self { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[E] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<E> {
        self.cells
    }

    /// Sentinel-aware access: `0` is bottom, `len() + 1` is top, `1..=len()`
    /// are the cells (one-based).
    pub fn at<'a, L>(&'a self, lattice: &L, k: usize) -> Cow<'a, E>
    where
        L: BoundedLattice<Element = E>,
    {
        let m = self.cells.len();
        match k {
            0 => Cow::Owned(lattice.bottom()),
            k if k == m + 1 => Cow::Owned(lattice.top()),
            k if k <= m => Cow::Borrowed(&self.cells[k - 1]),
            _ => panic!("row index {k} outside 0..={}", m + 1),
        }
    }
}

/// One step of the recurrence in literal mode.
pub fn insert_step<L: BoundedLattice>(
    lattice: &L,
    row: &PascalRow<L::Element>,
    next: &L::Element,
) -> PascalRow<L::Element> {
    insert_step_with(lattice, row, next, CountMode::Literal)
}

/// One step of the recurrence. The new row is built in fresh storage, reading
/// only the old row.
pub fn insert_step_with<L: BoundedLattice>(
    lattice: &L,
    row: &PascalRow<L::Element>,
    next: &L::Element,
    mode: CountMode,
) -> PascalRow<L::Element> {
    let m = row.len();
    let n = m + 1;
    let mut cells = Vec::with_capacity(n);
    match mode {
        CountMode::Literal => {
            let bottom = lattice.bottom();
            let top = lattice.top();
            let at = |k: usize| -> &L::Element {
                if k == 0 {
                    &bottom
                } else if k == n {
                    &top
                } else {
                    &row.cells[k - 1]
                }
            };
            for k in 1..=n {
                let lower = lattice.join(at(k - 1), next);
                cells.push(lattice.meet(at(k), &lower));
            }
        }
        CountMode::Optimized => {
            for k in 1..=n {
                let lower = if k == 1 {
                    Cow::Borrowed(next)
                } else {
                    Cow::Owned(lattice.join(&row.cells[k - 2], next))
                };
                cells.push(if k == n {
                    lower.into_owned()
                } else {
                    lattice.meet(&row.cells[k - 1], &lower)
                });
            }
        }
    }
    PascalRow { cells }
}

/// Appends `next` when it dominates the row maximum. No meet or join is
/// performed; the check itself is one `leq`.
pub fn insert_dominating<L: BoundedLattice>(
    lattice: &L,
    row: &PascalRow<L::Element>,
    next: &L::Element,
) -> Result<PascalRow<L::Element>, PreconditionViolated> {
    if let Some(last) = row.cells.last() {
        if !lattice.leq(last, next) {
            return Err(PreconditionViolated);
        }
    }
    let mut cells = Vec::with_capacity(row.len() + 1);
    cells.extend_from_slice(&row.cells);
    cells.push(next.clone());
    Ok(PascalRow { cells })
}

/// Literal-mode insertion sort without the fast path.
pub fn sort_pascal<L: BoundedLattice>(lattice: &L, xs: &[L::Element]) -> Vec<L::Element> {
    sort_pascal_with(lattice, xs, SortOptions::literal())
}

/// Starts from the singleton row `(x_1)` and inserts `x_2, .., x_n` in turn.
pub fn sort_pascal_with<L: BoundedLattice>(
    lattice: &L,
    xs: &[L::Element],
    options: SortOptions,
) -> Vec<L::Element> {
    let Some((first, rest)) = xs.split_first() else {
        return Vec::new();
    };
    let mut row = PascalRow::singleton(first.clone());
    for x in rest {
        if options.dominating_fast_path {
            let last = row.cells.last().expect("row is never empty here");
            if lattice.leq(last, x) {
                row.cells.push(x.clone());
                continue;
            }
        }
        row = insert_step_with(lattice, &row, x, options.mode);
    }
    row.into_cells()
}

/// Literal-mode sort with operation counts.
pub fn sort_pascal_counted<L: BoundedLattice>(
    lattice: &L,
    xs: &[L::Element],
) -> (Vec<L::Element>, OpCounter) {
    sort_pascal_counted_with(lattice, xs, SortOptions::literal())
}

pub fn sort_pascal_counted_with<L: BoundedLattice>(
    lattice: &L,
    xs: &[L::Element],
    options: SortOptions,
) -> (Vec<L::Element>, OpCounter) {
    let counting = Counting::new(lattice);
    let out = sort_pascal_with(&counting, xs, options);
    (out, counting.counts())
}
