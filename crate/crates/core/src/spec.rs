//! Sorting in a lattice straight from its definition:
//!
//! ```text
//! y_k = meet over all k-subsets I of {1..n} of (join over i in I of x_i)
//! ```
//!
//! Exponential in `n` (every nonempty subset is visited once), so this is the
//! reference the fast sort is checked against, not something to run on long
//! inputs.

use crate::lattice::{big_join, Lattice};

/// Lexicographic enumeration of the `k`-element subsets of `0..n`, each given
/// as a strictly increasing index tuple.
///
/// Use [`KSubsets::advance`] to walk the subsets without allocating; the
/// `Iterator` impl clones each tuple into a fresh `Vec`.
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl KSubsets {
    /// Panics if `k > n`. For `k == 0` the stream is empty.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(k <= n, "cannot choose {k} of {n}");
        Self {
            n,
            current: (0..k).collect(),
            started: false,
            done: k == 0,
        }
    }

    /// Moves to the next subset and returns it.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        // Rightmost position that can still move right.
        let Some(i) = (0..k).rev().find(|&i| self.current[i] < self.n - k + i) else {
            self.done = true;
            return None;
        };
        self.current[i] += 1;
        for j in i + 1..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets::new(n, k)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpecStats {
    /// Index subsets folded, summed over all `k`.
    pub subsets_visited: u64,
}

/// Sorts `xs` in `lattice` by the subset definition.
///
/// Joins within a subset fold in index order; meets across subsets fold in
/// lexicographic subset order. An empty input gives an empty output.
pub fn sort_spec<L: Lattice>(lattice: &L, xs: &[L::Element]) -> Vec<L::Element> {
    sort_spec_with_stats(lattice, xs).0
}

pub fn sort_spec_with_stats<L: Lattice>(
    lattice: &L,
    xs: &[L::Element],
) -> (Vec<L::Element>, SpecStats) {
    let n = xs.len();
    let mut stats = SpecStats::default();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut subsets = KSubsets::new(n, k);
        let mut acc: Option<L::Element> = None;
        while let Some(indices) = subsets.advance() {
            stats.subsets_visited += 1;
            let joined = big_join(lattice, indices.iter().map(|&i| &xs[i])).expect("k >= 1");
            acc = Some(match acc {
                None => joined,
                Some(prev) => lattice.meet(&prev, &joined),
            });
        }
        out.push(acc.expect("at least one k-subset"));
    }
    (out, stats)
}

/// The closed form for three elements:
/// `(x1^x2^x3, (x1vx2)^(x1vx3)^(x2vx3), x1vx2vx3)`.
pub fn sort3<L: Lattice>(
    lattice: &L,
    x1: &L::Element,
    x2: &L::Element,
    x3: &L::Element,
) -> [L::Element; 3] {
    let meet = |a: &L::Element, b: &L::Element| lattice.meet(a, b);
    let join = |a: &L::Element, b: &L::Element| lattice.join(a, b);
    let least = meet(&meet(x1, x2), x3);
    let middle = meet(&meet(&join(x1, x2), &join(x1, x3)), &join(x2, x3));
    let greatest = join(&join(x1, x2), x3);
    [least, middle, greatest]
}
