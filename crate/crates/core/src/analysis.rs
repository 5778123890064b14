//! Distributivity of finite lattices, decided two independent ways:
//!
//! * directly, by testing `a ^ (b v c) = (a ^ b) v (a ^ c)` on every triple;
//! * through the sorting recurrence, by comparing the insertion sort with the
//!   subset definition on every sequence of length 3 (and optionally longer).
//!
//! On a distributive lattice the two sorts always agree; on a non-distributive
//! one some sequence of length 3 already tells them apart. The two verdicts
//! must therefore coincide.

use std::fmt;

use crate::lattice::{BoundedLattice, Enumerable, Lattice};
use crate::pascal::sort_pascal;
use crate::spec::sort_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Distributive,
    NotDistributive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Distributive => f.write_str("distributive"),
            Verdict::NotDistributive => f.write_str("not distributive"),
        }
    }
}

/// A sequence on which the insertion sort and the subset definition disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness<E> {
    pub sequence: Vec<E>,
    pub pascal: Vec<E>,
    pub spec: Vec<E>,
}

impl<E: PartialEq> IdentityWitness<E> {
    /// First (zero-based) position where the two outputs differ.
    pub fn first_difference(&self) -> Option<usize> {
        self.pascal.iter().zip(&self.spec).position(|(p, s)| p != s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityReport<E> {
    pub verdict: Verdict,
    /// `(a, b, c)` with `a ^ (b v c) != (a ^ b) v (a ^ c)`.
    pub law_witness: Option<(E, E, E)>,
    pub identity_witness: Option<IdentityWitness<E>>,
}

/// Checks the distributive law over all ordered triples in element order and
/// returns the first violation.
pub fn is_distributive_direct<L>(lattice: &L) -> DistributivityReport<L::Element>
where
    L: Lattice + Enumerable,
{
    let elements = lattice.elements();
    let xs = &elements;
    let law_witness = xs
        .iter()
        .flat_map(|a| xs.iter().flat_map(move |b| xs.iter().map(move |c| (a, b, c))))
        .find(|&(a, b, c)| !distributes(lattice, a, b, c))
        .map(|(a, b, c)| (a.clone(), b.clone(), c.clone()));
    DistributivityReport {
        verdict: if law_witness.is_some() {
            Verdict::NotDistributive
        } else {
            Verdict::Distributive
        },
        law_witness,
        identity_witness: None,
    }
}

/// `a ^ (b v c) == (a ^ b) v (a ^ c)`.
pub fn distributes<L: Lattice + ?Sized>(
    lattice: &L,
    a: &L::Element,
    b: &L::Element,
    c: &L::Element,
) -> bool {
    let lhs = lattice.meet(a, &lattice.join(b, c));
    let rhs = lattice.join(&lattice.meet(a, b), &lattice.meet(a, c));
    lhs == rhs
}

/// Compares both sorts on every sequence of length `3..=max_len`, shortest
/// first and lexicographic in element order within a length. Returns the
/// first mismatch.
///
/// Panics if `max_len < 3`.
pub fn pascal_identity_holds<L>(lattice: &L, max_len: usize) -> DistributivityReport<L::Element>
where
    L: BoundedLattice + Enumerable,
{
    assert!(max_len >= 3, "sequences of length 3 are required, got max_len = {max_len}");
    let xs = lattice.elements();
    let mut identity_witness = None;
    'lengths: for len in 3..=max_len {
        for sequence in Sequences::new(&xs, len) {
            let pascal = sort_pascal(lattice, &sequence);
            let spec = sort_spec(lattice, &sequence);
            if pascal != spec {
                identity_witness = Some(IdentityWitness {
                    sequence,
                    pascal,
                    spec,
                });
                break 'lengths;
            }
        }
    }
    DistributivityReport {
        verdict: if identity_witness.is_some() {
            Verdict::NotDistributive
        } else {
            Verdict::Distributive
        },
        law_witness: None,
        identity_witness,
    }
}

/// Both checks side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedReport<E> {
    pub direct: DistributivityReport<E>,
    pub identity: DistributivityReport<E>,
}

impl<E> CombinedReport<E> {
    pub fn agree(&self) -> bool {
        self.direct.verdict == self.identity.verdict
    }
}

pub fn check_distributivity<L>(lattice: &L) -> CombinedReport<L::Element>
where
    L: BoundedLattice + Enumerable,
{
    CombinedReport {
        direct: is_distributive_direct(lattice),
        identity: pascal_identity_holds(lattice, 3),
    }
}

/// All sequences of a fixed length over `alphabet`, lexicographic in
/// alphabet order (an odometer).
pub struct Sequences<'a, E> {
    alphabet: &'a [E],
    digits: Vec<usize>,
    done: bool,
}

impl<'a, E: Clone> Sequences<'a, E> {
    pub fn new(alphabet: &'a [E], len: usize) -> Self {
        Self {
            alphabet,
            digits: vec![0; len],
            done: alphabet.is_empty() && len > 0,
        }
    }
}

impl<E: Clone> Iterator for Sequences<'_, E> {
    type Item = Vec<E>;

    fn next(&mut self) -> Option<Vec<E>> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&d| self.alphabet[d].clone()).collect();
        let base = self.alphabet.len();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}
