//! Operation counting for instrumented runs.

use std::cell::Cell;

use crate::lattice::{BoundedLattice, Lattice};

/// Tallies of lattice operations performed during one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub meets: u64,
    pub joins: u64,
    /// `leq` tests. Kept apart from meets so the sort's own meet/join count
    /// is not inflated by order checks.
    pub comparisons: u64,
}

impl OpCounter {
    /// Meets plus joins.
    pub fn total(&self) -> u64 {
        self.meets + self.joins
    }
}

/// Wraps a lattice and counts every `meet`, `join` and `leq` routed through it.
///
/// The counter is a `Cell`, so a `Counting` is deliberately not `Sync`: each
/// counted run owns its own.
#[derive(Debug)]
pub struct Counting<L> {
    inner: L,
    meets: Cell<u64>,
    joins: Cell<u64>,
    comparisons: Cell<u64>,
}

impl<L> Counting<L> {
    pub fn new(inner: L) -> Self {
        Self {
            inner,
            meets: Cell::new(0),
            joins: Cell::new(0),
            comparisons: Cell::new(0),
        }
    }

    pub fn counts(&self) -> OpCounter {
        OpCounter {
            meets: self.meets.get(),
            joins: self.joins.get(),
            comparisons: self.comparisons.get(),
        }
    }

    pub fn reset(&self) {
        self.meets.set(0);
        self.joins.set(0);
        self.comparisons.set(0);
    }

    pub fn into_inner(self) -> L {
        self.inner
    }
}

fn bump(c: &Cell<u64>) {
    c.set(c.get() + 1);
}

impl<L: Lattice> Lattice for Counting<L> {
    type Element = L::Element;

    fn meet(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        bump(&self.meets);
        self.inner.meet(a, b)
    }

    fn join(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        bump(&self.joins);
        self.inner.join(a, b)
    }

    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        bump(&self.comparisons);
        self.inner.leq(a, b)
    }
}

impl<L: BoundedLattice> BoundedLattice for Counting<L> {
    fn bottom(&self) -> Self::Element {
        self.inner.bottom()
    }

    fn top(&self) -> Self::Element {
        self.inner.top()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::IntegerChain;

    #[test]
    fn counts_each_kind() {
        let c = Counting::new(IntegerChain);
        c.meet(&1, &2);
        c.join(&1, &2);
        c.join(&3, &2);
        assert!(c.leq(&1, &2));
        assert_eq!(
            c.counts(),
            OpCounter {
                meets: 1,
                joins: 2,
                comparisons: 1
            }
        );
        assert_eq!(c.counts().total(), 3);
        c.reset();
        assert_eq!(c.counts(), OpCounter::default());
    }
}
