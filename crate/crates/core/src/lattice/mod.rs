//! Lattice abstraction and the shipped lattice families.
//!
//! A lattice here is a *value*: the structure lives in an instance (`&L`) and
//! the elements are plain data. This lets instances carry parameters such as
//! the universe size of a powerset or the tables of a finite lattice, and lets
//! wrappers like [`crate::counting::Counting`] intercept every operation.

mod adjoin;
mod chain;
mod divisibility;
mod powerset;

pub use adjoin::{adjoin_bounds, Adjoin, AdjoinedBounds};
pub use chain::{IntegerChain, TotalOrderLattice};
pub use divisibility::{gcd, lcm, DivisibilityLattice};
pub use powerset::{PowersetError, PowersetLattice};

use std::fmt::Debug;

/// A lattice `(X, meet, join)`.
///
/// Implementations must satisfy commutativity, associativity, idempotence and
/// absorption for both operations. Element equality is `Eq` on the element type.
pub trait Lattice {
    type Element: Clone + Eq + Debug;

    /// Greatest lower bound.
    fn meet(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// Least upper bound.
    fn join(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    /// `a <= b`, derived from the meet: `a <= b` iff `meet(a, b) == a`.
    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        self.meet(a, b) == *a
    }
}

/// A lattice with a least element (neutral for join) and a greatest element
/// (neutral for meet).
pub trait BoundedLattice: Lattice {
    fn bottom(&self) -> Self::Element;
    fn top(&self) -> Self::Element;
}

/// A lattice whose elements can be listed in a fixed, deterministic order.
///
/// Exhaustive checks (laws, distributivity) iterate in this order, so witness
/// selection is reproducible.
pub trait Enumerable: Lattice {
    fn elements(&self) -> Vec<Self::Element>;
}

impl<L: Lattice + ?Sized> Lattice for &L {
    type Element = L::Element;

    fn meet(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (**self).meet(a, b)
    }

    fn join(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (**self).join(a, b)
    }

    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        (**self).leq(a, b)
    }
}

impl<L: BoundedLattice + ?Sized> BoundedLattice for &L {
    fn bottom(&self) -> Self::Element {
        (**self).bottom()
    }

    fn top(&self) -> Self::Element {
        (**self).top()
    }
}

impl<L: Enumerable + ?Sized> Enumerable for &L {
    fn elements(&self) -> Vec<Self::Element> {
        (**self).elements()
    }
}

/// Meet of a nonempty sequence, folded left to right. `None` for an empty input.
pub fn big_meet<'a, L, I>(lattice: &L, items: I) -> Option<L::Element>
where
    L: Lattice + ?Sized,
    L::Element: 'a,
    I: IntoIterator<Item = &'a L::Element>,
{
    let mut iter = items.into_iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, x| lattice.meet(&acc, x)))
}

/// Join of a nonempty sequence, folded left to right. `None` for an empty input.
pub fn big_join<'a, L, I>(lattice: &L, items: I) -> Option<L::Element>
where
    L: Lattice + ?Sized,
    L::Element: 'a,
    I: IntoIterator<Item = &'a L::Element>,
{
    let mut iter = items.into_iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, x| lattice.join(&acc, x)))
}
