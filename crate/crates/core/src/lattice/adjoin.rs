use super::{BoundedLattice, Enumerable, Lattice};

/// An element of a lattice with a fresh bottom and top adjoined.
///
/// The derived `Ord` puts `Bottom` first and `Top` last, which matches the
/// lattice order whenever the inner type is a chain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Adjoin<E> {
    Bottom,
    Inner(E),
    Top,
}

/// `L` with a new least and greatest element adjoined.
///
/// On inner elements meet and join are those of `L`. Any existing bounds of
/// `L` become ordinary elements strictly between the fresh ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdjoinedBounds<L> {
    inner: L,
}

impl<L> AdjoinedBounds<L> {
    pub fn new(inner: L) -> Self {
        Self { inner }
    }

    pub fn inner(&self) -> &L {
        &self.inner
    }
}

/// Adjoins a fresh bottom and top to any lattice.
pub fn adjoin_bounds<L: Lattice>(lattice: L) -> AdjoinedBounds<L> {
    AdjoinedBounds::new(lattice)
}

impl<L: Lattice> Lattice for AdjoinedBounds<L> {
    type Element = Adjoin<L::Element>;

    fn meet(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        match (a, b) {
            (Adjoin::Bottom, _) | (_, Adjoin::Bottom) => Adjoin::Bottom,
            (Adjoin::Top, x) | (x, Adjoin::Top) => x.clone(),
            (Adjoin::Inner(x), Adjoin::Inner(y)) => Adjoin::Inner(self.inner.meet(x, y)),
        }
    }

    fn join(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        match (a, b) {
            (Adjoin::Top, _) | (_, Adjoin::Top) => Adjoin::Top,
            (Adjoin::Bottom, x) | (x, Adjoin::Bottom) => x.clone(),
            (Adjoin::Inner(x), Adjoin::Inner(y)) => Adjoin::Inner(self.inner.join(x, y)),
        }
    }

    fn leq(&self, a: &Self::Element, b: &Self::Element) -> bool {
        match (a, b) {
            (Adjoin::Bottom, _) | (_, Adjoin::Top) => true,
            (_, Adjoin::Bottom) | (Adjoin::Top, _) => false,
            (Adjoin::Inner(x), Adjoin::Inner(y)) => self.inner.leq(x, y),
        }
    }
}

impl<L: Lattice> BoundedLattice for AdjoinedBounds<L> {
    fn bottom(&self) -> Self::Element {
        Adjoin::Bottom
    }

    fn top(&self) -> Self::Element {
        Adjoin::Top
    }
}

impl<L: Enumerable> Enumerable for AdjoinedBounds<L> {
    fn elements(&self) -> Vec<Self::Element> {
        std::iter::once(Adjoin::Bottom)
            .chain(self.inner.elements().into_iter().map(Adjoin::Inner))
            .chain(std::iter::once(Adjoin::Top))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{IntegerChain, PowersetLattice};

    #[test]
    fn fresh_bounds_are_neutral() {
        let l = adjoin_bounds(IntegerChain);
        let five = Adjoin::Inner(5);
        assert_eq!(l.join(&l.bottom(), &five), five);
        assert_eq!(l.meet(&l.top(), &five), five);
        assert_eq!(l.meet(&l.bottom(), &l.top()), Adjoin::Bottom);
        assert_eq!(l.join(&l.bottom(), &l.top()), Adjoin::Top);
    }

    #[test]
    fn fresh_bounds_enclose_existing_ones() {
        let p = PowersetLattice::new(2).unwrap();
        let old_top = Adjoin::Inner(p.top());
        let old_bottom = Adjoin::Inner(p.bottom());
        let l = adjoin_bounds(p);
        assert!(l.leq(&old_top, &l.top()));
        assert_ne!(old_top, l.top());
        assert!(!l.leq(&l.top(), &old_top));
        assert!(l.leq(&l.bottom(), &old_bottom));
        assert!(!l.leq(&old_bottom, &l.bottom()));
        assert_eq!(l.elements().len(), 6);
    }

    #[test]
    fn inner_operations_unchanged() {
        let p = PowersetLattice::new(3).unwrap();
        let l = adjoin_bounds(p);
        for a in 0..8u64 {
            for b in 0..8u64 {
                assert_eq!(
                    l.meet(&Adjoin::Inner(a), &Adjoin::Inner(b)),
                    Adjoin::Inner(a & b)
                );
                assert_eq!(
                    l.join(&Adjoin::Inner(a), &Adjoin::Inner(b)),
                    Adjoin::Inner(a | b)
                );
            }
        }
    }
}
