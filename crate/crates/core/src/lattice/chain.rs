use super::{Adjoin, AdjoinedBounds, Lattice};

/// The integers `i64` under their usual order: meet is `min`, join is `max`.
///
/// Unbounded as a lattice (the extreme integer values are ordinary data);
/// [`TotalOrderLattice`] adjoins synthetic infinities.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegerChain;

impl Lattice for IntegerChain {
    type Element = i64;

    fn meet(&self, a: &i64, b: &i64) -> i64 {
        *a.min(b)
    }

    fn join(&self, a: &i64, b: &i64) -> i64 {
        *a.max(b)
    }

    fn leq(&self, a: &i64, b: &i64) -> bool {
        a <= b
    }
}

/// `i64` extended with `-inf` ([`Adjoin::Bottom`]) and `+inf` ([`Adjoin::Top`]).
pub type TotalOrderLattice = AdjoinedBounds<IntegerChain>;

impl TotalOrderLattice {
    pub fn total_order() -> Self {
        AdjoinedBounds::new(IntegerChain)
    }
}

impl Adjoin<i64> {
    pub fn finite(self) -> Option<i64> {
        match self {
            Adjoin::Inner(v) => Some(v),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BoundedLattice;

    #[test]
    fn markers_are_outside_the_integers() {
        let l = TotalOrderLattice::total_order();
        let min = Adjoin::Inner(i64::MIN);
        let max = Adjoin::Inner(i64::MAX);
        assert!(l.leq(&l.bottom(), &min));
        assert_ne!(l.bottom(), min);
        assert!(l.leq(&max, &l.top()));
        assert_ne!(l.top(), max);
        assert_eq!(l.join(&l.bottom(), &min), min);
        assert_eq!(l.meet(&l.top(), &max), max);
    }

    #[test]
    fn min_max() {
        let l = TotalOrderLattice::total_order();
        assert_eq!(l.meet(&Adjoin::Inner(3), &Adjoin::Inner(-2)), Adjoin::Inner(-2));
        assert_eq!(l.join(&Adjoin::Inner(3), &Adjoin::Inner(-2)), Adjoin::Inner(3));
        assert_eq!(Adjoin::Inner(4).finite(), Some(4));
        assert_eq!(l.top().finite(), None);
    }
}
