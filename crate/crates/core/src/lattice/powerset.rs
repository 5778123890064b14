use super::{BoundedLattice, Enumerable, Lattice};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PowersetError {
    #[error("universe size {0} exceeds 64")]
    UniverseTooLarge(u32),
    #[error("mask {mask:#x} has bits outside a universe of size {universe}")]
    MaskOutOfRange { mask: u64, universe: u32 },
}

/// Subsets of `{0, .., u-1}` as bit masks, ordered by inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowersetLattice {
    universe: u32,
}

impl PowersetLattice {
    pub fn new(universe: u32) -> Result<Self, PowersetError> {
        if universe > 64 {
            return Err(PowersetError::UniverseTooLarge(universe));
        }
        Ok(Self { universe })
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn full_mask(&self) -> u64 {
        if self.universe == 64 {
            u64::MAX
        } else {
            (1u64 << self.universe) - 1
        }
    }

    pub fn check(&self, mask: u64) -> Result<u64, PowersetError> {
        if mask & !self.full_mask() != 0 {
            return Err(PowersetError::MaskOutOfRange {
                mask,
                universe: self.universe,
            });
        }
        Ok(mask)
    }
}

impl Lattice for PowersetLattice {
    type Element = u64;

    fn meet(&self, a: &u64, b: &u64) -> u64 {
        a & b
    }

    fn join(&self, a: &u64, b: &u64) -> u64 {
        a | b
    }

    fn leq(&self, a: &u64, b: &u64) -> bool {
        a & !b == 0
    }
}

impl BoundedLattice for PowersetLattice {
    fn bottom(&self) -> u64 {
        0
    }

    fn top(&self) -> u64 {
        self.full_mask()
    }
}

impl Enumerable for PowersetLattice {
    /// All `2^u` masks in increasing numeric order.
    ///
    /// Panics for universes above 20; enumeration is only meant for small instances.
    fn elements(&self) -> Vec<u64> {
        assert!(self.universe <= 20, "refusing to enumerate 2^{} masks", self.universe);
        (0..=self.full_mask()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let p = PowersetLattice::new(4).unwrap();
        assert_eq!(p.top(), 0b1111);
        assert_eq!(p.bottom(), 0);
        assert_eq!(PowersetLattice::new(64).unwrap().top(), u64::MAX);
        assert_eq!(PowersetLattice::new(0).unwrap().top(), 0);
        assert_eq!(PowersetLattice::new(65), Err(PowersetError::UniverseTooLarge(65)));
    }

    #[test]
    fn mask_range() {
        let p = PowersetLattice::new(3).unwrap();
        assert_eq!(p.check(0b101), Ok(0b101));
        assert!(p.check(0b1000).is_err());
    }

    #[test]
    fn inclusion_order() {
        let p = PowersetLattice::new(8).unwrap();
        assert!(p.leq(&0b0010, &0b0110));
        assert!(!p.leq(&0b0011, &0b0110));
        assert_eq!(p.elements().len(), 256);
    }
}
