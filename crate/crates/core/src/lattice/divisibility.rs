use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{BoundedLattice, Lattice};

/// The naturals ordered by divisibility: meet is gcd, join is lcm, the bottom
/// is 1 and the top is 0 (every natural divides 0).
///
/// Elements are arbitrary precision; lcm over prefixes of `1..n` leaves `u64`
/// range near n = 43.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DivisibilityLattice;

impl Lattice for DivisibilityLattice {
    type Element = BigUint;

    fn meet(&self, a: &BigUint, b: &BigUint) -> BigUint {
        gcd(a, b)
    }

    fn join(&self, a: &BigUint, b: &BigUint) -> BigUint {
        lcm(a, b)
    }

    fn leq(&self, a: &BigUint, b: &BigUint) -> bool {
        if b.is_zero() {
            return true;
        }
        if a.is_zero() {
            return false;
        }
        (b % a).is_zero()
    }
}

impl BoundedLattice for DivisibilityLattice {
    fn bottom(&self) -> BigUint {
        BigUint::one()
    }

    fn top(&self) -> BigUint {
        BigUint::zero()
    }
}

/// Greatest common divisor with `gcd(0, a) = a`, so `gcd(0, 0) = 0`.
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() || a == b {
        return a.clone();
    }
    match (a.to_u64(), b.to_u64()) {
        (Some(x), Some(y)) => BigUint::from(gcd_u64(x, y)),
        (None, Some(y)) => BigUint::from(gcd_big_small(a, y)),
        (Some(x), None) => BigUint::from(gcd_big_small(b, x)),
        (None, None) => gcd_euclid(a, b),
    }
}

/// Least common multiple with `lcm(0, a) = 0`.
pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
    if a.is_zero() || b.is_zero() {
        return BigUint::zero();
    }
    if a == b || b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let g = gcd(a, b);
    // Divide the smaller operand so the product stays as small as possible.
    if a.bits() <= b.bits() {
        (a / &g) * b
    } else {
        (b / &g) * a
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd_big_small(big: &BigUint, small: u64) -> u64 {
    let rem = (big % small).to_u64().expect("remainder is below a u64 divisor");
    gcd_u64(small, rem)
}

// Euclid rather than a binary gcd: divisor chains are the common case here,
// where one operand divides the other and a single remainder settles it.
fn gcd_euclid(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut x, mut y) = if a >= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        let r = &x % &y;
        if r.is_zero() {
            return y;
        }
        if let Some(small) = r.to_u64() {
            return BigUint::from(gcd_big_small(&y, small));
        }
        x = y;
        y = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn zero_is_top() {
        let l = DivisibilityLattice;
        assert_eq!(l.meet(&n(0), &n(12)), n(12));
        assert_eq!(l.join(&n(0), &n(12)), n(0));
        assert_eq!(l.meet(&n(0), &n(0)), n(0));
        assert_eq!(l.join(&n(0), &n(0)), n(0));
        assert!(l.leq(&n(7), &n(0)));
        assert!(!l.leq(&n(0), &n(7)));
        assert!(l.leq(&n(0), &n(0)));
    }

    #[test]
    fn one_is_bottom() {
        let l = DivisibilityLattice;
        assert_eq!(l.join(&l.bottom(), &n(9)), n(9));
        assert_eq!(l.meet(&l.top(), &n(9)), n(9));
        assert!(l.leq(&n(1), &n(9)));
    }

    #[test]
    fn small_values() {
        assert_eq!(gcd(&n(12), &n(18)), n(6));
        assert_eq!(lcm(&n(4), &n(6)), n(12));
        assert_eq!(lcm(&n(6), &n(4)), n(12));
        assert_eq!(gcd(&n(17), &n(5)), n(1));
    }

    #[test]
    fn large_prefix_lcm_exceeds_u64() {
        let l = DivisibilityLattice;
        let acc = (1..=50u64).fold(n(1), |acc, i| l.join(&acc, &n(i)));
        assert!(acc.to_u64().is_none());
        for i in 1..=50u64 {
            assert!(l.leq(&n(i), &acc));
        }
        assert!(!l.leq(&n(53), &acc));
    }

    fn big() -> impl Strategy<Value = BigUint> {
        prop_oneof![
            (0u64..2000).prop_map(BigUint::from),
            proptest::collection::vec(any::<u32>(), 1..6).prop_map(BigUint::new),
            (proptest::collection::vec(1u64..200, 1..30)).prop_map(|fs| fs
                .into_iter()
                .fold(BigUint::one(), |acc, f| acc * f)),
        ]
    }

    proptest! {
        #[test]
        fn gcd_matches_reference(a in big(), b in big()) {
            // num-integer's binary gcd is an independent implementation.
            prop_assert_eq!(gcd(&a, &b), a.gcd(&b));
        }

        #[test]
        fn lcm_times_gcd_is_product(a in big(), b in big()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(lcm(&a, &b) * gcd(&a, &b), &a * &b);
        }

        #[test]
        fn leq_is_divisibility(a in 1u64..5000, b in 0u64..5000) {
            let l = DivisibilityLattice;
            prop_assert_eq!(l.leq(&n(a), &n(b)), b % a == 0);
            prop_assert_eq!(l.leq(&n(a), &n(b)), l.join(&n(a), &n(b)) == n(b));
        }
    }
}
