#![allow(dead_code)]

use latsort_core::lattice::{BoundedLattice, Enumerable, Lattice, PowersetLattice};
use latsort_core::FiniteLattice;

pub fn chain(len: usize) -> FiniteLattice {
    let names: Vec<String> = (0..len).map(|i| format!("c{i}")).collect();
    let covers: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    FiniteLattice::from_cover_relation(&names, &covers).unwrap()
}

pub fn boolean_cube() -> FiniteLattice {
    let p = PowersetLattice::new(3).unwrap();
    FiniteLattice::tabulate(&p, |m| format!("s{m}")).unwrap()
}

/// Divisors of `n`, covers by prime steps, built without any gcd/lcm code.
pub fn divisor_lattice(n: u64) -> FiniteLattice {
    let ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let names: Vec<String> = ds.iter().map(u64::to_string).collect();
    let mut covers = Vec::new();
    for &a in &ds {
        for &b in &ds {
            let prime_step = b > a && b % a == 0 && {
                let q = b / a;
                (2..q).all(|f| q % f != 0)
            };
            if prime_step {
                covers.push((a.to_string(), b.to_string()));
            }
        }
    }
    FiniteLattice::from_cover_relation(&names, &covers).unwrap()
}

/// Componentwise product of two lattices.
pub struct Product<A, B>(pub A, pub B);

impl<A: Lattice, B: Lattice> Lattice for Product<A, B> {
    type Element = (A::Element, B::Element);

    fn meet(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        (self.0.meet(&x.0, &y.0), self.1.meet(&x.1, &y.1))
    }

    fn join(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        (self.0.join(&x.0, &y.0), self.1.join(&x.1, &y.1))
    }
}

impl<A: BoundedLattice, B: BoundedLattice> BoundedLattice for Product<A, B> {
    fn bottom(&self) -> Self::Element {
        (self.0.bottom(), self.1.bottom())
    }

    fn top(&self) -> Self::Element {
        (self.0.top(), self.1.top())
    }
}

impl<A: Enumerable, B: Enumerable> Enumerable for Product<A, B> {
    fn elements(&self) -> Vec<Self::Element> {
        let bs = self.1.elements();
        self.0
            .elements()
            .into_iter()
            .flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    }
}
