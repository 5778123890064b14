//! Exhaustive verification of the lattice axioms on enumerable instances.

use std::fmt;

use crate::lattice::{BoundedLattice, Enumerable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Commutativity,
    Associativity,
    Idempotence,
    Absorption,
    BottomIdentity,
    TopIdentity,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Commutativity,
        Law::Associativity,
        Law::Idempotence,
        Law::Absorption,
        Law::BottomIdentity,
        Law::TopIdentity,
    ];
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Commutativity => "commutativity",
            Law::Associativity => "associativity",
            Law::Idempotence => "idempotence",
            Law::Absorption => "absorption",
            Law::BottomIdentity => "bottom identity",
            Law::TopIdentity => "top identity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult<E> {
    pub law: Law,
    /// First violating tuple in enumeration order; `None` when the law holds.
    pub witness: Option<Vec<E>>,
}

impl<E> LawResult<E> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport<E> {
    pub results: Vec<LawResult<E>>,
}

impl<E> LawReport<E> {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(LawResult::holds)
    }

    pub fn get(&self, law: Law) -> &LawResult<E> {
        self.results
            .iter()
            .find(|r| r.law == law)
            .expect("every law is reported")
    }
}

/// Checks every law over all element tuples, in element enumeration order.
/// Failures are reported as data with a witness.
pub fn verify_lattice_laws<L>(lattice: &L) -> LawReport<L::Element>
where
    L: BoundedLattice + Enumerable,
{
    let xs = lattice.elements();
    let meet = |a: &L::Element, b: &L::Element| lattice.meet(a, b);
    let join = |a: &L::Element, b: &L::Element| lattice.join(a, b);
    let bot = lattice.bottom();
    let top = lattice.top();

    let xs = &xs;
    let pairs = || xs.iter().flat_map(|a| xs.iter().map(move |b| (a, b)));
    let triples = || pairs().flat_map(|(a, b)| xs.iter().map(move |c| (a, b, c)));

    let commutativity = pairs()
        .find(|&(a, b)| meet(a, b) != meet(b, a) || join(a, b) != join(b, a))
        .map(|(a, b)| vec![a.clone(), b.clone()]);
    let associativity = triples()
        .find(|&(a, b, c)| {
            meet(&meet(a, b), c) != meet(a, &meet(b, c))
                || join(&join(a, b), c) != join(a, &join(b, c))
        })
        .map(|(a, b, c)| vec![a.clone(), b.clone(), c.clone()]);
    let idempotence = xs
        .iter()
        .find(|&a| meet(a, a) != *a || join(a, a) != *a)
        .map(|a| vec![a.clone()]);
    let absorption = pairs()
        .find(|&(a, b)| meet(a, &join(a, b)) != *a || join(a, &meet(a, b)) != *a)
        .map(|(a, b)| vec![a.clone(), b.clone()]);
    let bottom_identity = xs
        .iter()
        .find(|&a| join(&bot, a) != *a || join(a, &bot) != *a)
        .map(|a| vec![a.clone()]);
    let top_identity = xs
        .iter()
        .find(|&a| meet(&top, a) != *a || meet(a, &top) != *a)
        .map(|a| vec![a.clone()]);

    let results = [
        commutativity,
        associativity,
        idempotence,
        absorption,
        bottom_identity,
        top_identity,
    ]
    .into_iter()
    .zip(Law::ALL)
    .map(|(witness, law)| LawResult { law, witness })
    .collect();
    LawReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{canonical_m3, canonical_n5, FiniteLattice};
    use crate::lattice::{adjoin_bounds, Lattice, PowersetLattice};

    /// Meet table with one asymmetric entry.
    struct Corrupted(FiniteLattice);

    impl Lattice for Corrupted {
        type Element = usize;
        fn meet(&self, a: &usize, b: &usize) -> usize {
            if (*a, *b) == (1, 2) {
                1
            } else {
                self.0.meet(a, b)
            }
        }
        fn join(&self, a: &usize, b: &usize) -> usize {
            self.0.join(a, b)
        }
    }

    impl BoundedLattice for Corrupted {
        fn bottom(&self) -> usize {
            self.0.bottom()
        }
        fn top(&self) -> usize {
            self.0.top()
        }
    }

    impl Enumerable for Corrupted {
        fn elements(&self) -> Vec<usize> {
            self.0.elements()
        }
    }

    fn diamond() -> FiniteLattice {
        FiniteLattice::from_cover_relation(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    #[test]
    fn shipped_lattices_pass() {
        assert!(verify_lattice_laws(&canonical_n5()).all_hold());
        assert!(verify_lattice_laws(&canonical_m3()).all_hold());
        assert!(verify_lattice_laws(&diamond()).all_hold());
        assert!(verify_lattice_laws(&PowersetLattice::new(3).unwrap()).all_hold());
        assert!(verify_lattice_laws(&adjoin_bounds(canonical_n5())).all_hold());
    }

    #[test]
    fn corrupted_meet_fails_commutativity() {
        let report = verify_lattice_laws(&Corrupted(diamond()));
        assert!(!report.all_hold());
        assert_eq!(report.get(Law::Commutativity).witness, Some(vec![1, 2]));
        assert!(report.get(Law::Idempotence).holds());
    }
}
