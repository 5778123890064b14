//! Finite lattices given by explicit tables, built from a cover relation.
//!
//! Text format, one directive per line, `#` comments and blank lines ignored:
//!
//! ```text
//! elements: a b c d e
//! covers: a<b b<d d<e a<c c<e
//! ```

use std::collections::HashSet;
use std::fmt;

use crate::lattice::{BoundedLattice, Enumerable, Lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => f.write_str("greatest lower bound"),
            BoundKind::Join => f.write_str("least upper bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("element list is empty")]
    Empty,
    #[error("duplicate element `{0}`")]
    DuplicateName(String),
    #[error("cover {lower}<{upper} references undeclared element `{name}`")]
    UnknownElement {
        name: String,
        lower: String,
        upper: String,
    },
    #[error("cover relation has a cycle through `{0}`")]
    Cycle(String),
    #[error("order has no unique {0} element")]
    NoBounds(&'static str),
    #[error("`{a}` and `{b}` have no unique {kind}")]
    NotALattice { a: String, b: String, kind: BoundKind },
    #[error("{kind} of `{a}` and `{b}` is not among the listed elements")]
    NotClosed { a: String, b: String, kind: BoundKind },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A finite bounded lattice over the element indices `0..len()`.
///
/// Meet and join are stored as full `n x n` tables; `leq` is the reflexive
/// transitive closure of the cover relation it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    order: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds the lattice whose order is generated by `covers` (pairs of
    /// `(lower, upper)` names).
    pub fn from_cover_relation<S, T>(names: &[S], covers: &[(T, T)]) -> Result<Self, LatticeError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        if names.is_empty() {
            return Err(LatticeError::Empty);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(LatticeError::DuplicateName(name.clone()));
            }
        }
        let n = names.len();
        let index = |name: &str, lower: &str, upper: &str| {
            names
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| LatticeError::UnknownElement {
                    name: name.to_owned(),
                    lower: lower.to_owned(),
                    upper: upper.to_owned(),
                })
        };

        let mut reach = vec![false; n * n];
        for i in 0..n {
            reach[i * n + i] = true;
        }
        for (lower, upper) in covers {
            let (lower, upper) = (lower.as_ref(), upper.as_ref());
            let lo = index(lower, lower, upper)?;
            let hi = index(upper, lower, upper)?;
            if lo == hi {
                return Err(LatticeError::Cycle(names[lo].clone()));
            }
            reach[lo * n + hi] = true;
        }
        let order = transitive_closure(reach, n);

        for i in 0..n {
            if (0..n).any(|j| j != i && order[i * n + j] && order[j * n + i]) {
                return Err(LatticeError::Cycle(names[i].clone()));
            }
        }

        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| order[b * n + x]))
            .ok_or(LatticeError::NoBounds("bottom"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| order[x * n + t]))
            .ok_or(LatticeError::NoBounds("top"))?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let glb = extremal_bound(&order, n, a, b, BoundKind::Meet).ok_or_else(|| {
                    LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        kind: BoundKind::Meet,
                    }
                })?;
                let lub = extremal_bound(&order, n, a, b, BoundKind::Join).ok_or_else(|| {
                    LatticeError::NotALattice {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        kind: BoundKind::Join,
                    }
                })?;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
            }
        }

        Ok(Self {
            names,
            order,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Copies an enumerable bounded lattice into explicit tables, naming each
    /// element with `name`.
    pub fn tabulate<L, F>(lattice: &L, mut name: F) -> Result<Self, LatticeError>
    where
        L: BoundedLattice + Enumerable,
        F: FnMut(&L::Element) -> String,
    {
        let elements = lattice.elements();
        if elements.is_empty() {
            return Err(LatticeError::Empty);
        }
        let names: Vec<String> = elements.iter().map(&mut name).collect();
        let mut seen = HashSet::new();
        for s in &names {
            if !seen.insert(s.as_str()) {
                return Err(LatticeError::DuplicateName(s.clone()));
            }
        }
        let n = elements.len();
        let find = |e: &L::Element| elements.iter().position(|x| x == e);
        let mut order = vec![false; n * n];
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                order[i * n + j] = lattice.leq(a, b);
                meet[i * n + j] =
                    find(&lattice.meet(a, b)).ok_or_else(|| LatticeError::NotClosed {
                        a: names[i].clone(),
                        b: names[j].clone(),
                        kind: BoundKind::Meet,
                    })?;
                join[i * n + j] =
                    find(&lattice.join(a, b)).ok_or_else(|| LatticeError::NotClosed {
                        a: names[i].clone(),
                        b: names[j].clone(),
                        kind: BoundKind::Join,
                    })?;
            }
        }
        let bottom = find(&lattice.bottom()).ok_or(LatticeError::NoBounds("bottom"))?;
        let top = find(&lattice.top()).ok_or(LatticeError::NoBounds("top"))?;
        Ok(Self {
            names,
            order,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Parses the `elements:` / `covers:` text format.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut elements: Option<Vec<&str>> = None;
        let mut covers: Option<Vec<(&str, &str)>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: String| FormatError::Syntax {
                line: line_no,
                message,
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| syntax(format!("expected `elements:` or `covers:`, found `{line}`")))?;
            match key.trim() {
                "elements" => {
                    if elements.is_some() {
                        return Err(syntax("second `elements:` line".into()));
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if let Some(bad) = names.iter().find(|s| s.contains('<')) {
                        return Err(syntax(format!("element name `{bad}` contains `<`")));
                    }
                    elements = Some(names);
                }
                "covers" => {
                    if elements.is_none() {
                        return Err(syntax("`covers:` before `elements:`".into()));
                    }
                    if covers.is_some() {
                        return Err(syntax("second `covers:` line".into()));
                    }
                    let mut pairs = Vec::new();
                    for token in rest.split_whitespace() {
                        match token.split_once('<') {
                            Some((lo, hi)) if !lo.is_empty() && !hi.is_empty() && !hi.contains('<') => {
                                pairs.push((lo, hi))
                            }
                            _ => return Err(syntax(format!("malformed cover `{token}`"))),
                        }
                    }
                    covers = Some(pairs);
                }
                other => return Err(syntax(format!("unknown directive `{other}`"))),
            }
        }
        let elements = elements.ok_or(FormatError::Syntax {
            line: 0,
            message: "missing `elements:` line".into(),
        })?;
        let covers = covers.unwrap_or_default();
        Ok(Self::from_cover_relation(&elements, &covers)?)
    }

    /// Renders the lattice in the text format, listing only covering pairs.
    pub fn to_text(&self) -> String {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        format!("elements: {}\ncovers: {}\n", self.names.join(" "), covers.join(" "))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.order[a * n + b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Looks up several names at once; panics on an unknown name.
    pub fn elems(&self, names: &[&str]) -> Vec<usize> {
        names
            .iter()
            .map(|s| self.index_of(s).unwrap_or_else(|| panic!("no element `{s}`")))
            .collect()
    }

    pub fn display(&self, elements: &[usize]) -> String {
        let names: Vec<&str> = elements.iter().map(|&e| self.name(e)).collect();
        names.join(" ")
    }
}

/// The pentagon: chain `a < b < d < e` with `c` beside `b` and `d`.
pub fn canonical_n5() -> FiniteLattice {
    FiniteLattice::from_cover_relation(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "d"), ("d", "e"), ("a", "c"), ("c", "e")],
    )
    .expect("N5 is a lattice")
}

/// The diamond: three pairwise incomparable atoms `b, c, d` between `a` and `e`.
pub fn canonical_m3() -> FiniteLattice {
    FiniteLattice::from_cover_relation(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "e"),
            ("c", "e"),
            ("d", "e"),
        ],
    )
    .expect("M3 is a lattice")
}

fn transitive_closure(mut reach: Vec<bool>, n: usize) -> Vec<bool> {
    // Repeated squaring: each pass doubles the path length covered.
    loop {
        let mut next = reach.clone();
        for i in 0..n {
            for k in 0..n {
                if !reach[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if reach[k * n + j] {
                        next[i * n + j] = true;
                    }
                }
            }
        }
        if next == reach {
            return reach;
        }
        reach = next;
    }
}

fn extremal_bound(order: &[bool], n: usize, a: usize, b: usize, kind: BoundKind) -> Option<usize> {
    let le = |x: usize, y: usize| order[x * n + y];
    let is_bound = |z: usize| match kind {
        BoundKind::Meet => le(z, a) && le(z, b),
        BoundKind::Join => le(a, z) && le(b, z),
    };
    let bounds: Vec<usize> = (0..n).filter(|&z| is_bound(z)).collect();
    bounds.iter().copied().find(|&g| {
        bounds.iter().all(|&z| match kind {
            BoundKind::Meet => le(z, g),
            BoundKind::Join => le(g, z),
        })
    })
}

impl Lattice for FiniteLattice {
    type Element = usize;

    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.meet[a * self.len() + b]
    }

    fn join(&self, a: &usize, b: &usize) -> usize {
        self.join[a * self.len() + b]
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.order[a * self.len() + b]
    }
}

impl BoundedLattice for FiniteLattice {
    fn bottom(&self) -> usize {
        self.bottom
    }

    fn top(&self) -> usize {
        self.top
    }
}

impl Enumerable for FiniteLattice {
    fn elements(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(l: &FiniteLattice, f: fn(&FiniteLattice, &usize, &usize) -> usize, a: &str, b: &str) -> String {
        let r = f(l, &l.index_of(a).unwrap(), &l.index_of(b).unwrap());
        l.name(r).to_owned()
    }

    fn meet(l: &FiniteLattice, a: &str, b: &str) -> String {
        op(l, <FiniteLattice as Lattice>::meet, a, b)
    }

    fn join(l: &FiniteLattice, a: &str, b: &str) -> String {
        op(l, <FiniteLattice as Lattice>::join, a, b)
    }

    #[test]
    fn pentagon_from_alternative_covers() {
        let l = FiniteLattice::from_cover_relation(
            &["a", "b", "c", "d", "e"],
            &[("a", "c"), ("c", "d"), ("d", "e"), ("a", "b"), ("b", "e")],
        )
        .unwrap();
        assert_eq!(meet(&l, "b", "d"), "a");
        assert_eq!(join(&l, "b", "c"), "e");
        assert_eq!(join(&l, "c", "d"), "d");
    }

    #[test]
    fn singleton() {
        let l = FiniteLattice::from_cover_relation::<_, &str>(&["x"], &[]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
        assert_eq!(l.meet(&0, &0), 0);
    }

    #[test]
    fn diamond() {
        let l = FiniteLattice::from_cover_relation(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        assert_eq!(meet(&l, "b", "c"), "a");
        assert_eq!(join(&l, "b", "c"), "d");
        assert_eq!(l.name(l.bottom()), "a");
        assert_eq!(l.name(l.top()), "d");
    }

    #[test]
    fn n5_values() {
        let l = canonical_n5();
        assert_eq!(join(&l, "c", "b"), "e");
        assert_eq!(join(&l, "c", "d"), "e");
        assert_eq!(join(&l, "d", "b"), "d");
        assert_eq!(meet(&l, "c", "d"), "a");
        assert_eq!(meet(&l, "e", "b"), "b");
        assert_eq!(join(&l, "a", "b"), "b");
    }

    #[test]
    fn m3_values() {
        let l = canonical_m3();
        assert_eq!(join(&l, "b", "c"), "e");
        assert_eq!(meet(&l, "b", "c"), "a");
        assert_eq!(meet(&l, "e", "d"), "d");
        assert_eq!(join(&l, "a", "d"), "d");
        for (x, y) in [("b", "c"), ("b", "d"), ("c", "d")] {
            assert_eq!(meet(&l, x, y), "a");
            assert_eq!(join(&l, x, y), "e");
        }
    }

    #[test]
    fn cycle_rejected() {
        let err = FiniteLattice::from_cover_relation(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap_err();
        assert_eq!(err, LatticeError::Cycle("a".into()));
        let err = FiniteLattice::from_cover_relation(&["a"], &[("a", "a")]).unwrap_err();
        assert_eq!(err, LatticeError::Cycle("a".into()));
    }

    #[test]
    fn missing_bounds_rejected() {
        let err = FiniteLattice::from_cover_relation::<_, &str>(&["x", "y"], &[]).unwrap_err();
        assert_eq!(err, LatticeError::NoBounds("bottom"));
        let err =
            FiniteLattice::from_cover_relation(&["z", "x", "y"], &[("z", "x"), ("z", "y")]).unwrap_err();
        assert_eq!(err, LatticeError::NoBounds("top"));
    }

    #[test]
    fn non_lattice_reports_first_pair() {
        // Bowtie: c and d are both minimal upper bounds of a and b.
        let err = FiniteLattice::from_cover_relation(
            &["bot", "a", "b", "c", "d", "top"],
            &[
                ("bot", "a"),
                ("bot", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "top"),
                ("d", "top"),
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotALattice {
                a: "a".into(),
                b: "b".into(),
                kind: BoundKind::Join
            }
        );
    }

    #[test]
    fn bad_names_rejected() {
        assert_eq!(
            FiniteLattice::from_cover_relation::<&str, &str>(&[], &[]).unwrap_err(),
            LatticeError::Empty
        );
        assert_eq!(
            FiniteLattice::from_cover_relation::<_, &str>(&["a", "a"], &[]).unwrap_err(),
            LatticeError::DuplicateName("a".into())
        );
        assert!(matches!(
            FiniteLattice::from_cover_relation(&["a"], &[("a", "q")]).unwrap_err(),
            LatticeError::UnknownElement { name, .. } if name == "q"
        ));
    }

    #[test]
    fn parse_text() {
        let text = "# the pentagon\n\nelements: a b c d e\ncovers: a<b b<d d<e a<c c<e\n";
        assert_eq!(FiniteLattice::parse(text).unwrap(), canonical_n5());
        let single = FiniteLattice::parse("elements: x\ncovers:\n").unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = FiniteLattice::parse("elements: a b\ncovers: a-b\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 2,
                message: "malformed cover `a-b`".into()
            }
        );
        let err = FiniteLattice::parse("# c\nnodes: a\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 2, .. }));
        let err = FiniteLattice::parse("elements: a b\ncovers: a<b b<a\n").unwrap_err();
        assert!(matches!(err, FormatError::Lattice(LatticeError::Cycle(_))));
    }

    #[test]
    fn text_round_trip() {
        for l in [canonical_n5(), canonical_m3()] {
            assert_eq!(FiniteLattice::parse(&l.to_text()).unwrap(), l);
        }
    }

    #[test]
    fn tabulate_matches_cover_construction() {
        let p = crate::lattice::PowersetLattice::new(2).unwrap();
        let t = FiniteLattice::tabulate(&p, |m| format!("s{m}")).unwrap();
        let c = FiniteLattice::from_cover_relation(
            &["s0", "s1", "s2", "s3"],
            &[("s0", "s1"), ("s0", "s2"), ("s1", "s3"), ("s2", "s3")],
        )
        .unwrap();
        assert_eq!(t, c);
    }
}
