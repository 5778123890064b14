//! Lattice selection and per-lattice token syntax.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use latsort_core::finite::FormatError;
use latsort_core::lattice::{Adjoin, DivisibilityLattice, PowersetLattice, TotalOrderLattice};
use latsort_core::{BoundedLattice, FiniteLattice};
use num_bigint::BigUint;
use rand::Rng;

use crate::error::{CliError, Result};

/// `div`, `order`, `powerset:<u>` or `finite:<file>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Div,
    Order,
    Powerset(u32),
    Finite(PathBuf),
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "div" => Ok(Selector::Div),
            "order" => Ok(Selector::Order),
            _ => {
                if let Some(u) = s.strip_prefix("powerset:") {
                    let u: u32 = u.parse().map_err(|_| format!("bad universe size `{u}`"))?;
                    if u > 64 {
                        return Err(format!("universe size {u} exceeds 64"));
                    }
                    Ok(Selector::Powerset(u))
                } else if let Some(path) = s.strip_prefix("finite:") {
                    if path.is_empty() {
                        return Err("`finite:` needs a file path".into());
                    }
                    Ok(Selector::Finite(PathBuf::from(path)))
                } else {
                    Err(format!(
                        "unknown lattice `{s}` (expected div, order, powerset:<u> or finite:<file>)"
                    ))
                }
            }
        }
    }
}

impl std::fmt::Display for Selector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Selector::Div => f.write_str("div"),
            Selector::Order => f.write_str("order"),
            Selector::Powerset(u) => write!(f, "powerset:{u}"),
            Selector::Finite(p) => write!(f, "finite:{}", p.display()),
        }
    }
}

pub enum Loaded {
    Div(DivisibilityLattice),
    Order(TotalOrderLattice),
    Powerset(PowersetLattice),
    Finite(FiniteLattice),
}

impl Selector {
    pub fn load(&self) -> Result<Loaded> {
        Ok(match self {
            Selector::Div => Loaded::Div(DivisibilityLattice),
            Selector::Order => Loaded::Order(TotalOrderLattice::total_order()),
            Selector::Powerset(u) => Loaded::Powerset(
                PowersetLattice::new(*u).map_err(|e| CliError::Input(e.to_string()))?,
            ),
            Selector::Finite(path) => Loaded::Finite(load_finite(path)?),
        })
    }
}

pub fn load_finite(path: &Path) -> Result<FiniteLattice> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    FiniteLattice::parse(&text).map_err(|e| match e {
        FormatError::Syntax { .. } => CliError::Input(format!("{}: {e}", path.display())),
        FormatError::Lattice(e) => CliError::InvalidLattice(format!("{}: {e}", path.display())),
    })
}

/// Runs `$body` with `$l` bound to the concrete lattice inside a [`Loaded`].
#[macro_export]
macro_rules! with_lattice {
    ($loaded:expr, $l:ident => $body:expr) => {
        match $loaded {
            $crate::lattices::Loaded::Div($l) => $body,
            $crate::lattices::Loaded::Order($l) => $body,
            $crate::lattices::Loaded::Powerset($l) => $body,
            $crate::lattices::Loaded::Finite($l) => $body,
        }
    };
}

/// What the command line needs from a lattice on top of its operations.
pub trait CliLattice: BoundedLattice {
    fn parse_token(&self, token: &str) -> std::result::Result<Self::Element, String>;

    fn format_token(&self, element: &Self::Element) -> String;

    /// One pseudo-random element for comparison runs.
    fn random_element<R: Rng>(&self, rng: &mut R) -> Self::Element;

    /// The benchmark workload `(1, 2, .., n)`.
    fn workload(&self, n: usize) -> std::result::Result<Vec<Self::Element>, String>;

    /// Every element, when the lattice is small enough to enumerate.
    fn all_elements(&self) -> Option<Vec<Self::Element>> {
        None
    }

    fn format_seq(&self, xs: &[Self::Element]) -> String {
        xs.iter().map(|x| self.format_token(x)).collect::<Vec<_>>().join(" ")
    }

    fn parse_seq(&self, tokens: &[String]) -> Result<Vec<Self::Element>> {
        tokens
            .iter()
            .map(|t| {
                self.parse_token(t)
                    .map_err(|e| CliError::Input(format!("bad token `{t}`: {e}")))
            })
            .collect()
    }
}

impl CliLattice for DivisibilityLattice {
    fn parse_token(&self, token: &str) -> std::result::Result<BigUint, String> {
        if !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err("expected a decimal natural number".into());
        }
        token.parse().map_err(|e| format!("{e}"))
    }

    fn format_token(&self, element: &BigUint) -> String {
        element.to_string()
    }

    /// Uniform on `[1, 1000]`.
    fn random_element<R: Rng>(&self, rng: &mut R) -> BigUint {
        BigUint::from(rng.random_range(1u32..=1000))
    }

    fn workload(&self, n: usize) -> std::result::Result<Vec<BigUint>, String> {
        Ok((1..=n as u64).map(BigUint::from).collect())
    }
}

impl CliLattice for TotalOrderLattice {
    fn parse_token(&self, token: &str) -> std::result::Result<Adjoin<i64>, String> {
        match token {
            "-inf" => Ok(Adjoin::Bottom),
            "+inf" | "inf" => Ok(Adjoin::Top),
            _ => token.parse().map(Adjoin::Inner).map_err(|e| format!("{e}")),
        }
    }

    fn format_token(&self, element: &Adjoin<i64>) -> String {
        match element {
            Adjoin::Bottom => "-inf".into(),
            Adjoin::Top => "+inf".into(),
            Adjoin::Inner(v) => v.to_string(),
        }
    }

    /// Uniform on `[-1000, 1000]`.
    fn random_element<R: Rng>(&self, rng: &mut R) -> Adjoin<i64> {
        Adjoin::Inner(rng.random_range(-1000i64..=1000))
    }

    fn workload(&self, n: usize) -> std::result::Result<Vec<Adjoin<i64>>, String> {
        Ok((1..=n as i64).map(Adjoin::Inner).collect())
    }
}

impl CliLattice for PowersetLattice {
    fn parse_token(&self, token: &str) -> std::result::Result<u64, String> {
        let digits = token
            .strip_prefix("0x")
            .or_else(|| token.strip_prefix("0X"))
            .unwrap_or(token);
        let mask = u64::from_str_radix(digits, 16).map_err(|e| format!("{e}"))?;
        self.check(mask).map_err(|e| e.to_string())
    }

    fn format_token(&self, element: &u64) -> String {
        format!("{element:#x}")
    }

    fn random_element<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.random::<u64>() & self.full_mask()
    }

    fn workload(&self, n: usize) -> std::result::Result<Vec<u64>, String> {
        (1..=n as u64)
            .map(|m| self.check(m).map_err(|e| e.to_string()))
            .collect()
    }

    fn all_elements(&self) -> Option<Vec<u64>> {
        (self.universe() <= 16).then(|| (0..=self.full_mask()).collect())
    }
}

impl CliLattice for FiniteLattice {
    fn parse_token(&self, token: &str) -> std::result::Result<usize, String> {
        self.index_of(token)
            .ok_or_else(|| "not an element of the lattice".to_string())
    }

    fn format_token(&self, element: &usize) -> String {
        self.name(*element).to_owned()
    }

    fn random_element<R: Rng>(&self, rng: &mut R) -> usize {
        rng.random_range(0..self.len())
    }

    /// Elements cycled in declaration order, the finite analogue of `1..n`.
    fn workload(&self, n: usize) -> std::result::Result<Vec<usize>, String> {
        Ok((0..n).map(|i| i % self.len()).collect())
    }

    fn all_elements(&self) -> Option<Vec<usize>> {
        Some((0..self.len()).collect())
    }
}
