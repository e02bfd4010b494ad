//! Monomials `x^a = x_1^{a_1} ... x_d^{a_d}` stored as exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial in `d` variables, identified with its exponent vector.
///
/// Variables are indexed from 0 in code; `x_1` of the usual notation is
/// index 0. The derived ordering is lexicographic on exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The constant monomial 1.
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    /// `x_var^degree`.
    pub fn pure_power(dim: usize, var: usize, degree: u32) -> Self {
        let mut e = vec![0; dim];
        e[var] = degree;
        Monomial(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `Some((var, k))` if this is `x_var^k` with `k > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, a));
            }
        }
        found
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Coordinatewise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(divides(&self.0, &other.0))
    }

    /// `self * x_raise / x_lower`, or `None` when `x_lower` does not divide.
    pub fn exchange(&self, raise: usize, lower: usize) -> Option<Monomial> {
        if self.0[lower] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[lower] -= 1;
        e[raise] += 1;
        Some(Monomial(e))
    }

    /// Exponents sorted into weakly increasing order: the canonical
    /// representative of the orbit under permutation of variables.
    pub fn sorted(&self) -> Monomial {
        let mut e = self.0.clone();
        e.sort_unstable();
        Monomial(e)
    }

    /// All distinct monomials obtained by permuting the variables.
    pub fn orbit(&self) -> Vec<Monomial> {
        let mut e = self.0.clone();
        e.sort_unstable();
        let mut out = vec![Monomial(e.clone())];
        while next_permutation(&mut e) {
            out.push(Monomial(e.clone()));
        }
        out
    }

    /// Renders as `x1^3*x2` or, with `aliases` and `d <= 3`, as `x^3y`.
    /// The constant monomial renders as `1`.
    pub fn pretty(&self, aliases: bool) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let short = aliases && self.dim() <= 3;
        let mut parts = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let var = if short {
                ["x", "y", "z"][i].to_string()
            } else {
                format!("x{}", i + 1)
            };
            parts.push(if a == 1 { var } else { format!("{var}^{a}") });
        }
        parts.join(if short { "" } else { "*" })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(false))
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(e: Vec<u32>) -> Self {
        Monomial(e)
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Rearranges `v` into the next lexicographically larger permutation.
/// Returns false (leaving `v` sorted ascending) once the last one is passed.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
