//! Monomial ideals held by their minimal generating set, with the strongly
//! stable (Borel) and symmetric machinery.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial};

/// A monomial ideal in `K[x_1, ..., x_d]`, stored as its unique minimal
/// generating set `G(I)` in lexicographic order.
///
/// Construction always minimalizes, so two values are equal exactly when
/// they describe the same ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealData", into = "IdealData")]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

/// Wire form `{"dim": d, "gens": [[...], ...]}`, generators listed greatest
/// first in lex order (`x1 > x2 > ...`). They need not be minimal or sorted
/// on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealData {
    pub dim: usize,
    pub gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealData> for MonomialIdeal {
    type Error = Error;

    fn try_from(data: IdealData) -> Result<Self> {
        MonomialIdeal::new(data.dim, data.gens.into_iter().map(Monomial::new))
    }
}

impl From<MonomialIdeal> for IdealData {
    fn from(i: MonomialIdeal) -> Self {
        IdealData {
            dim: i.dim,
            gens: i
                .gens
                .into_iter()
                .rev()
                .map(Monomial::into_exponents)
                .collect(),
        }
    }
}

pub(crate) fn check_dims<'a>(dim: usize, ms: impl IntoIterator<Item = &'a Monomial>) -> Result<()> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    match ms.into_iter().find(|m| m.dim() != dim) {
        Some(bad) => Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        }),
        None => Ok(()),
    }
}

/// The divisibility-minimal elements of `set`, deduplicated and sorted
/// lexicographically. All monomials must share one dimension.
pub fn minimalize(set: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = set.into_iter().collect();
    // a divisor always has smaller degree, or is equal
    all.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in all {
        if !kept
            .iter()
            .any(|g| monomial::divides(g.exponents(), m.exponents()))
        {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// `sym(A)`: every permutation of every element, deduplicated and sorted.
pub fn symmetrize<'a>(set: impl IntoIterator<Item = &'a Monomial>) -> Vec<Monomial> {
    set.into_iter()
        .flat_map(Monomial::orbit)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Applies the exchanges `(raise, lower)` in order, each multiplying by
/// `x_raise / x_lower` with `raise < lower`.
pub fn apply_borel_move(m: &Monomial, moves: &[(usize, usize)]) -> Result<Monomial> {
    let mut cur = m.clone();
    for (step, &(raise, lower)) in moves.iter().enumerate() {
        if raise >= lower || lower >= cur.dim() {
            return Err(Error::InvalidMove {
                step,
                reason: format!(
                    "exchange x{}/x{} needs 1 <= i < j <= {}",
                    raise + 1,
                    lower + 1,
                    cur.dim()
                ),
            });
        }
        cur = cur
            .exchange(raise, lower)
            .ok_or_else(|| Error::InvalidMove {
                step,
                reason: format!("x{} does not divide {}", lower + 1, cur),
            })?;
    }
    Ok(cur)
}

/// `Borel(A)`, the smallest strongly stable ideal containing `A`.
///
/// Saturates `A` under the adjacent exchanges `x_{j-1} / x_j`, which compose
/// to every Borel move, then minimalizes.
pub fn borel_closure(set: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let seeds: Vec<Monomial> = set.into_iter().collect();
    let dim = seeds.first().ok_or(Error::EmptyInput)?.dim();
    check_dims(dim, &seeds)?;

    // Only minimal seeds matter: moves of a multiple are multiples of moves.
    let mut seen: BTreeSet<Monomial> = minimalize(seeds).into_iter().collect();
    let mut queue: VecDeque<Monomial> = seen.iter().cloned().collect();
    while let Some(m) = queue.pop_front() {
        for j in 1..dim {
            if let Some(next) = m.exchange(j - 1, j) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(MonomialIdeal {
        dim,
        gens: minimalize(seen),
    })
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        check_dims(dim, &gens)?;
        Ok(MonomialIdeal {
            dim,
            gens: minimalize(gens),
        })
    }

    /// The whole ring, generated by 1.
    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![Monomial::one(dim)],
        }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The minimal generators `G(I)`, ascending by exponent vector.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.dim(),
            });
        }
        Ok(self.contains_exponents(m.exponents()))
    }

    pub(crate) fn contains_exponents(&self, e: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| monomial::divides(g.exponents(), e))
    }

    /// `I ⊆ other`, checked on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.dim == other.dim
            && self
                .gens
                .iter()
                .all(|g| other.contains_exponents(g.exponents()))
    }

    /// Entry `j` is the degree of the pure power of `x_j` in `G(I)`, if any.
    /// The unit ideal reports degree 0 for every variable.
    pub fn pure_power_degrees(&self) -> Vec<Option<u32>> {
        if self.is_unit() {
            return vec![Some(0); self.dim];
        }
        let mut out = vec![None; self.dim];
        for g in &self.gens {
            if let Some((var, k)) = g.as_pure_power() {
                out[var] = Some(k);
            }
        }
        out
    }

    /// True iff some power of every variable lies in `I`.
    pub fn is_artinian(&self) -> bool {
        self.pure_power_degrees().iter().all(Option::is_some)
    }

    /// The largest pure power degree `n`, placing an Artinian ideal in
    /// `A_d(n)`. `None` when not Artinian.
    pub fn side(&self) -> Option<u32> {
        self.pure_power_degrees()
            .into_iter()
            .collect::<Option<Vec<u32>>>()
            .and_then(|v| v.into_iter().max())
    }

    /// Variable exchange condition, checked on minimal generators only: for
    /// every `g` in `G(I)`, `x_j | g` and `i < j`, `g * x_i / x_j` lies in `I`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            (1..self.dim).all(|j| {
                (0..j).all(|i| match g.exchange(i, j) {
                    Some(h) => self.contains_exponents(h.exponents()),
                    None => true,
                })
            })
        })
    }

    /// True iff `G(I)` is closed under permuting variables.
    pub fn is_symmetric(&self) -> bool {
        let mut probe = vec![0u32; self.dim];
        self.gens.iter().all(|g| {
            (1..self.dim).all(|j| {
                probe.copy_from_slice(g.exponents());
                probe.swap(j - 1, j);
                self.gens
                    .binary_search_by(|h| h.exponents().cmp(&probe))
                    .is_ok()
            })
        })
    }

    /// The unique minimal Borel generating set of a strongly stable ideal:
    /// the generators `m` such that, for every `x_q | m`, neither `m / x_q`
    /// nor `m * x_{q+1} / x_q` lies in `I`.
    pub fn bgens(&self) -> Result<Vec<Monomial>> {
        if !self.is_strongly_stable() {
            return Err(Error::NotStronglyStable);
        }
        let mut probe = vec![0u32; self.dim];
        let out = self
            .gens
            .iter()
            .filter(|m| {
                let e = m.exponents();
                (0..self.dim).filter(|&q| e[q] > 0).all(|q| {
                    probe.copy_from_slice(e);
                    probe[q] -= 1;
                    if self.contains_exponents(&probe) {
                        return false;
                    }
                    if q + 1 < self.dim {
                        probe[q + 1] += 1;
                        if self.contains_exponents(&probe) {
                            return false;
                        }
                    }
                    true
                })
            })
            .cloned()
            .collect();
        Ok(out)
    }

    /// `(g1, g2, ...)`, greatest first, with `x, y, z` aliases when
    /// `aliases` and `d <= 3`.
    pub fn pretty(&self, aliases: bool) -> String {
        let parts: Vec<String> = self.gens.iter().rev().map(|g| g.pretty(aliases)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty(false))
    }
}
