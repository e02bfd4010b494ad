//! Prefix-sum transform of exponent vectors and the bijection between
//! strongly stable and totally symmetric partitions of the same box.
//!
//! The chain is
//!
//! ```text
//! strongly stable partition --φ⁻¹--> strongly stable ideal I
//!     --Λ--> ψ(Bgens(I))  (an F-set)
//!     --Ω--> ideal generated by all permutations of the F-set
//!     --φ--> totally symmetric partition
//! ```
//!
//! where `ψ(a_1, ..., a_d) = (a_1, a_1 + a_2, ..., a_1 + ... + a_d)`. Every
//! step is invertible and the side `n` of the bounding box is preserved.

use serde::{Deserialize, Serialize};

use crate::correspondence::{ideal_to_partition, partition_to_ideal};
use crate::error::{Error, Result};
use crate::ideal::{borel_closure, check_dims, minimalize, symmetrize, MonomialIdeal};
use crate::monomial::{self, Monomial};
use crate::partition::Partition;

/// Prefix sums of the exponent vector. The image is weakly increasing.
pub fn psi(m: &Monomial) -> Monomial {
    let mut acc = 0u32;
    Monomial::new(
        m.exponents()
            .iter()
            .map(|&a| {
                acc += a;
                acc
            })
            .collect(),
    )
}

/// Consecutive differences; inverse of [`psi`] on weakly increasing vectors.
pub fn psi_inv(m: &Monomial) -> Result<Monomial> {
    if !m.is_weakly_increasing() {
        return Err(Error::NotWeaklyIncreasing(m.exponents().to_vec()));
    }
    let e = m.exponents();
    Ok(Monomial::new(
        (0..e.len())
            .map(|i| if i == 0 { e[0] } else { e[i] - e[i - 1] })
            .collect(),
    ))
}

/// An element of `F_d(n)`: an antichain of weakly increasing exponent
/// vectors, containing `x_d^n`, with no coordinate above `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FSetData", into = "FSetData")]
pub struct FSet {
    dim: usize,
    side: u32,
    elements: Vec<Monomial>,
}

/// Wire form `{"dim": d, "side": n, "elements": [[...], ...]}`, elements
/// greatest first in lex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSetData {
    pub dim: usize,
    pub side: u32,
    pub elements: Vec<Vec<u32>>,
}

impl TryFrom<FSetData> for FSet {
    type Error = Error;

    fn try_from(data: FSetData) -> Result<Self> {
        FSet::new(
            data.dim,
            data.side,
            data.elements.into_iter().map(Monomial::new),
        )
    }
}

impl From<FSet> for FSetData {
    fn from(s: FSet) -> Self {
        FSetData {
            dim: s.dim,
            side: s.side,
            elements: s
                .elements
                .into_iter()
                .rev()
                .map(Monomial::into_exponents)
                .collect(),
        }
    }
}

impl FSet {
    pub fn new(
        dim: usize,
        side: u32,
        elements: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        let mut elements: Vec<Monomial> = elements.into_iter().collect();
        check_dims(dim, &elements)?;
        if side == 0 {
            return Err(Error::InvalidFSet("side must be positive".into()));
        }
        if let Some(m) = elements.iter().find(|m| !m.is_weakly_increasing()) {
            return Err(Error::InvalidFSet(format!(
                "{:?} is not weakly increasing",
                m.exponents()
            )));
        }
        if let Some(m) = elements
            .iter()
            .find(|m| m.exponents().iter().any(|&a| a > side))
        {
            return Err(Error::InvalidFSet(format!(
                "{:?} has a coordinate above {side}",
                m.exponents()
            )));
        }
        if !elements.contains(&Monomial::pure_power(dim, dim - 1, side)) {
            return Err(Error::InvalidFSet(format!("missing x{dim}^{side}")));
        }
        elements.sort_unstable();
        elements.dedup();
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if i != j && monomial::divides(a.exponents(), b.exponents()) {
                    return Err(Error::InvalidFSet(format!(
                        "{:?} divides {:?}",
                        a.exponents(),
                        b.exponents()
                    )));
                }
            }
        }
        Ok(FSet {
            dim,
            side,
            elements,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }
}

/// Borel generators computed as `ψ⁻¹(min(ψ(G(I))))`.
pub fn bgens_via_psi(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    let mut out = minimalize(ideal.gens().iter().map(psi))
        .iter()
        .map(psi_inv)
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// Degree `n` of `x_d^n`, required to be the largest pure power in `G(I)`.
fn box_side(ideal: &MonomialIdeal) -> Result<u32> {
    let side = ideal.side().ok_or(Error::NotArtinian)?;
    let last = ideal.pure_power_degrees()[ideal.dim() - 1];
    match last {
        Some(n) if n == side && n > 0 => Ok(n),
        _ => Err(Error::MissingPurePower),
    }
}

/// `Λ(I) = ψ(Bgens(I))` for `I` in `B_d(n)`.
pub fn lambda_map(ideal: &MonomialIdeal) -> Result<FSet> {
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let bgens = ideal.bgens()?;
    let side = box_side(ideal)?;
    FSet::new(ideal.dim(), side, bgens.iter().map(psi))
}

/// `Λ⁻¹(S) = Borel(ψ⁻¹(S))`.
pub fn lambda_inv(set: &FSet) -> Result<MonomialIdeal> {
    let pre = set
        .elements()
        .iter()
        .map(psi_inv)
        .collect::<Result<Vec<_>>>()?;
    borel_closure(pre)
}

/// `Ω(S)`: the ideal generated by every permutation of every element of `S`.
pub fn omega(set: &FSet) -> Result<MonomialIdeal> {
    MonomialIdeal::new(set.dim(), symmetrize(set.elements()))
}

/// `Ω⁻¹(I) = G(I) ∩ F_d` for `I` in `T_d(n)`.
pub fn omega_inv(ideal: &MonomialIdeal) -> Result<FSet> {
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    if !ideal.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let side = box_side(ideal)?;
    FSet::new(
        ideal.dim(),
        side,
        ideal
            .gens()
            .iter()
            .filter(|g| g.is_weakly_increasing())
            .cloned(),
    )
}

/// Sends a nonempty strongly stable partition to the totally symmetric
/// partition with the same bounding side.
pub fn ss_to_ts_partition(p: &Partition) -> Result<Partition> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !p.is_strongly_stable() {
        return Err(Error::NotStronglyStable);
    }
    let ideal = partition_to_ideal(p);
    let image = omega(&lambda_map(&ideal)?)?;
    ideal_to_partition(&image)
}

/// Inverse of [`ss_to_ts_partition`].
pub fn ts_to_ss_partition(q: &Partition) -> Result<Partition> {
    if q.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if !q.is_totally_symmetric() {
        return Err(Error::NotTotallySymmetric);
    }
    let ideal = partition_to_ideal(q);
    let image = lambda_inv(&omega_inv(&ideal)?)?;
    ideal_to_partition(&image)
}
