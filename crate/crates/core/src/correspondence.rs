//! The complement map between Artinian monomial ideals and partitions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::partition::{Cell, Partition};

/// The exponent vectors of monomials outside `ideal`.
///
/// Every such vector lies in `{0..n-1}^d` where `n` is the largest pure power
/// degree, so the box is scanned in lexicographic order. The unit ideal maps
/// to the empty partition.
pub fn ideal_to_partition(ideal: &MonomialIdeal) -> Result<Partition> {
    let side = ideal.side().ok_or(Error::NotArtinian)?;
    let dim = ideal.dim();
    let mut cells = Vec::new();
    if side > 0 {
        let mut cur: Cell = vec![0; dim];
        loop {
            if !ideal.contains_exponents(&cur) {
                cells.push(cur.clone());
            }
            // odometer, last coordinate fastest
            let mut k = dim;
            loop {
                if k == 0 {
                    return Ok(Partition::from_sorted_unchecked(dim, cells));
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < side {
                    break;
                }
                cur[k] = 0;
            }
        }
    }
    Ok(Partition::empty(dim))
}

/// The ideal spanned by the monomials whose exponents lie outside `partition`.
///
/// Its minimal generators are the vectors `a` outside the partition with
/// `a - e_j` inside for every `j` where `a_j > 0`; each is a cell plus a unit
/// vector, so only those candidates are examined. The empty partition gives
/// the unit ideal.
pub fn partition_to_ideal(partition: &Partition) -> MonomialIdeal {
    let dim = partition.dim();
    if partition.is_empty() {
        return MonomialIdeal::unit(dim);
    }
    let mut gens = BTreeSet::new();
    let mut probe = vec![0u32; dim];
    for cell in partition.cells() {
        for j in 0..dim {
            let mut cand = cell.clone();
            cand[j] += 1;
            if partition.contains(&cand) || gens.contains(&cand) {
                continue;
            }
            let minimal = (0..dim).filter(|&k| cand[k] > 0).all(|k| {
                probe.copy_from_slice(&cand);
                probe[k] -= 1;
                partition.contains(&probe)
            });
            if minimal {
                gens.insert(cand);
            }
        }
    }
    MonomialIdeal::new(dim, gens.into_iter().map(Monomial::new))
        .expect("generators share the partition's dimension")
}
