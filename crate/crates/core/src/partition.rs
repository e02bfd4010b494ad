//! d-dimensional partitions: finite downward-closed subsets of `N^d`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point of `N^d`.
pub type Cell = Vec<u32>;

/// A finite set of cells closed under decrementing any positive coordinate.
///
/// Cells are kept deduplicated and in lexicographic order, so equality and
/// hashing are structural. The ambient dimension is stored explicitly and
/// survives serialization even when the partition is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionData", into = "PartitionData")]
pub struct Partition {
    dim: usize,
    cells: Vec<Cell>,
}

/// Unvalidated wire form of a [`Partition`]: `{"dim": d, "cells": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionData {
    pub dim: usize,
    pub cells: Vec<Cell>,
}

impl TryFrom<PartitionData> for Partition {
    type Error = Error;

    fn try_from(data: PartitionData) -> Result<Self> {
        Partition::new(data.dim, data.cells)
    }
}

impl From<Partition> for PartitionData {
    fn from(p: Partition) -> Self {
        PartitionData {
            dim: p.dim,
            cells: p.cells,
        }
    }
}

/// Per-axis arm lengths of a cell inside a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookVector(pub Vec<u32>);

impl HookVector {
    pub fn arms(&self) -> &[u32] {
        &self.0
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl Partition {
    /// Validates `cells` as a partition of dimension `dim`.
    pub fn new(dim: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if let Some(bad) = cells.iter().find(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        cells.sort_unstable();
        cells.dedup();
        let p = Partition { dim, cells };
        p.check_closure()?;
        Ok(p)
    }

    pub fn empty(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Partition {
            dim,
            cells: Vec::new(),
        }
    }

    /// Builds a partition from cells already known to be sorted, deduplicated
    /// and downward closed.
    pub(crate) fn from_sorted_unchecked(dim: usize, cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        let p = Partition { dim, cells };
        debug_assert!(p.check_closure().is_ok());
        p
    }

    fn check_closure(&self) -> Result<()> {
        let mut probe = vec![0u32; self.dim];
        for cell in &self.cells {
            for axis in 0..self.dim {
                if cell[axis] == 0 {
                    continue;
                }
                probe.copy_from_slice(cell);
                probe[axis] -= 1;
                if !self.contains(&probe) {
                    return Err(Error::ClosureViolation {
                        cell: cell.clone(),
                        axis,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &[u32]) -> bool {
        cell.len() == self.dim
            && self
                .cells
                .binary_search_by(|c| c.as_slice().cmp(cell))
                .is_ok()
    }

    /// The arm lengths of `cell`: entry `j` is the largest `h` such that
    /// `cell + h * e_j` is still in the partition.
    pub fn hook_vector(&self, cell: &[u32]) -> Result<HookVector> {
        if cell.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: cell.len(),
            });
        }
        if !self.contains(cell) {
            return Err(Error::CellNotInPartition(cell.to_vec()));
        }
        Ok(self.hook_unchecked(cell))
    }

    fn hook_unchecked(&self, cell: &[u32]) -> HookVector {
        let mut probe = cell.to_vec();
        let arms = (0..self.dim)
            .map(|j| {
                let mut h = 0;
                probe[j] = cell[j] + 1;
                while self.contains(&probe) {
                    h += 1;
                    probe[j] += 1;
                }
                probe[j] = cell[j];
                h
            })
            .collect();
        HookVector(arms)
    }

    /// True iff every cell's hook vector is weakly increasing.
    pub fn is_strongly_stable(&self) -> bool {
        self.cells
            .iter()
            .all(|c| self.hook_unchecked(c).is_weakly_increasing())
    }

    /// True iff the cell set is invariant under every permutation of the
    /// coordinates. Only the adjacent transpositions are checked.
    pub fn is_totally_symmetric(&self) -> bool {
        let mut probe = vec![0u32; self.dim];
        self.cells.iter().all(|cell| {
            (1..self.dim).all(|j| {
                if cell[j - 1] == cell[j] {
                    return true;
                }
                probe.copy_from_slice(cell);
                probe.swap(j - 1, j);
                self.contains(&probe)
            })
        })
    }

    /// Side length of the smallest cube `{0..n-1}^d` containing the
    /// partition; 0 for the empty partition.
    pub fn bounding_side(&self) -> u32 {
        self.cells
            .iter()
            .flat_map(|c| c.iter().copied())
            .max()
            .map_or(0, |m| m + 1)
    }

    /// Number of orbits of cells under coordinate permutation.
    pub fn orbit_count(&self) -> usize {
        self.cells
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Cells whose removal leaves a partition.
    pub fn maximal_cells(&self) -> Vec<Cell> {
        let mut probe = vec![0u32; self.dim];
        self.cells
            .iter()
            .filter(|c| {
                (0..self.dim).all(|j| {
                    probe.copy_from_slice(c);
                    probe[j] += 1;
                    !self.contains(&probe)
                })
            })
            .cloned()
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.cells.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (i, a) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}
