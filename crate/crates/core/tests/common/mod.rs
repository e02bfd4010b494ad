#![allow(dead_code)]

use std::collections::BTreeSet;

use ssp_core::{
    enumerate_partitions, partition_to_ideal, Cell, Class, Monomial, MonomialIdeal, Partition,
};

pub fn m(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn ms(list: &[&[u32]]) -> Vec<Monomial> {
    list.iter().map(|e| m(e)).collect()
}

pub fn ideal(dim: usize, list: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(dim, ms(list)).unwrap()
}

/// Every vector in `{0..=max}^dim`, lexicographic.
pub fn vectors(dim: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// All nonempty partitions with bounding side at most `n`.
pub fn nonempty_partitions(dim: usize, n: u32, class: Class) -> Vec<Partition> {
    enumerate_partitions(dim, n, class)
        .unwrap()
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect()
}

/// Artinian ideals `I` with `1 <= side(I) <= n`, via complements.
pub fn artinian_ideals(dim: usize, n: u32, class: Class) -> Vec<MonomialIdeal> {
    nonempty_partitions(dim, n, class)
        .iter()
        .map(partition_to_ideal)
        .collect()
}

/// Brute force over every subset of the box: the downward-closed ones.
pub fn brute_force_partitions(dim: usize, n: u32) -> Vec<Partition> {
    let cells: Vec<Cell> = if n == 0 { vec![] } else { vectors(dim, n - 1) };
    assert!(cells.len() <= 20, "box too large for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u32..(1 << cells.len()) {
        let subset: Vec<Cell> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, c)| c.clone())
            .collect();
        if let Ok(p) = Partition::new(dim, subset) {
            out.push(p);
        }
    }
    out
}

/// Total symmetry by applying all `d!` permutations.
pub fn is_totally_symmetric_exhaustive(p: &Partition) -> bool {
    use itertools::Itertools;
    let d = p.dim();
    p.cells().iter().all(|c| {
        (0..d)
            .permutations(d)
            .all(|perm| p.contains(&perm.iter().map(|&i| c[i]).collect::<Vec<_>>()))
    })
}

/// Borel closure by breadth-first search over every exchange `x_i / x_j`,
/// `i < j`, not just the adjacent ones.
pub fn borel_closure_all_pairs(seeds: &[Monomial]) -> MonomialIdeal {
    let dim = seeds[0].dim();
    let mut seen: BTreeSet<Monomial> = seeds.iter().cloned().collect();
    let mut stack: Vec<Monomial> = seeds.to_vec();
    while let Some(cur) = stack.pop() {
        for j in 0..dim {
            for i in 0..j {
                if let Some(next) = cur.exchange(i, j) {
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    MonomialIdeal::new(dim, seen).unwrap()
}

/// Does the ideal contain every monomial of `other`'s generating set?
pub fn ideal_subset(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.gens().iter().all(|g| b.contains(g).unwrap())
}
