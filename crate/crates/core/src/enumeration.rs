//! Exhaustive enumeration of partitions inside a box, counting tables,
//! generating functions and the product formulas they are checked against.
//!
//! Each class of partitions is the family of order ideals of a finite poset
//! on candidate cells. The poset's elements are listed in a linear extension
//! (graded lexicographic order) and a depth-first search decides include or
//! exclude for each element in turn, allowing include only when all of the
//! element's lower covers are already present. Every order ideal is reached
//! by exactly one path.
//!
//! * all partitions: cells of `{0..n-1}^d`, covers `a - e_j`;
//! * strongly stable: the same cells, plus covers `a - e_i + e_{i+1}`, a
//!   condition every strongly stable partition satisfies (if `a - e_i` has
//!   positive `i`-th arm then its `(i+1)`-th arm is positive too). Completed
//!   candidates are re-checked against the hook definition;
//! * totally symmetric: weakly increasing orbit representatives, with covers
//!   `sort(a - e_j)`.
//!
//! None of this touches the ideal-theoretic bijection, so equal counts from
//! the two families are an independent check of it.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::next_permutation;
use crate::partition::{Cell, Partition};
use crate::qpoly::QPolynomial;

/// Node budget used when none is given explicitly.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

/// Which partitions to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    All,
    StronglyStable,
    TotallySymmetric,
}

/// Search limits shared by the enumeration entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Maximum number of search nodes; `None` for no limit.
    pub budget: Option<u64>,
    /// Worker threads for [`Enumerator::collect`]; results do not depend on it.
    pub threads: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: Some(DEFAULT_NODE_BUDGET),
            threads: 1,
        }
    }
}

struct Poset {
    elems: Vec<Cell>,
    lower: Vec<Vec<usize>>,
}

impl Poset {
    fn build(dim: usize, side: u32, class: Class) -> Poset {
        let mut candidates = box_cells(dim, side);
        if class == Class::TotallySymmetric {
            candidates.retain(|c| c.windows(2).all(|w| w[0] <= w[1]));
        }
        candidates.sort_by(|a, b| {
            let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
            let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        });

        let mut index: HashMap<Cell, usize> = HashMap::new();
        let mut elems = Vec::new();
        let mut lower = Vec::new();
        'cand: for cell in candidates {
            let mut below = Vec::new();
            for covered in lower_covers(&cell, side, class) {
                // a cover outside the box, or one that was itself dropped,
                // means this cell can never be included
                match covered.and_then(|c| index.get(&c).copied()) {
                    Some(i) => below.push(i),
                    None => continue 'cand,
                }
            }
            below.sort_unstable();
            below.dedup();
            index.insert(cell.clone(), elems.len());
            elems.push(cell);
            lower.push(below);
        }
        Poset { elems, lower }
    }
}

fn box_cells(dim: usize, side: u32) -> Vec<Cell> {
    if side == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; dim];
    loop {
        out.push(cur.clone());
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
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

/// Elements that must be present before `cell` can be added; `None` marks a
/// requirement that falls outside the box.
fn lower_covers(cell: &[u32], side: u32, class: Class) -> Vec<Option<Cell>> {
    let dim = cell.len();
    let mut out = Vec::new();
    for j in 0..dim {
        if cell[j] == 0 {
            continue;
        }
        let mut c = cell.to_vec();
        c[j] -= 1;
        if class == Class::TotallySymmetric {
            c.sort_unstable();
        }
        out.push(Some(c));
    }
    if class == Class::StronglyStable {
        for i in 0..dim.saturating_sub(1) {
            if cell[i] == 0 {
                continue;
            }
            let mut c = cell.to_vec();
            c[i] -= 1;
            c[i + 1] += 1;
            out.push((c[i + 1] < side).then_some(c));
        }
    }
    out
}

/// Enumerates the partitions of one class inside `{0..n-1}^d`.
pub struct Enumerator {
    dim: usize,
    side: u32,
    class: Class,
    options: EnumOptions,
    poset: Poset,
}

struct Search<'a> {
    poset: &'a Poset,
    nodes: &'a AtomicU64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        match self.budget {
            Some(budget) if used > budget => Err(Error::ResourceLimit { budget }),
            _ => Ok(()),
        }
    }

    fn includable(&self, k: usize, included: &[bool]) -> bool {
        self.poset.lower[k].iter().all(|&i| included[i])
    }

    fn dfs(
        &self,
        mut k: usize,
        included: &mut Vec<bool>,
        leaf: &mut dyn FnMut(&[bool]) -> Result<()>,
    ) -> Result<()> {
        self.tick()?;
        let len = self.poset.elems.len();
        while k < len && !self.includable(k, included) {
            k += 1;
        }
        if k == len {
            return leaf(included);
        }
        self.dfs(k + 1, included, leaf)?;
        included[k] = true;
        let r = self.dfs(k + 1, included, leaf);
        included[k] = false;
        r
    }
}

impl Enumerator {
    pub fn new(dim: usize, side: u32, class: Class) -> Result<Self> {
        Self::with_options(dim, side, class, EnumOptions::default())
    }

    pub fn with_options(dim: usize, side: u32, class: Class, options: EnumOptions) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Enumerator {
            dim,
            side,
            class,
            options,
            poset: Poset::build(dim, side, class),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> u32 {
        self.side
    }

    pub fn class(&self) -> Class {
        self.class
    }

    fn materialize(&self, included: &[bool]) -> Option<Partition> {
        let chosen = self
            .poset
            .elems
            .iter()
            .zip(included)
            .filter(|(_, &on)| on)
            .map(|(c, _)| c);
        let mut cells: Vec<Cell> = match self.class {
            Class::TotallySymmetric => chosen
                .flat_map(|rep| {
                    let mut e = rep.clone();
                    let mut orbit = vec![e.clone()];
                    while next_permutation(&mut e) {
                        orbit.push(e.clone());
                    }
                    orbit
                })
                .collect(),
            _ => chosen.cloned().collect(),
        };
        cells.sort_unstable();
        let p = Partition::from_sorted_unchecked(self.dim, cells);
        match self.class {
            Class::StronglyStable => p.is_strongly_stable().then_some(p),
            _ => Some(p),
        }
    }

    /// Streams every partition of the class with bounding side at most `n`,
    /// the empty one included, in a fixed order. Single threaded.
    pub fn for_each(&self, mut f: impl FnMut(Partition)) -> Result<()> {
        let nodes = AtomicU64::new(0);
        let search = Search {
            poset: &self.poset,
            nodes: &nodes,
            budget: self.options.budget,
        };
        let mut included = vec![false; self.poset.elems.len()];
        search.dfs(0, &mut included, &mut |inc| {
            if let Some(p) = self.materialize(inc) {
                f(p);
            }
            Ok(())
        })
    }

    /// All partitions of the class, in the same order as [`Self::for_each`].
    /// Uses `options.threads` workers by splitting the top of the search tree.
    pub fn collect(&self) -> Result<Vec<Partition>> {
        if self.options.threads <= 1 {
            let mut out = Vec::new();
            self.for_each(|p| out.push(p))?;
            return Ok(out);
        }
        let nodes = AtomicU64::new(0);
        let search = Search {
            poset: &self.poset,
            nodes: &nodes,
            budget: self.options.budget,
        };
        let len = self.poset.elems.len();
        let target = self.options.threads * 8;
        let mut frontier: Vec<(usize, Vec<bool>)> = vec![(0, vec![false; len])];
        while frontier.len() < target && frontier.iter().any(|(k, _)| *k < len) {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for (k, inc) in frontier {
                if k == len {
                    next.push((k, inc));
                    continue;
                }
                search.tick()?;
                if search.includable(k, &inc) {
                    let mut with = inc.clone();
                    with[k] = true;
                    next.push((k + 1, inc));
                    next.push((k + 1, with));
                } else {
                    next.push((k + 1, inc));
                }
            }
            frontier = next;
        }

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.options.threads)
            .build()
            .expect("thread pool");
        let chunks: Vec<Result<Vec<Partition>>> = pool.install(|| {
            frontier
                .into_par_iter()
                .map(|(k, mut inc)| {
                    let mut out = Vec::new();
                    search.dfs(k, &mut inc, &mut |inc| {
                        out.extend(self.materialize(inc));
                        Ok(())
                    })?;
                    Ok(out)
                })
                .collect()
        });
        let mut out = Vec::new();
        for chunk in chunks {
            out.extend(chunk?);
        }
        Ok(out)
    }

    pub fn count(&self) -> Result<BigUint> {
        Ok(BigUint::from(self.collect()?.len()))
    }
}

/// Every partition of `class` with bounding side at most `n`.
pub fn enumerate_partitions(dim: usize, n: u32, class: Class) -> Result<Vec<Partition>> {
    Enumerator::new(dim, n, class)?.collect()
}

/// `B_d(n)`: strongly stable partitions fitting in a box of side `n`.
pub fn count_ss(dim: usize, n: u32) -> Result<BigUint> {
    count_ss_with(dim, n, &EnumOptions::default())
}

/// `T_d(n)`: totally symmetric partitions fitting in a box of side `n`.
pub fn count_ts(dim: usize, n: u32) -> Result<BigUint> {
    count_ts_with(dim, n, &EnumOptions::default())
}

pub fn count_ss_with(dim: usize, n: u32, options: &EnumOptions) -> Result<BigUint> {
    Enumerator::with_options(dim, n, Class::StronglyStable, *options)?.count()
}

pub fn count_ts_with(dim: usize, n: u32, options: &EnumOptions) -> Result<BigUint> {
    Enumerator::with_options(dim, n, Class::TotallySymmetric, *options)?.count()
}

/// Cumulative counts `B_d(k)` and `T_d(k)` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub dim: usize,
    pub n: u32,
    pub ss: Vec<BigUint>,
    pub ts: Vec<BigUint>,
}

impl CountTable {
    pub fn compute(dim: usize, n: u32, options: &EnumOptions) -> Result<Self> {
        let by_side = |class| -> Result<Vec<BigUint>> {
            let parts = Enumerator::with_options(dim, n, class, *options)?.collect()?;
            let mut exact = vec![0u64; n as usize + 1];
            for p in &parts {
                exact[p.bounding_side() as usize] += 1;
            }
            let mut acc = BigUint::zero();
            Ok(exact
                .into_iter()
                .map(|c| {
                    acc += c;
                    acc.clone()
                })
                .collect())
        };
        Ok(CountTable {
            dim,
            n,
            ss: by_side(Class::StronglyStable)?,
            ts: by_side(Class::TotallySymmetric)?,
        })
    }

    /// Number of strongly stable partitions with bounding side exactly `k`.
    pub fn ss_exact(&self, k: usize) -> BigUint {
        exact_from_cumulative(&self.ss, k)
    }

    pub fn ts_exact(&self, k: usize) -> BigUint {
        exact_from_cumulative(&self.ts, k)
    }
}

fn exact_from_cumulative(v: &[BigUint], k: usize) -> BigUint {
    if k == 0 {
        v[0].clone()
    } else {
        &v[k] - &v[k - 1]
    }
}

fn tspp_triples(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).flat_map(move |i| (i..=n).flat_map(move |j| (j..=n).map(move |k| i + j + k)))
}

/// `prod_{1<=i<=j<=k<=n} (i+j+k-1)/(i+j+k-2)`, evaluated exactly.
pub fn stembridge_t3(n: u32) -> Result<BigUint> {
    let product = tspp_triples(n).fold(BigRational::one(), |acc, s| {
        acc * BigRational::new(BigInt::from(s - 1), BigInt::from(s - 2))
    });
    if !product.is_integer() {
        return Err(Error::NonIntegerProduct(product.to_string()));
    }
    product
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::NonIntegerProduct(product.to_string()))
}

/// `prod_{1<=i<=j<=k<=n} (1-q^{i+j+k-1})/(1-q^{i+j+k-2})`.
///
/// All numerators are multiplied first; dividing the full product by each
/// denominator in turn is then exact whenever the whole quotient is a
/// polynomial.
pub fn qtspp(n: u32) -> Result<QPolynomial> {
    let sums: Vec<u32> = tspp_triples(n).collect();
    let numerator = sums.iter().fold(QPolynomial::one(), |acc, &s| {
        &acc * &QPolynomial::one_minus_q_pow(s as usize - 1)
    });
    sums.iter().try_fold(numerator, |acc, &s| {
        acc.div_exact(&QPolynomial::one_minus_q_pow(s as usize - 2))
    })
}

fn generating_function(
    dim: usize,
    n: u32,
    class: Class,
    statistic: fn(&Partition) -> usize,
    options: &EnumOptions,
) -> Result<QPolynomial> {
    let one = BigInt::one();
    let mut gf = QPolynomial::zero();
    Enumerator::with_options(dim, n, class, *options)?
        .collect()?
        .iter()
        .for_each(|p| gf.add_term(statistic(p), &one));
    Ok(gf)
}

/// Sum of `q^(number of orbits)` over totally symmetric partitions in the box.
pub fn orbit_gf_ts(dim: usize, n: u32) -> Result<QPolynomial> {
    orbit_gf_ts_with(dim, n, &EnumOptions::default())
}

/// Sum of `q^(number of cells)` over strongly stable partitions in the box.
pub fn cell_gf_ss(dim: usize, n: u32) -> Result<QPolynomial> {
    cell_gf_ss_with(dim, n, &EnumOptions::default())
}

pub fn orbit_gf_ts_with(dim: usize, n: u32, options: &EnumOptions) -> Result<QPolynomial> {
    generating_function(
        dim,
        n,
        Class::TotallySymmetric,
        Partition::orbit_count,
        options,
    )
}

pub fn cell_gf_ss_with(dim: usize, n: u32, options: &EnumOptions) -> Result<QPolynomial> {
    generating_function(dim, n, Class::StronglyStable, Partition::len, options)
}

/// Sum of `q^(number of cells)` over all partitions in the box.
pub fn cell_gf_all_with(dim: usize, n: u32, options: &EnumOptions) -> Result<QPolynomial> {
    generating_function(dim, n, Class::All, Partition::len, options)
}

/// Both sides of `B_d(n) = B_{n-1}(d+1)`, by enumeration.
pub fn hawkes_sides(dim: usize, n: u32, options: &EnumOptions) -> Result<(BigUint, BigUint)> {
    let left = count_ss_with(dim, n, options)?;
    let other_dim = (n as usize).checked_sub(1).ok_or(Error::ZeroDimension)?;
    let right = count_ss_with(other_dim, dim as u32 + 1, options)?;
    Ok((left, right))
}

/// Whether `B_d(n) = B_{n-1}(d+1)` holds; requires `n >= 2`.
pub fn hawkes_check(dim: usize, n: u32) -> Result<bool> {
    let (l, r) = hawkes_sides(dim, n, &EnumOptions::default())?;
    Ok(l == r)
}
