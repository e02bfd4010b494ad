//! d-dimensional partitions and monomial ideals, with the side-preserving
//! bijection between strongly stable and totally symmetric partitions.
//!
//! * [`partition`]: cells, hook vectors, the strongly stable and totally
//!   symmetric predicates;
//! * [`monomial`] and [`ideal`]: monomial ideals by minimal generators,
//!   Borel moves, Borel closure and Borel generators;
//! * [`correspondence`]: Artinian ideals <-> partitions by complement;
//! * [`bijection`]: the prefix-sum transform and the maps `Λ`, `Ω`;
//! * [`enumeration`]: exhaustive counting, generating functions and the
//!   product formulas for totally symmetric plane partitions.
//!
//! ```
//! use ssp_core::{ideal_to_partition, ss_to_ts_partition, MonomialIdeal, Monomial};
//!
//! let gens = [[4, 0], [3, 1], [2, 3], [1, 4], [0, 7]];
//! let ideal = MonomialIdeal::new(2, gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap();
//! let strict = ideal_to_partition(&ideal).unwrap();
//! let symmetric = ss_to_ts_partition(&strict).unwrap();
//! assert_eq!(symmetric.bounding_side(), 7);
//! assert_eq!(symmetric.orbit_count(), strict.len());
//! ```

pub mod bijection;
pub mod correspondence;
pub mod enumeration;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod partition;
pub mod qpoly;

pub use bijection::{
    bgens_via_psi, lambda_inv, lambda_map, omega, omega_inv, psi, psi_inv, ss_to_ts_partition,
    ts_to_ss_partition, FSet, FSetData,
};
pub use correspondence::{ideal_to_partition, partition_to_ideal};
pub use enumeration::{
    cell_gf_ss, count_ss, count_ts, enumerate_partitions, hawkes_check, orbit_gf_ts, qtspp,
    stembridge_t3, Class, CountTable, EnumOptions, Enumerator,
};
pub use error::{Error, Result};
pub use ideal::{
    apply_borel_move, borel_closure, minimalize, symmetrize, IdealData, MonomialIdeal,
};
pub use monomial::Monomial;
pub use partition::{Cell, HookVector, Partition, PartitionData};
pub use qpoly::QPolynomial;
