use thiserror::Error;

/// Errors raised by the partition, ideal and enumeration routines.
///
/// Variable and axis indices are 0-based in the fields; the messages print
/// them 1-based to match the `x_1, ..., x_d` convention.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cell {cell:?} is missing its predecessor along axis {}", axis + 1)]
    ClosureViolation { cell: Vec<u32>, axis: usize },
    #[error("cell {0:?} is not in the partition")]
    CellNotInPartition(Vec<u32>),
    #[error("borel move {step} is invalid: {reason}")]
    InvalidMove { step: usize, reason: String },
    #[error("empty input set")]
    EmptyInput,
    #[error("partition is empty")]
    EmptyPartition,
    #[error("ideal is not strongly stable")]
    NotStronglyStable,
    #[error("ideal is not symmetric")]
    NotSymmetric,
    #[error("partition is not totally symmetric")]
    NotTotallySymmetric,
    #[error("ideal is not artinian")]
    NotArtinian,
    #[error("x_d^n is not a minimal generator with n the largest pure power degree")]
    MissingPurePower,
    #[error("exponent vector {0:?} is not weakly increasing")]
    NotWeaklyIncreasing(Vec<u32>),
    #[error("invalid F-set: {0}")]
    InvalidFSet(String),
    #[error("enumeration exceeded the node budget of {budget}")]
    ResourceLimit { budget: u64 },
    #[error("product formula did not evaluate to an integer: {0}")]
    NonIntegerProduct(String),
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
