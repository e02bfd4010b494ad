use std::io;
use std::process::ExitCode;

use ssp_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("style {style} needs dimension {needed}, got {found}")]
    UnsupportedDimension {
        style: &'static str,
        needed: usize,
        found: usize,
    },
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{error}: {detail}")]
    Witness { error: CoreError, detail: String },
}

/// 1: malformed input, 2: unmet precondition, 3: resource limit.
pub fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Read { .. } | CliError::Json(_) | CliError::Usage(_) => 1,
        CliError::UnsupportedDimension { .. } => 2,
        CliError::Write(_) => 1,
        CliError::Core(e) | CliError::Witness { error: e, .. } => core_exit_code(e),
    }
}

pub fn core_exit_code(err: &CoreError) -> u8 {
    match err {
        CoreError::ZeroDimension
        | CoreError::DimensionMismatch { .. }
        | CoreError::ClosureViolation { .. }
        | CoreError::NotWeaklyIncreasing(_)
        | CoreError::InvalidFSet(_) => 1,
        CoreError::CellNotInPartition(_)
        | CoreError::InvalidMove { .. }
        | CoreError::EmptyInput
        | CoreError::EmptyPartition
        | CoreError::NotStronglyStable
        | CoreError::NotSymmetric
        | CoreError::NotTotallySymmetric
        | CoreError::NotArtinian
        | CoreError::MissingPurePower
        | CoreError::NonIntegerProduct(_)
        | CoreError::InexactDivision => 2,
        CoreError::ResourceLimit { .. } => 3,
    }
}

impl CliError {
    pub fn exit(&self) -> ExitCode {
        ExitCode::from(exit_code(self))
    }
}
