//! Crate-wide error type.

use thiserror::Error;

use crate::spn::ValidationReport;

/// Errors produced by ingestion, parsing, learning and pipeline code.
///
/// Violations of SPN structural invariants are not errors; they are data,
/// reported through [`ValidationReport`]. `Error::InvalidSpn` wraps a
/// non-empty report at the points where a valid SPN is a hard precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("ingestion error at row {row}, column '{column}': {message}")]
    Ingest {
        /// 1-based data row (header excluded); `0` when not row-specific.
        row: usize,
        column: String,
        message: String,
    },

    #[error("spn parse error: {0}")]
    SpnParse(String),

    #[error("invalid spn: {0}")]
    InvalidSpn(ValidationReport),

    #[error("unknown dataset '{name}'; supported: {}", supported.join(", "))]
    UnknownDataset { name: String, supported: Vec<String> },

    #[error("fetch error for '{name}': {message}")]
    Fetch { name: String, message: String },

    #[error("input error: {0}")]
    Input(String),

    /// An internal contract was broken; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Contract(String),
}

impl Error {
    /// True when the error is attributable to user input (bad paths, malformed
    /// files, mismatched schemas) rather than an internal bug.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Contract(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
