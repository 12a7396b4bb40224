//! Error types shared across the toolkit.

use thiserror::Error;

/// Errors raised by kernel operations, verifiers and builders.
///
/// Variants distinguish *structural* problems (malformed input data) from
/// *verdict* failures (a well-formed object failing a mathematical check);
/// verifiers generally return a report rather than an error for the latter
/// and reserve `Error` for inputs that cannot be processed at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("vertex universe too large: {got} distinct vertices exceeds the {limit}-vertex fast path and no fallback exists for this operation")]
    TooManyVertices { got: usize, limit: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("parse error in {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("dataset {id}: {detail}")]
    Dataset { id: String, detail: String },

    #[error("checksum mismatch for dataset {id}: expected {expected}, got {got}")]
    Checksum {
        id: String,
        expected: String,
        got: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic: {0}")]
    Arithmetic(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
