use thiserror::Error;

/// Errors raised across the toolkit.
///
/// `Fault` is special: it is never a user mistake. It marks an internal
/// consistency check that failed (an oracle mismatch, a stratum outside the
/// known classification, a sweep that produced a non-consecutive block).
/// Callers that probe conjectures should treat it as data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arrangement is not generic: {0}")]
    NotGeneric(String),

    #[error("{what}: gave up after {attempts} resamples (seed {seed})")]
    ResampleBudget {
        what: &'static str,
        seed: u64,
        attempts: usize,
    },

    #[error("non-generic section: {0}")]
    NonGenericSection(String),

    #[error("consistency fault: {0}")]
    Fault(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
