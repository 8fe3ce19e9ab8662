use std::io;

use thiserror::Error;

/// Errors produced by the library.
///
/// Variants map onto the exit-code classes of the command-line front end:
/// input problems are the caller's fault, everything else signals a limit
/// of the implementation or a broken internal invariant.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cut points ({i}, {j}, {k}) for n = {n}")]
    InvalidCutPoints { i: i64, j: i64, k: i64, n: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported size n = {n}: {reason}")]
    Capability { n: usize, reason: String },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("exhaustive search refuted the three-bond property for {0}")]
    OracleRefuted(String),

    #[error("table cache: {0}")]
    CacheFormat(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// True for errors caused by bad caller input rather than a failure
    /// inside the library.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidPermutation(_)
                | Error::InvalidCutPoints { .. }
                | Error::SizeMismatch { .. }
                | Error::OutOfRange { .. }
                | Error::Precondition(_)
                | Error::Capability { .. }
                | Error::CacheFormat(_)
                | Error::Io(_)
        )
    }

    pub(crate) fn out_of_range(what: &'static str, value: impl Into<i64>, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value: value.into(),
            range: range.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
