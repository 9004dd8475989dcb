use thiserror::Error;

use crate::linalg::{FieldSpec, Matrix};

pub type Result<T> = std::result::Result<T, Error>;

/// Failures that are not mathematical verdicts: bad input, mismatched
/// shapes or fields, and violated preconditions.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("matrix is singular")]
    Singular,

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown group element {0:?}")]
    UnknownElement(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is not contained in the expected subspace")]
    NotContained { what: String },

    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        residual: Option<Matrix>,
    },
}

impl Error {
    pub(crate) fn dims(op: &'static str, detail: impl Into<String>) -> Self {
        Error::DimensionMismatch {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn precondition(what: impl Into<String>, residual: Option<Matrix>) -> Self {
        Error::Precondition {
            what: what.into(),
            residual,
        }
    }
}
