//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the exact-arithmetic layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("target degree {target} is below the polynomial degree {actual}")]
    DegreeTooSmall { target: usize, actual: usize },
    #[error("polynomial is not multi-affine")]
    NotMultiAffine,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty interval or reversed endpoints")]
    InvalidInterval,
    #[error("input violates a precondition: {0}")]
    Precondition(String),
    #[error("size guard tripped: {0}")]
    GuardExceeded(String),
    #[error("incompatible inputs: {0}")]
    Incompatible(String),
    #[error("basis exchange axiom fails: basis {basis:?}, basis {other:?}, element {element}")]
    BasisExchange {
        basis: Vec<String>,
        other: Vec<String>,
        element: String,
    },
    #[error("invalid matroid data: {0}")]
    InvalidMatroid(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("json error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
