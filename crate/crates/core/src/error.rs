use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos} in {input:?}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("polynomial evaluated at t = 0, but t is invertible in Z[t, t^-1]")]
    EvalAtZero,

    #[error("minor size {k} out of range for a {size}x{size} matrix")]
    MinorOutOfRange { k: usize, size: usize },

    #[error("Fitting index {index} out of range for a {size}x{size} presentation")]
    FittingIndexOutOfRange { index: usize, size: usize },

    #[error("q must be a positive integer")]
    ZeroParity,

    #[error("A + (-1)^q A^T has determinant {det}, expected +1 or -1")]
    NonUnimodular { det: BigInt },

    #[error("odd q requires an even-sized Seifert matrix, got size {size}")]
    OddSizeSkew { size: usize },

    #[error("cannot combine Seifert matrices with q = {left} and q = {right}")]
    ParityMismatch { left: u32, right: u32 },

    #[error("module comparison is only decided for presentations of size <= 1, got {size}x{size}")]
    NotCyclicScope { size: usize },

    #[error("dimension n = {n} is below the minimum {min} for this construction")]
    DimensionTooSmall { n: u32, min: u32 },

    #[error("descriptor {name:?} carries neither a Seifert matrix nor a module presentation")]
    NoAlgebraicData { name: String },

    #[error("invalid descriptor {name:?}: {reason}")]
    InvalidDescriptor { name: String, reason: String },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
