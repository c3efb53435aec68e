use crate::scalar::Scalar;

/// Errors shared by every module in the crate.
///
/// Scalar payloads are boxed to keep `Result` small on the hot paths.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: endpoints must satisfy 0 <= lo <= hi <= 1")]
    InvalidInterval { lo: Box<Scalar>, hi: Box<Scalar> },

    #[error("scalar must be strictly positive, got {0}")]
    NonPositiveScalar(Box<Scalar>),

    #[error("cannot take the mean of an empty sequence")]
    EmptySequence,

    #[error("universe is empty")]
    EmptyUniverse,

    #[error("parameter list is empty")]
    EmptyParameters,

    #[error("universe/parameter mismatch: {0}")]
    UniverseMismatch(String),

    #[error("threshold mismatch: {0}")]
    ThresholdMismatch(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("cannot parse {0:?} as a number: {1}")]
    NumberParse(String, String),

    #[error("report already has a unique winner; nothing to re-threshold")]
    NotTied,
}

pub type Result<T> = std::result::Result<T, Error>;
