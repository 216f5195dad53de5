use std::path::PathBuf;

use crate::numerics::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("moment a_{index} requested but only a_1..a_{available} are available")]
    IndexOutOfRange { index: usize, available: usize },

    #[error("Q_{n} = {value} is not positive")]
    NonPositiveQ { n: usize, value: Rational },

    #[error("entry ({row}, {col}) must be zero in an arrow matrix")]
    ArrowShapeViolation { row: usize, col: usize },

    #[error("diagonal entry ({0}, {0}) is zero")]
    ZeroDiagonal(usize),

    /// `L(e_2 q_index^2) <= 0`: the moment functional is not positive definite.
    #[error("positivity violated at index {index}: L(e_2 q^2) = {value}")]
    PositivityViolation { index: usize, value: Rational },

    #[error("orthogonality check failed: L(e_2 q_{i} q_{j}) = {value}")]
    OrthogonalityViolation { i: usize, j: usize, value: Rational },

    #[error("determinant and orthogonal-polynomial engines disagree at n = {n}: {det} vs {ortho}")]
    EngineMismatch {
        n: usize,
        det: Box<Rational>,
        ortho: Box<Rational>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
