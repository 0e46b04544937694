use thiserror::Error;

/// Errors produced while building games, strategies and reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("payoff entry {entry} is not finite ({value})")]
    NonFinitePayoff { entry: &'static str, value: f64 },

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("affine scale must be positive, got {0}")]
    NonPositiveScale(f64),

    #[error("theta must lie in [0, pi], got {0}")]
    ThetaOutOfRange(f64),

    #[error("non-finite unitary parameter {0}")]
    NonFiniteParameter(f64),

    #[error("game is not symmetric: {0}")]
    Asymmetric(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("line {line}: {message}")]
    BadLine { line: usize, message: String },

    #[error("invalid sampling bounds: low {low} must be below high {high}")]
    InvalidBounds { low: f64, high: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Asymmetric(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
