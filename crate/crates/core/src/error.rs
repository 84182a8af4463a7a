use thiserror::Error;

/// Errors produced by the exact arithmetic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "radicand mismatch: sqrt({left}) and sqrt({right}) live in different quadratic fields"
    )]
    RadicandMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("series is not invertible: {0}")]
    NonInvertible(String),

    #[error("exponent {0} is not on the quarter-integer lattice")]
    OffLattice(String),

    #[error("weight operator is not diagonal on {0}")]
    NonDiagonal(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("decomposition case {case} is inconsistent with b = {b}")]
    CaseMismatch { case: String, b: String },

    #[error("verification failed: {0}")]
    Inconsistent(String),

    #[error("unsupported sector/weight combination: {0}")]
    UnsupportedSector(String),
}

pub type Result<T> = std::result::Result<T, Error>;
