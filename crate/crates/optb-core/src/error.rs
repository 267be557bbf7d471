use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Each variant maps to a distinct CLI exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("not hyperbolic: |Tr| = {abs_trace}")]
    NotHyperbolic { abs_trace: BigInt },

    #[error("invalid twist: {relation}")]
    InvalidTwist { relation: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate Jacobian: every entry is zero")]
    DegenerateJacobian,

    #[error("missing residue for {0}")]
    MissingResidue(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
