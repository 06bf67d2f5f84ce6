use std::fmt;

use thiserror::Error;

/// A syntax error with a byte offset into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("not a permutation of {0} variables")]
    NotAPermutation(usize),
    #[error("cannot compose with a series whose constant term is nonzero")]
    NonzeroConstantTerm,
    #[error("series is not normalized: expected a(X) = X mod X^2")]
    NotNormalized,
    #[error("insufficient truncation order: need {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("all multipliers are zero")]
    AllZero,
    #[error("both monomial coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("exponent vectors must be distinct")]
    IdenticalExponents,
    #[error(
        "underdetermined ansatz: {equations} scalar equations for {unknowns} unknowns \
         (need at least {required}); increase the sample count"
    )]
    Underdetermined { unknowns: usize, equations: usize, required: usize },
    #[error("candidate recurrence failed re-verification at n = {0}")]
    VerificationFailed(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
