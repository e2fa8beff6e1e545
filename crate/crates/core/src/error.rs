use std::fmt;

use crate::qscalar::BigRat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at q = {0}")]
    Pole(BigRat),
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("composition parts sum to {actual}, expected {expected}")]
    SumMismatch { expected: usize, actual: usize },
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("series has a nonzero constant term and is not divisible by t")]
    NotDivisible,
    #[error("truncation order {order} is below polynomial degree {degree}")]
    TruncationTooSmall { order: usize, degree: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

/// Syntax error from the polynomial expression parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}
