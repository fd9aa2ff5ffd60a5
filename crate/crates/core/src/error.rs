use thiserror::Error;

/// Errors raised across the library.
///
/// Non-divisibility and non-association are ordinary outcomes and are
/// reported through `Option`, never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot construct field: {0}")]
    Construction(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different contexts: {0}")]
    Context(String),
    #[error("field is not finite")]
    NotFinite,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("substitution source and destination coincide (x{0})")]
    BadSubstitution(usize),
    #[error("malformed permutation: {0}")]
    BadPermutation(String),
    #[error("exponent bound violated: {0}")]
    BadBounds(String),
    #[error("bad exponent sequence: {0}")]
    BadSequence(String),
    #[error("size bound exceeded: {0}")]
    Size(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("closed form requires a <= b - a (got a = {a}, b = {b}); use the reversal path")]
    Case { a: u32, b: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
