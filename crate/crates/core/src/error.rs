//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid characteristic {0}: need 0 or a prime p >= 5")]
    InvalidCharacteristic(u64),

    #[error("field mismatch between operands")]
    FieldMismatch,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar {0} has no representative in F_{1} (denominator divisible by p)")]
    NotReducible(String, u64),

    #[error("characteristic {p} too small for an identity of degree {degree}")]
    CharacteristicTooSmall { p: u64, degree: u32 },

    #[error("matrix is singular")]
    Singular,

    #[error("not a nilalgebra up to tested bound {bound}")]
    NoNilindex { bound: u32 },

    #[error("A^3 = 0: the algebra is associative, nothing to normalize")]
    CubeZero,

    #[error("input is not a Jacobi-Jordan algebra of the expected shape: {0}")]
    NotJacobiJordan(String),

    #[error("conflicting product declaration for e{i}*e{j}")]
    ConflictingProduct { i: usize, j: usize },

    #[error("parse error on line {line}: {msg}")]
    FileParse { line: usize, msg: String },

    #[error("parse error at position {pos}: {msg}")]
    TextParse { pos: usize, msg: String },

    #[error("unknown variable '{0}'")]
    UnknownVariable(String),

    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),

    #[error("no Poonen ideal recorded for '{0}'")]
    NoIdeal(String),

    #[error("quotient is infinite-dimensional: no pure power of '{0}' among the leading monomials")]
    InfiniteQuotient(String),

    #[error("product of positive-degree basis monomials hits the unit: not an augmentation ideal")]
    NotAugmentationIdeal,

    #[error("brute-force search limited to dimension <= {limit}, got {got}")]
    BruteForceDim { limit: usize, got: usize },

    #[error("structure constants are not integral: {0}")]
    NonIntegerEntry(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
