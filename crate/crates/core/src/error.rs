use thiserror::Error;

use crate::laurent::LaurentPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("{0}: the zero polynomial is not allowed here")]
    ZeroPolynomial(&'static str),

    #[error("{0}: a nonzero non-constant polynomial is required")]
    ConstantPolynomial(&'static str),

    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: LaurentPoly },

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("cannot evaluate a Laurent polynomial at t = 0")]
    EvalAtZero,

    #[error("degree {degree} exceeds the factorization limit of {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("presentation is not torsion: rank {rank} < {generators} generators")]
    NotTorsion { rank: usize, generators: usize },

    #[error("cyclic summand {index} is a unit; torsion summands must be non-units")]
    UnitSummand { index: usize },

    #[error("endomorphism is not well defined at entry ({row}, {col})")]
    IllDefinedEndo { row: usize, col: usize },

    #[error("polynomial {poly} vanishes at t = 1")]
    VanishesAtOne { poly: String },

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
