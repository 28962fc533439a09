//! Multivariate polynomials over the rationals, monomial orders, the
//! weight splitting `V = W + W'` and the polynomial text grammar.

mod monomial;
mod multipoly;
mod order;
mod parse;
mod weights;

pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use weights::{initial_form, u_weight, WeightAssignment};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown coordinate '{name}' at line {line}, column {column}")]
    UnknownCoordinate { name: String, line: usize, column: usize },
    #[error("exponent '{text}' at line {line}, column {column} is not a positive integer")]
    NonIntegerExponent { text: String, line: usize, column: usize },
    #[error("initial form of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("invalid weight assignment: {0}")]
    Weights(String),
}
