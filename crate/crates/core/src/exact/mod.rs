//! Exact scalar layer: big rationals, univariate polynomials, rational
//! functions in one variable and their behaviour as the variable grows
//! without bound.
//!
//! Nothing in this crate rounds. Asymptotic statements such as "this
//! quantity is bounded" are turned into degree comparisons of exact
//! rational functions.

mod interpolate;
mod ratfunc;
mod unipoly;

pub use interpolate::interpolate_poly;
pub use ratfunc::{expansion_at_infinity, laurent_coefficient, limit_at_infinity, LimitClass, RationalFunction};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),
    #[error("need at least {needed} points for degree bound {bound}, got {got}")]
    TooFewPoints { needed: usize, bound: usize, got: usize },
    #[error("interpolant disagrees at x = {x}: expected {expected}, polynomial gives {actual}")]
    VerificationMismatch { x: String, expected: String, actual: String },
    #[error("rational function with zero denominator")]
    ZeroDenominator,
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// Renders a rational exactly as `p/q` (or `p` when the denominator is 1).
pub fn render(r: &Rational) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    r.to_string()
}

/// Six-significant-digit decimal rendering, for human-facing columns only.
pub fn render_decimal(r: &Rational) -> String {
    use num_traits::ToPrimitive;
    match r.to_f64() {
        Some(v) => format!("{:.6}", v),
        None => render(r),
    }
}

/// Parses `p` or `p/q` with integer `p`, positive integer `q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q <= BigInt::zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
