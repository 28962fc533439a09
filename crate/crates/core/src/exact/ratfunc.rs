use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, UniPoly};

/// Quotient of two univariate polynomials, kept with common factors
/// cancelled and a monic denominator after every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

/// Behaviour of a rational function as its argument tends to +infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LimitClass {
    Finite(Rational),
    PlusInfinity,
    MinusInfinity,
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitClass::Finite(r) => write!(f, "{}", super::render(r)),
            LimitClass::PlusInfinity => f.write_str("+infinity"),
            LimitClass::MinusInfinity => f.write_str("-infinity"),
        }
    }
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading_coeff().unwrap().clone();
        let inv = lc.recip();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator is nonzero")
    }

    /// Multiplies by `x^k` when `k >= 0`, divides by `x^-k` otherwise.
    pub fn mul_power(&self, k: i64) -> Self {
        let (n, d) = if k >= 0 {
            (self.num.shift(k as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift((-k) as usize))
        };
        Self::new(n, d).expect("denominator is nonzero")
    }

    /// `deg(num) - deg(den)`, `None` for the zero function.
    pub fn order_at_infinity(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            return write!(f, "{}", self.num);
        }
        // clear denominators so the printed form has coprime integer coefficients
        let coeffs = || self.num.coeffs().iter().chain(self.den.coeffs());
        let lcm = coeffs().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let gcd = coeffs().fold(BigInt::zero(), |a, c| a.gcd(&(c * &lcm).to_integer()));
        let c = Rational::new(lcm, gcd);
        write!(f, "({})/({})", self.num.scale(&c), self.den.scale(&c))
    }
}

fn combine(a: &RationalFunction, b: &RationalFunction, op: impl Fn(&UniPoly, &UniPoly) -> UniPoly) -> RationalFunction {
    let n = op(&(&a.num * &b.den), &(&b.num * &a.den));
    RationalFunction::new(n, &a.den * &b.den).expect("product of nonzero denominators")
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, |x, y| x + y)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, |x, y| x - y)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

/// Panics when dividing by the zero function.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

/// Exact limit as the argument tends to +infinity, decided by comparing
/// numerator and denominator degrees and leading coefficients.
pub fn limit_at_infinity(f: &RationalFunction) -> LimitClass {
    let Some(order) = f.order_at_infinity() else {
        return LimitClass::Finite(Rational::zero());
    };
    let ratio = f.num.leading_coeff().unwrap() / f.den.leading_coeff().unwrap();
    match order {
        o if o < 0 => LimitClass::Finite(Rational::zero()),
        0 => LimitClass::Finite(ratio),
        _ if ratio.is_positive() => LimitClass::PlusInfinity,
        _ => LimitClass::MinusInfinity,
    }
}

/// Descending Laurent expansion at infinity. Calls `visit(exponent, coeff)`
/// for each nonzero term until it returns `false` or the remainder vanishes.
fn expand(f: &RationalFunction, mut visit: impl FnMut(i64, Rational) -> bool) {
    let den = &f.den;
    let dd = den.degree().unwrap();
    let lc = den.leading_coeff().unwrap().clone();
    // remainder = rem(x) * x^(-shift)
    let mut rem = f.num.clone();
    let mut shift: i64 = 0;
    while let Some(dr) = rem.degree() {
        if dr < dd {
            rem = rem.shift(dd - dr);
            shift += (dd - dr) as i64;
        }
        let dr = rem.degree().unwrap();
        let c = rem.leading_coeff().unwrap() / &lc;
        let exponent = dr as i64 - dd as i64 - shift;
        let sub = den.shift(dr - dd).scale(&c);
        rem = &rem - &sub;
        if !visit(exponent, c) {
            return;
        }
    }
}

/// First `count` nonzero terms `(exponent, coefficient)` of the expansion
/// of `f` in descending powers of its argument. Fewer terms are returned
/// when the expansion terminates.
pub fn expansion_at_infinity(f: &RationalFunction, count: usize) -> Vec<(i64, Rational)> {
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    expand(f, |e, c| {
        out.push((e, c));
        out.len() < count
    });
    out
}

/// Coefficient of `x^exponent` in the expansion of `f` at infinity.
pub fn laurent_coefficient(f: &RationalFunction, exponent: i64) -> Rational {
    let mut found = Rational::zero();
    expand(f, |e, c| {
        if e == exponent {
            found = c;
        }
        e > exponent
    });
    found
}

impl RationalFunction {
    /// Sum of the given descending terms as a rational function.
    pub fn from_laurent_terms(terms: &[(i64, Rational)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, (e, c)| &acc + &Self::constant(c.clone()).mul_power(*e))
    }
}
