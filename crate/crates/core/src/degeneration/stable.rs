use num_traits::Zero;

use super::{ConfigError, TestConfiguration, WeightedSeries};
use crate::exact::{factorial, interpolate_poly, Rational, UniPoly};

/// Exact polynomials governing the per-degree data once it has stabilized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticModel {
    /// `N(m) = dim V_m`, the Hilbert polynomial `chi`.
    pub n_poly: UniPoly,
    /// `B(m)`, total weight on `V_m`.
    pub b_poly: UniPoly,
    /// `n(m)`, dimension of the weight-0 part of `V_m`.
    pub w_poly: UniPoly,
    /// Least degree from which `N` and `B` agree with their polynomials.
    pub m0: usize,
    /// Least degree from which `n` agrees with its polynomial.
    pub w_m0: usize,
    pub dimension: usize,
    /// Leading coefficient of `N`.
    pub a_n: Rational,
    /// `n! * a_n`, the degree `c_1(L)^n[X]`.
    pub intersection_number: Rational,
    /// `deg B > n`: the input is outside the regime where `B` grows like `N`.
    pub b_degree_exceeds: bool,
}

impl AsymptoticModel {
    /// `max(m0, w_m0)`: all three polynomials are valid from here on.
    pub fn valid_from(&self) -> usize {
        self.m0.max(self.w_m0)
    }
}

/// Interpolates `values[m]` (for `m >= bound`) by a polynomial of degree at
/// most `max_degree`, then walks down to the least `m0 >= 1` from which the
/// polynomial matches every value.
fn fit_from(values: &[Rational], bound: usize, max_degree: usize) -> Result<(UniPoly, usize), ConfigError> {
    let points: Vec<(Rational, Rational)> =
        (bound..values.len()).map(|m| (Rational::from_integer(m.into()), values[m].clone())).collect();
    let poly = interpolate_poly(&points, max_degree)?;
    let mut m0 = bound.max(1);
    while m0 > 1 && poly.eval(&Rational::from_integer((m0 - 1).into())) == values[m0 - 1] {
        m0 -= 1;
    }
    Ok((poly, m0))
}

/// Hilbert polynomial of a monomial quotient from its series.
pub(crate) fn hilbert_polynomial(series: &WeightedSeries) -> Result<UniPoly, ConfigError> {
    let r = series.weights().len();
    let bound = series.stabilization_bound();
    let hs = series.histograms(bound + r + 2);
    let values: Vec<Rational> = hs.iter().map(|h| Rational::from_integer(h.total())).collect();
    Ok(fit_from(&values, bound, r)?.0)
}

/// Stabilized polynomials `N`, `B`, `n` of the central fiber together with
/// the stabilization degree and the leading Hilbert coefficient.
pub fn stable_polynomials(config: &TestConfiguration) -> Result<AsymptoticModel, ConfigError> {
    let series = config.series();
    let r = config.names().len();
    let bound = series.stabilization_bound();
    // degree <= r for B, r - 1 for N and n; two extra verification points
    let top = bound + r + 2;
    let hs = series.histograms(top);
    let col = |f: &dyn Fn(&super::WeightHistogram) -> num_bigint::BigInt| -> Vec<Rational> {
        hs.iter().map(|h| Rational::from_integer(f(h))).collect()
    };
    let (n_poly, m_n) = fit_from(&col(&|h| h.total()), bound, r)?;
    let (b_poly, m_b) = fit_from(&col(&|h| h.weight_sum()), bound, r)?;
    let (w_poly, w_m0) = fit_from(&col(&|h| h.zero_weight()), bound, r)?;

    let dimension = config.dimension();
    debug_assert_eq!(n_poly.degree(), Some(dimension));
    let a_n = n_poly.coeff(dimension);
    let intersection_number = &a_n * factorial(dimension);
    let b_degree_exceeds = b_poly.degree().is_some_and(|d| d > dimension);
    debug_assert!(!a_n.is_zero());
    Ok(AsymptoticModel {
        n_poly,
        b_poly,
        w_poly,
        m0: m_n.max(m_b),
        w_m0,
        dimension,
        a_n,
        intersection_number,
        b_degree_exceeds,
    })
}
