use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::TestConfiguration;
use crate::exact::Rational;
use crate::polyring::{u_weight, Monomial};

/// Weight data of `V_l = S^l(V) / I_l` for one degree `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub l: usize,
    /// `N_l = dim V_l`.
    pub big_n: u64,
    /// `n_l = dim W_l`, the weight-0 part.
    pub small_n: u64,
    /// weight `b` -> multiplicity
    pub weights: BTreeMap<u64, u64>,
    /// `B_l = sum of b_alpha`.
    pub b_sum: u64,
    /// `gamma_l = B_l / N_l`.
    pub gamma: Rational,
    /// `sum |b_alpha - gamma_l|`.
    pub norm: Rational,
    pub q: Option<Rational>,
    pub s: Option<Rational>,
}

impl DegreeProfile {
    /// Normalized weights `b_alpha - gamma_l` with multiplicities.
    pub fn normalized_weights(&self) -> Vec<(Rational, u64)> {
        self.weights.iter().map(|(&b, &m)| (Rational::from_integer(b.into()) - &self.gamma, m)).collect()
    }

    /// `sum_alpha (b_alpha - gamma_l)`, zero by construction.
    pub fn normalized_sum(&self) -> Rational {
        self.normalized_weights()
            .into_iter()
            .map(|(x, m)| x * Rational::from_integer(m.into()))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

/// Standard monomials of degree `l` for the central fiber.
pub(crate) fn standard_monomials(config: &TestConfiguration, l: usize) -> Vec<Monomial> {
    let lts = config.fiber_leading_monomials();
    Monomial::all_of_degree(config.names().len(), l as u32)
        .into_iter()
        .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
        .collect()
}

/// Enumerates the standard monomials of degree `l`, reads off their
/// weights, and derives `gamma_l` and the norm. `q` and `s` are left for
/// the invariants layer.
pub fn degree_profile(config: &TestConfiguration, l: usize) -> DegreeProfile {
    let mut weights: BTreeMap<u64, u64> = BTreeMap::new();
    for m in standard_monomials(config, l) {
        *weights.entry(u_weight(&m, config.weights())).or_default() += 1;
    }
    let big_n: u64 = weights.values().sum();
    let small_n = weights.get(&0).copied().unwrap_or(0);
    let b_sum: u64 = weights.iter().map(|(b, m)| b * m).sum();
    let gamma = if big_n == 0 { Rational::zero() } else { Rational::new(b_sum.into(), big_n.into()) };
    let norm = weights
        .iter()
        .map(|(&b, &m)| (Rational::from_integer(b.into()) - &gamma).abs() * Rational::from_integer(m.into()))
        .fold(Rational::zero(), |a, b| a + b);
    DegreeProfile { l, big_n, small_n, weights, b_sum, gamma, norm, q: None, s: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::{conic_double_line, cuspidal_cubic};
    use crate::exact::frac;

    #[test]
    fn cuspidal_degree_one() {
        let p = degree_profile(&cuspidal_cubic(), 1);
        assert_eq!((p.big_n, p.small_n, p.b_sum), (4, 3, 1));
        assert_eq!(p.gamma, frac(1, 4));
        assert_eq!(p.norm, frac(3, 2));
        assert!(p.normalized_sum().is_zero());
    }

    #[test]
    fn cuspidal_degree_two() {
        let p = degree_profile(&cuspidal_cubic(), 2);
        assert_eq!((p.big_n, p.small_n, p.b_sum), (7, 6, 1));
        assert_eq!(p.gamma, frac(1, 7));
        assert_eq!(p.norm, frac(12, 7));
    }

    #[test]
    fn conic_degree_three() {
        let p = degree_profile(&conic_double_line(), 3);
        assert_eq!((p.big_n, p.small_n, p.b_sum), (7, 4, 3));
        assert_eq!(p.gamma, frac(3, 7));
        assert_eq!(p.norm, frac(24, 7));
        let nw = p.normalized_weights();
        assert_eq!(nw, vec![(frac(-3, 7), 4), (frac(4, 7), 3)]);
    }

    #[test]
    fn enumeration_matches_series() {
        for c in [cuspidal_cubic(), conic_double_line()] {
            let hs = c.series().histograms(12);
            for (l, h) in hs.iter().enumerate().skip(1) {
                let p = degree_profile(&c, l);
                assert_eq!(h.total(), p.big_n.into());
                assert_eq!(h.weight_sum(), p.b_sum.into());
                assert_eq!(h.zero_weight(), p.small_n.into());
            }
        }
    }
}
