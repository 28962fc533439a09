//! Bigraded Hilbert series of a monomial ideal.
//!
//! For a monomial ideal `M` in `r` coordinates with weights `u`, the
//! quotient `S/M` has the series
//!
//! ```text
//! H(q, t) = sum_l q^l sum_{m standard, deg m = l} t^{u(m)} = K(q, t) / prod_i (1 - q t^{u_i})
//! ```
//!
//! where `K` is the specialised K-polynomial. `K` is computed by the
//! pivot-splitting recursion `K(M) = K(M + (p)) + p * K(M : p)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{Rational, UniPoly};
use crate::polyring::Monomial;

/// Sparse polynomial in `q` and `t` with integer coefficients, keyed by
/// `(q-degree, t-degree)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly(BTreeMap<(u32, u64), BigInt>);

impl BiPoly {
    fn one() -> Self {
        let mut m = BTreeMap::new();
        m.insert((0, 0), BigInt::one());
        BiPoly(m)
    }

    fn add_term(&mut self, key: (u32, u64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(key).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    fn add(&mut self, other: &BiPoly) {
        for (&k, c) in &other.0 {
            self.add_term(k, c.clone());
        }
    }

    fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (&(a, b), x) in &self.0 {
            for (&(c, d), y) in &other.0 {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }

    /// Multiplies by the monomial `q^a t^b`.
    fn shift(&self, a: u32, b: u64) -> BiPoly {
        BiPoly(self.0.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect())
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u64), BigInt> {
        &self.0
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.0.keys().map(|k| k.0).max()
    }

    /// `K(q, t0)` for `t0` in {0, 1}, as a polynomial in `q`.
    fn at_t(&self, t_is_one: bool) -> UniPoly {
        let deg = self.q_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); deg];
        for (&(a, b), c) in &self.0 {
            if t_is_one || b == 0 {
                coeffs[a as usize] += Rational::from_integer(c.clone());
            }
        }
        UniPoly::new(coeffs)
    }
}

fn mono_key(m: &Monomial, weights: &[u64]) -> (u32, u64) {
    let w = m.exponents().iter().zip(weights).map(|(&e, &x)| e as u64 * x).sum();
    (m.degree(), w)
}

/// Removes generators divisible by other generators, and duplicates.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn k_polynomial(gens: Vec<Monomial>, weights: &[u64]) -> BiPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return BiPoly::one();
    }
    let nvars = gens[0].nvars();
    // occurrence count per coordinate
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for i in g.support() {
            count[i] += 1;
        }
    }
    let pivot_var = (0..nvars).filter(|&i| count[i] >= 2).max_by_key(|&i| (count[i], std::cmp::Reverse(i)));
    let Some(i) = pivot_var else {
        // pairwise coprime generators: K = prod (1 - m)
        let mut acc = BiPoly::one();
        for g in &gens {
            let mut f = BiPoly::one();
            f.add_term(mono_key(g, weights), -BigInt::one());
            acc = acc.mul(&f);
        }
        return acc;
    };
    let e = gens.iter().map(|g| g.exponents()[i]).filter(|&x| x > 0).min().unwrap();
    let pivot = Monomial::var_power(nvars, i, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot)).unwrap()).collect();

    let mut k = k_polynomial(with_pivot, weights);
    let (a, b) = mono_key(&pivot, weights);
    k.add(&k_polynomial(colon, weights).shift(a, b));
    k
}

/// Weight distribution of the standard monomials in one degree:
/// `counts[b]` is the number of standard monomials of weight `b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightHistogram {
    pub counts: Vec<BigInt>,
}

impl WeightHistogram {
    /// Number of standard monomials (`N_l`).
    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// Sum of the weights (`B_l`), the `t`-derivative at `t = 1`.
    pub fn weight_sum(&self) -> BigInt {
        self.counts.iter().enumerate().map(|(b, c)| c * BigInt::from(b)).sum()
    }

    /// Number of weight-0 standard monomials (`n_l`).
    pub fn zero_weight(&self) -> BigInt {
        self.counts.first().cloned().unwrap_or_default()
    }
}

/// Exact bigraded Hilbert series of `S / M` for a monomial ideal `M`.
#[derive(Clone, Debug)]
pub struct WeightedSeries {
    weights: Vec<u64>,
    numerator: BiPoly,
}

impl WeightedSeries {
    pub fn new(generators: &[Monomial], weights: &[u64]) -> Self {
        WeightedSeries { weights: weights.to_vec(), numerator: k_polynomial(generators.to_vec(), weights) }
    }

    /// The numerator `K(q, t)` over `prod_i (1 - q t^{u_i})`.
    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weight histograms for degrees `0..=max_degree`, by expanding the
    /// denominator factors one at a time.
    pub fn histograms(&self, max_degree: usize) -> Vec<WeightHistogram> {
        // table[l][b]: coefficient of q^l t^b
        let width = |l: usize| l * self.weights.iter().copied().max().unwrap_or(0) as usize + 1;
        let kt = self.numerator.terms().keys().map(|&(_, b)| b as usize).max().unwrap_or(0);
        let mut table: Vec<Vec<BigInt>> = (0..=max_degree).map(|l| vec![BigInt::zero(); width(l) + kt]).collect();
        for (&(a, b), c) in self.numerator.terms() {
            if (a as usize) <= max_degree {
                table[a as usize][b as usize] += c;
            }
        }
        // dividing by (1 - q t^u): G_l = F_l + t^u G_{l-1}
        for &u in &self.weights {
            let u = u as usize;
            for l in 1..=max_degree {
                let (lo, hi) = table.split_at_mut(l);
                let prev = &lo[l - 1];
                let cur = &mut hi[0];
                for (b, c) in prev.iter().enumerate() {
                    if !c.is_zero() {
                        cur[b + u] += c;
                    }
                }
            }
        }
        table
            .into_iter()
            .map(|mut row| {
                while row.last().is_some_and(Zero::is_zero) {
                    row.pop();
                }
                debug_assert!(row.iter().all(|c| !c.is_negative()));
                WeightHistogram { counts: row }
            })
            .collect()
    }

    /// Hilbert numerator `K(q, 1)` over `(1 - q)^r`.
    pub fn hilbert_numerator(&self) -> UniPoly {
        self.numerator.at_t(true)
    }

    /// Degree from which `N_l`, `B_l` and `n_l` are all given by
    /// polynomials in `l`.
    pub fn stabilization_bound(&self) -> usize {
        let r = self.weights.len() as i64;
        let zero_coords = self.weights.iter().filter(|&&u| u == 0).count() as i64;
        let k1 = self.numerator.q_degree().map_or(0, |d| d as i64);
        let k0 = self.numerator.at_t(false).degree().map_or(0, |d| d as i64);
        (k1 - r + 1).max(k0 - zero_coords + 1).max(0) as usize
    }

    /// True when `S/M` has finite length, i.e. the Hilbert function is
    /// zero in all large degrees.
    pub fn hilbert_function_eventually_zero(&self) -> bool {
        let mut k = self.hilbert_numerator();
        let one_minus_q = UniPoly::from_ints(&[1, -1]);
        for _ in 0..self.weights.len() {
            let (quot, rem) = k.div_rem(&one_minus_q);
            if !rem.is_zero() {
                return false;
            }
            k = quot;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn zero_ideal_in_one_variable() {
        let s = WeightedSeries::new(&[], &[0]);
        for h in s.histograms(6) {
            assert_eq!(h.total(), BigInt::from(1));
        }
    }

    #[test]
    fn cuspidal_fiber_counts() {
        // leading terms of the cuspidal fiber: Z1^2, Z1Z2, Z1Z3, Z2^3
        let lts = [m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 1, 0, 1]), m(&[0, 0, 3, 0])];
        let s = WeightedSeries::new(&lts, &[0, 1, 0, 0]);
        let hs = s.histograms(10);
        for (l, h) in hs.iter().enumerate().skip(1) {
            assert_eq!(h.total(), BigInt::from(3 * l + 1));
            assert_eq!(h.weight_sum(), BigInt::from(1));
            assert_eq!(h.zero_weight(), BigInt::from(3 * l));
        }
        assert_eq!(hs[0].total(), BigInt::from(1));
    }

    #[test]
    fn principal_moving_coordinate() {
        let s = WeightedSeries::new(&[m(&[0, 1])], &[0, 1]);
        for h in s.histograms(5) {
            assert_eq!(h.weight_sum(), BigInt::from(0));
            assert_eq!(h.total(), BigInt::from(1));
        }
    }

    #[test]
    fn finite_length_detection() {
        let artinian = WeightedSeries::new(&[m(&[2, 0]), m(&[0, 3])], &[0, 0]);
        assert!(artinian.hilbert_function_eventually_zero());
        let curve = WeightedSeries::new(&[m(&[2, 0, 0])], &[0, 0, 0]);
        assert!(!curve.hilbert_function_eventually_zero());
    }
}
