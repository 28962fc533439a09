use super::{Monomial, MultiPoly, PolyError};

/// Splitting of the coordinates into a fixed part `W` (weight 0) and a
/// moving part `W'` (strictly positive integer weights).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightAssignment {
    in_w: Vec<bool>,
    u: Vec<u64>,
}

impl WeightAssignment {
    /// `in_w[i]` marks coordinate `i` as a `W` coordinate; `u[i]` is its
    /// weight. `W` coordinates must carry weight 0 and `W'` coordinates a
    /// weight of at least 1; at least one `W` coordinate is required.
    pub fn new(in_w: Vec<bool>, u: Vec<u64>) -> Result<Self, PolyError> {
        if in_w.len() != u.len() {
            return Err(PolyError::Weights(format!(
                "partition has {} entries but {} weights given",
                in_w.len(),
                u.len()
            )));
        }
        if !in_w.iter().any(|&b| b) {
            return Err(PolyError::Weights("W must contain at least one coordinate".into()));
        }
        for (i, (&w, &x)) in in_w.iter().zip(&u).enumerate() {
            if w && x != 0 {
                return Err(PolyError::Weights(format!("W coordinate {i} has nonzero weight {x}")));
            }
            if !w && x == 0 {
                return Err(PolyError::Weights(format!("W' coordinate {i} needs a positive weight")));
            }
        }
        Ok(WeightAssignment { in_w, u })
    }

    /// Convenience: coordinates with weight 0 form `W`.
    pub fn from_weights(u: Vec<u64>) -> Result<Self, PolyError> {
        Self::new(u.iter().map(|&x| x == 0).collect(), u)
    }

    pub fn nvars(&self) -> usize {
        self.u.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.u
    }

    pub fn weights_i64(&self) -> Vec<i64> {
        self.u.iter().map(|&x| x as i64).collect()
    }

    pub fn in_w(&self, i: usize) -> bool {
        self.in_w[i]
    }

    pub fn w_coords(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.in_w[i]).collect()
    }

    pub fn w_prime_coords(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| !self.in_w[i]).collect()
    }

    /// Largest coordinate weight (`C_0`).
    pub fn max_weight(&self) -> u64 {
        self.u.iter().copied().max().unwrap_or(0)
    }

    /// Smallest positive coordinate weight, `None` when `W'` is empty.
    pub fn min_positive_weight(&self) -> Option<u64> {
        self.u.iter().copied().filter(|&x| x > 0).min()
    }

    pub fn is_trivial(&self) -> bool {
        self.u.iter().all(|&x| x == 0)
    }

    /// Multiplies every weight by `c >= 1`.
    pub fn scaled(&self, c: u64) -> Self {
        WeightAssignment { in_w: self.in_w.clone(), u: self.u.iter().map(|x| x * c).collect() }
    }
}

/// Weighted degree of `m`; zero exactly when `m` only involves `W`.
pub fn u_weight(m: &Monomial, u: &WeightAssignment) -> u64 {
    m.exponents().iter().zip(u.weights()).map(|(&e, &w)| e as u64 * w).sum()
}

/// Sum of the terms of `p` of maximal `u`-weight. This is the equation
/// that survives in the central fiber of the degeneration.
pub fn initial_form(p: &MultiPoly, u: &WeightAssignment) -> Result<MultiPoly, PolyError> {
    let top = p.terms().keys().map(|m| u_weight(m, u)).max().ok_or(PolyError::ZeroPolynomial)?;
    Ok(p.filter_terms(|m| u_weight(m, u) == top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn names() -> Vec<String> {
        ["Z0", "Z1", "Z2", "Z3"].iter().map(|s| s.to_string()).collect()
    }

    fn u1() -> WeightAssignment {
        WeightAssignment::from_weights(vec![0, 1, 0, 0]).unwrap()
    }

    #[test]
    fn weights_of_monomials() {
        assert_eq!(u_weight(&Monomial::new(vec![0, 2, 0, 0]), &u1()), 2);
        assert_eq!(u_weight(&Monomial::new(vec![1, 0, 1, 0]), &u1()), 0);
        // Z1 * Z0^(l-1), l = 5
        assert_eq!(u_weight(&Monomial::new(vec![4, 1, 0, 0]), &u1()), 1);
    }

    #[test]
    fn initial_forms() {
        let p = parse_polynomial("Z1^2 - Z0*Z2", &names()).unwrap();
        assert_eq!(initial_form(&p, &u1()).unwrap(), parse_polynomial("Z1^2", &names()).unwrap());
        let p = parse_polynomial("Z0*Z3 - Z1*Z2", &names()).unwrap();
        assert_eq!(initial_form(&p, &u1()).unwrap(), parse_polynomial("-Z1*Z2", &names()).unwrap());
        let p = parse_polynomial("Z2^3 - Z0*Z3^2", &names()).unwrap();
        assert_eq!(initial_form(&p, &u1()).unwrap(), p);
        assert_eq!(initial_form(&MultiPoly::zero(4), &u1()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn validation() {
        assert!(WeightAssignment::new(vec![true, false], vec![0, 0]).is_err());
        assert!(WeightAssignment::new(vec![true, false], vec![1, 1]).is_err());
        assert!(WeightAssignment::new(vec![false, false], vec![1, 1]).is_err());
        let u = WeightAssignment::new(vec![true, false, false], vec![0, 2, 3]).unwrap();
        assert_eq!(u.max_weight(), 3);
        assert_eq!(u.min_positive_weight(), Some(2));
        assert_eq!(u.w_prime_coords(), vec![1, 2]);
    }
}
