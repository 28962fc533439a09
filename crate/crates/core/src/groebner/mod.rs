//! Ideal engine: reduced Gröbner bases, normal forms, weighted initial
//! ideals (flat limits), elimination and base-point tests.

mod buchberger;

pub use buchberger::{buchberger_with, normal_form, GroebnerBasis};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::degeneration::series::WeightedSeries;
use crate::polyring::{initial_form, Monomial, MonomialOrder, MultiPoly, PolyError, WeightAssignment};

pub const DEFAULT_DEGREE_CAP: u32 = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Gröbner computation aborted: S-pair of degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { cap: u32, degree: i64 },
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} lives in a ring with {found} coordinates, expected {expected}")]
    AmbientMismatch { index: usize, expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Homogeneous ideal in a polynomial ring with named coordinates.
///
/// Homogeneity is with respect to `grading` (all ones unless set
/// otherwise). Gröbner bases are computed on demand and cached per order;
/// the cache is shared between clones.
#[derive(Clone, Debug)]
pub struct IdealHandle {
    names: Vec<String>,
    generators: Vec<MultiPoly>,
    grading: Vec<i64>,
    degree_cap: u32,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl IdealHandle {
    /// Ideal in the standard grading. Zero generators are dropped.
    pub fn new(names: Vec<String>, generators: Vec<MultiPoly>) -> Result<Self, GroebnerError> {
        let grading = vec![1; names.len()];
        Self::with_grading(names, generators, grading)
    }

    pub fn with_grading(
        names: Vec<String>,
        generators: Vec<MultiPoly>,
        grading: Vec<i64>,
    ) -> Result<Self, GroebnerError> {
        let n = names.len();
        let mut gens = Vec::with_capacity(generators.len());
        for (index, g) in generators.into_iter().enumerate() {
            if g.nvars() != n {
                return Err(GroebnerError::AmbientMismatch { index, expected: n, found: g.nvars() });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_weighted_homogeneous(&grading) {
                return Err(GroebnerError::NotHomogeneous { index });
            }
            gens.push(g);
        }
        Ok(IdealHandle { names, generators: gens, grading, degree_cap: DEFAULT_DEGREE_CAP, cache: Arc::default() })
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse(names: &[String], generators: &[&str]) -> Result<Self, GroebnerError> {
        let gens =
            generators.iter().map(|s| crate::polyring::parse_polynomial(s, names)).collect::<Result<Vec<_>, _>>()?;
        Self::new(names.to_vec(), gens)
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = cap;
        self.cache = Arc::default();
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn is_standard_graded(&self) -> bool {
        self.grading.iter().all(|&g| g == 1)
    }

    /// Cached reduced Gröbner basis for `order`.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_with(&self.generators, self.nvars(), order, &self.grading, self.degree_cap)?);
        self.cache.lock().unwrap().insert(order.clone(), gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, p: &MultiPoly) -> Result<bool, GroebnerError> {
        Ok(self.groebner(&MonomialOrder::Grevlex)?.contains(p))
    }

    /// Leading monomials of the grevlex basis: a monomial ideal with the
    /// same Hilbert function.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>, GroebnerError> {
        Ok(self.groebner(&MonomialOrder::Grevlex)?.leading_monomials())
    }

    /// Same ideal with extra generators appended.
    pub fn plus(&self, extra: impl IntoIterator<Item = MultiPoly>) -> Result<Self, GroebnerError> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ok(Self::with_grading(self.names.clone(), gens, self.grading.clone())?.with_degree_cap(self.degree_cap))
    }

    /// Equality of ideals, decided by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &IdealHandle) -> Result<bool, GroebnerError> {
        Ok(self.groebner(&MonomialOrder::Grevlex)?.generators == other.groebner(&MonomialOrder::Grevlex)?.generators)
    }
}

/// Reduced Gröbner basis of `ideal` for `order`.
pub fn buchberger(ideal: &IdealHandle, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
    ideal.groebner(order)
}

/// The `u`-initial ideal: initial forms of a Gröbner basis for the
/// weight-refined order. This is the ideal of the flat limit of the
/// one-parameter family generated by the weights.
pub fn initial_ideal(ideal: &IdealHandle, u: &WeightAssignment) -> Result<IdealHandle, GroebnerError> {
    let order = MonomialOrder::WeightRefined(u.weights_i64());
    let gb = ideal.groebner(&order)?;
    let gens = gb.generators.iter().map(|g| initial_form(g, u)).collect::<Result<Vec<_>, _>>()?;
    Ok(IdealHandle::with_grading(ideal.names.clone(), gens, ideal.grading.clone())?.with_degree_cap(ideal.degree_cap))
}

/// `ideal ∩ k[keep]`, expressed in the same ambient ring.
pub fn eliminate(ideal: &IdealHandle, keep: &[usize]) -> Result<IdealHandle, GroebnerError> {
    let flags: Vec<bool> = (0..ideal.nvars()).map(|i| !keep.contains(&i)).collect();
    let order = MonomialOrder::elimination(&flags);
    let gb = ideal.groebner(&order)?;
    let gens: Vec<MultiPoly> =
        gb.generators.iter().filter(|g| g.terms().keys().all(|m| m.support().all(|i| !flags[i]))).cloned().collect();
    Ok(IdealHandle::with_grading(ideal.names.clone(), gens, ideal.grading.clone())?.with_degree_cap(ideal.degree_cap))
}

/// Result of a base-point test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePointReport {
    pub free: bool,
    /// A coordinate none of whose powers lies in the leading-term ideal of
    /// `I + (W)`; present exactly when `free` is false.
    pub witness: Option<usize>,
}

/// Decides whether the linear system spanned by the coordinates `w`
/// has no base points on the variety of `ideal`: the projective zero set
/// of `ideal + (w)` must be empty, i.e. its Hilbert function eventually
/// vanishes.
pub fn is_base_point_free(ideal: &IdealHandle, w: &[usize]) -> Result<BasePointReport, GroebnerError> {
    let n = ideal.nvars();
    let sum = ideal.plus(w.iter().map(|&i| MultiPoly::var(n, i)))?;
    let lts = sum.leading_monomials()?;
    let series = WeightedSeries::new(&lts, &vec![0; n]);
    let free = series.hilbert_function_eventually_zero();
    let unit = lts.iter().any(Monomial::is_one);
    let witness = if unit {
        None
    } else {
        (0..n).find(|&i| !lts.iter().any(|m| m.support().all(|j| j == i) && m.exponents()[i] > 0))
    };
    // The two descriptions of an empty zero set agree.
    debug_assert_eq!(free, witness.is_none());
    Ok(BasePointReport { free, witness: if free { None } else { witness } })
}
