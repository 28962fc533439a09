//! The test configuration induced by a one-parameter subgroup that fixes
//! `W` and scales `W'` with positive weights, its central fiber, per-degree
//! weight data and the stabilized polynomials behind the asymptotics.

mod checks;
mod profile;
pub mod series;
mod stable;

pub use checks::{structural_checks, CheckStatus, FlatnessCheck, GrowthCheck, ReducedFiberCheck, StructuralReport};
pub use profile::{degree_profile, DegreeProfile};
pub use series::{WeightHistogram, WeightedSeries};
pub use stable::{stable_polynomials, AsymptoticModel};

use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::{ExactError, Rational};
use crate::groebner::{eliminate, initial_ideal, is_base_point_free, GroebnerError, IdealHandle};
use crate::polyring::{Monomial, MultiPoly, PolyError, WeightAssignment};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("W is not base-point free: no power of {witness} lies in I_X + (W)")]
    NotBasePointFree { witness: String },
    #[error("W' is empty: the one-parameter subgroup acts trivially")]
    EmptyWPrime,
    #[error("W must contain at least one coordinate")]
    EmptyW,
    #[error("unknown coordinate '{0}'")]
    UnknownCoordinate(String),
    #[error("duplicate coordinate name '{0}'")]
    DuplicateCoordinate(String),
    #[error("ideal of X has no generators")]
    EmptyIdeal,
    #[error("stated dimension {stated} disagrees with the Hilbert polynomial degree {computed}")]
    DimensionMismatch { stated: usize, computed: usize },
    #[error("Hilbert polynomial of the ideal is zero: the variety is empty")]
    EmptyVariety,
    #[error("central fiber is not flat: Hilbert functions differ in degree {degree}")]
    NotFlat { degree: usize },
    #[error("check cap must be at least 2, got {0}")]
    CapTooSmall(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Whether `Phi_W : X -> Phi_W(X)` is known not to be an isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsomorphismDiagnostic {
    /// Image degree differs from the degree of `X`, so `Phi_W` has degree > 1.
    NotIsomorphic { degree_x: Rational, degree_image: Rational },
    /// Degrees agree; non-isomorphism is assumed, not verified.
    Unverified { degree: Rational },
}

/// Validated input data plus the computed central fiber.
#[derive(Debug)]
pub struct TestConfiguration {
    names: Vec<String>,
    ideal: IdealHandle,
    weights: WeightAssignment,
    dimension: usize,
    central_fiber: IdealHandle,
    fiber_leading: Vec<Monomial>,
    series: WeightedSeries,
    image_ideal: IdealHandle,
    isomorphism: IsomorphismDiagnostic,
    model: OnceLock<Result<AsymptoticModel, ConfigError>>,
}

impl TestConfiguration {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }

    pub fn weights(&self) -> &WeightAssignment {
        &self.weights
    }

    /// `n = dim X`.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Ideal `I` of the central fiber.
    pub fn central_fiber(&self) -> &IdealHandle {
        &self.central_fiber
    }

    /// Leading monomials of the central fiber; standard monomials with
    /// respect to them form a weight basis of each `V_l`.
    pub fn fiber_leading_monomials(&self) -> &[Monomial] {
        &self.fiber_leading
    }

    /// Bigraded Hilbert series of the central fiber.
    pub fn series(&self) -> &WeightedSeries {
        &self.series
    }

    /// Ideal `J` of `Phi_W(X)` inside `P(V)`: `(I_X ∩ k[W]) + (W')`.
    pub fn image_ideal(&self) -> &IdealHandle {
        &self.image_ideal
    }

    pub fn isomorphism_diagnostic(&self) -> &IsomorphismDiagnostic {
        &self.isomorphism
    }

    /// Cached stabilized polynomials.
    pub fn model(&self) -> Result<&AsymptoticModel, ConfigError> {
        self.model.get_or_init(|| stable_polynomials(self)).as_ref().map_err(Clone::clone)
    }

    pub fn coordinate_name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

/// Validates the data `(coordinates, I_X, W, weights on W')` and computes
/// the central fiber as the weighted initial ideal.
///
/// `weights` lists `(coordinate, weight)` for the `W'` coordinates; every
/// coordinate not in `w` must appear there with weight at least 1.
pub fn build_configuration(
    names: &[String],
    generators: Vec<MultiPoly>,
    w: &[String],
    weights: &[(String, u64)],
    stated_dimension: Option<usize>,
) -> Result<TestConfiguration, ConfigError> {
    build_configuration_with_cap(names, generators, w, weights, stated_dimension, crate::groebner::DEFAULT_DEGREE_CAP)
}

pub fn build_configuration_with_cap(
    names: &[String],
    generators: Vec<MultiPoly>,
    w: &[String],
    weights: &[(String, u64)],
    stated_dimension: Option<usize>,
    degree_cap: u32,
) -> Result<TestConfiguration, ConfigError> {
    let nvars = names.len();
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(ConfigError::DuplicateCoordinate(a.clone()));
        }
    }
    let index =
        |s: &str| names.iter().position(|n| n == s).ok_or_else(|| ConfigError::UnknownCoordinate(s.to_string()));
    if generators.iter().all(MultiPoly::is_zero) {
        return Err(ConfigError::EmptyIdeal);
    }

    let mut in_w = vec![false; nvars];
    for s in w {
        in_w[index(s)?] = true;
    }
    if !in_w.iter().any(|&b| b) {
        return Err(ConfigError::EmptyW);
    }
    if in_w.iter().all(|&b| b) {
        return Err(ConfigError::EmptyWPrime);
    }
    let mut u = vec![0u64; nvars];
    for (s, x) in weights {
        let i = index(s)?;
        if in_w[i] && *x == 0 {
            continue;
        }
        u[i] = *x;
    }
    let weights = WeightAssignment::new(in_w, u)?;

    let ideal = IdealHandle::new(names.to_vec(), generators)?.with_degree_cap(degree_cap);
    let w_coords = weights.w_coords();
    let bpf = is_base_point_free(&ideal, &w_coords)?;
    if !bpf.free {
        let witness = bpf.witness.map(|i| names[i].clone()).unwrap_or_default();
        return Err(ConfigError::NotBasePointFree { witness });
    }

    let central_fiber = initial_ideal(&ideal, &weights)?;
    let fiber_leading = central_fiber.leading_monomials()?;
    let series = WeightedSeries::new(&fiber_leading, weights.weights());

    // Hilbert polynomial of X from its own leading terms, and flatness.
    let x_series = WeightedSeries::new(&ideal.leading_monomials()?, &vec![0; nvars]);
    let x_poly = stable::hilbert_polynomial(&x_series)?;
    let dimension = match x_poly.degree() {
        Some(d) => d,
        None => return Err(ConfigError::EmptyVariety),
    };
    if let Some(stated) = stated_dimension {
        if stated != dimension {
            return Err(ConfigError::DimensionMismatch { stated, computed: dimension });
        }
    }
    // Both Hilbert functions are polynomial past their bounds; agreement on
    // nvars + 1 further degrees proves agreement everywhere.
    let through = x_series.stabilization_bound().max(series.stabilization_bound()) + nvars + 1;
    let hx = x_series.histograms(through);
    let hf = series.histograms(through);
    if let Some(degree) = (0..=through).find(|&l| hx[l].total() != hf[l].total()) {
        return Err(ConfigError::NotFlat { degree });
    }

    // Phi_W(X) and the degree comparison against X.
    let mut image = eliminate(&ideal, &w_coords)?;
    image = image.plus(weights.w_prime_coords().into_iter().map(|i| MultiPoly::var(nvars, i)))?;
    let image_series = WeightedSeries::new(&image.leading_monomials()?, &vec![0; nvars]);
    let image_poly = stable::hilbert_polynomial(&image_series)?;
    let fact = crate::exact::factorial(dimension);
    let degree_x = x_poly.coeff(dimension) * &fact;
    let degree_image = image_poly.coeff(dimension) * &fact;
    let isomorphism = if degree_x != degree_image {
        IsomorphismDiagnostic::NotIsomorphic { degree_x, degree_image }
    } else {
        IsomorphismDiagnostic::Unverified { degree: degree_x }
    };

    Ok(TestConfiguration {
        names: names.to_vec(),
        ideal,
        weights,
        dimension,
        central_fiber,
        fiber_leading,
        series,
        image_ideal: image,
        isomorphism,
        model: OnceLock::new(),
    })
}

/// Parses generator strings and builds the configuration.
pub fn build_from_strings(
    names: &[&str],
    generators: &[&str],
    w: &[&str],
    weights: &[(&str, u64)],
) -> Result<TestConfiguration, ConfigError> {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let gens =
        generators.iter().map(|g| crate::polyring::parse_polynomial(g, &names)).collect::<Result<Vec<_>, _>>()?;
    let w: Vec<String> = w.iter().map(|s| s.to_string()).collect();
    let weights: Vec<(String, u64)> = weights.iter().map(|(s, x)| (s.to_string(), *x)).collect();
    build_configuration(&names, gens, &w, &weights, None)
}

/// The twisted cubic `P^1 -> P^3` degenerating to the cuspidal cubic.
pub fn cuspidal_cubic() -> TestConfiguration {
    build_from_strings(
        &["Z0", "Z1", "Z2", "Z3"],
        &["Z1^2 - Z0*Z2", "Z1*Z2 - Z0*Z3", "Z2^2 - Z1*Z3"],
        &["Z0", "Z2", "Z3"],
        &[("Z1", 1)],
    )
    .expect("built-in configuration is valid")
}

/// The plane conic degenerating to a double line.
pub fn conic_double_line() -> TestConfiguration {
    build_from_strings(&["Z0", "Z1", "Z2"], &["Z1^2 - Z0*Z2"], &["Z0", "Z2"], &[("Z1", 1)])
        .expect("built-in configuration is valid")
}
