//! Chow weights, the Donaldson-Futaki coefficient and the refined
//! sequence `s_l = l q_l / ||psi_l||` with its limit class.
//!
//! The Chow weight of the central fiber in `P(V_l)` is taken to be
//! `(n+1)!` times the `k^{n+1}` coefficient of the total weight of the
//! trace-free action `psi_l^SL` on `V_{lk}`:
//!
//! ```text
//! e_l(k) = B_{lk} - k * gamma_l * N_{lk}
//! ```
//!
//! which is a polynomial in `k` once `lk` is past the stabilization degree.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::degeneration::{degree_profile, AsymptoticModel, ConfigError, DegreeProfile, TestConfiguration};
use crate::exact::{
    factorial, interpolate_poly, laurent_coefficient, limit_at_infinity, ExactError, LimitClass, Rational,
    RationalFunction, UniPoly,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("Chow weight fit for l = {l} failed up to kmax = {kmax}: {source}")]
    FitMismatch { l: usize, kmax: usize, source: ExactError },
    #[error("the action is trivial in degree {l} (||psi_l|| = 0); the refined sequence is undefined")]
    TrivialAction { l: usize },
    #[error("the Chow weight grows faster than l^n; no finite Donaldson-Futaki coefficient")]
    UnboundedFutaki,
    #[error("degree l must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn r(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Polynomial fit of the total `psi_l^SL` weight on `V_{lk}` as a function
/// of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowFit {
    pub l: usize,
    /// `(k, e_l(k))` for every sampled `k`.
    pub points: Vec<(usize, Rational)>,
    /// Fitted polynomial in `k` of degree at most `n + 1`.
    pub poly: UniPoly,
    pub q: Rational,
}

fn sweep_once(config: &TestConfiguration, l: usize, k_start: usize, kmax: usize) -> Result<ChowFit, ExactError> {
    let n = config.dimension();
    let hs = config.series().histograms(l * kmax);
    let gamma = Rational::new(hs[l].weight_sum(), hs[l].total());
    let points: Vec<(usize, Rational)> = (k_start..=kmax)
        .map(|k| {
            let h = &hs[l * k];
            let e = Rational::from_integer(h.weight_sum()) - r(k) * &gamma * Rational::from_integer(h.total());
            (k, e)
        })
        .collect();
    let as_rat: Vec<(Rational, Rational)> = points.iter().map(|(k, e)| (r(*k), e.clone())).collect();
    let poly = interpolate_poly(&as_rat, n + 1)?;
    let q = factorial(n + 1) * poly.coeff(n + 1);
    Ok(ChowFit { l, points, poly, q })
}

/// Chow weight `q_l` from sampled degrees `l k`, `k` up to `kmax`.
///
/// Sampling starts at the first `k` with `l k >= m0`. `kmax` is raised to
/// at least `ceil(m0 / l) + n + 3` so the fit always has two verification
/// points. A failed verification raises `kmax` once before giving up.
pub fn chow_weight_sweep(config: &TestConfiguration, l: usize, kmax: Option<usize>) -> Result<ChowFit, InvariantError> {
    if l == 0 {
        return Err(InvariantError::ZeroDegree);
    }
    let model = config.model()?;
    let n = config.dimension();
    let k_start = model.m0.div_ceil(l).max(1);
    let min_kmax = k_start + n + 3;
    let kmax = kmax.unwrap_or(min_kmax).max(min_kmax);
    match sweep_once(config, l, k_start, kmax) {
        Ok(fit) => Ok(fit),
        Err(_) => {
            let raised = 2 * kmax;
            sweep_once(config, l, k_start, raised).map_err(|source| InvariantError::FitMismatch {
                l,
                kmax: raised,
                source,
            })
        }
    }
}

/// Closed form of the Chow weight, valid for `l >= m0`:
///
/// `q(l) = (n+1)! * ( b_{n+1} l^{n+1} - (B(l)/N(l)) * a_n l^n )`
///
/// where `b_{n+1}` is the `m^{n+1}` coefficient of `B(m)`.
pub fn chow_weight_symbolic(model: &AsymptoticModel) -> RationalFunction {
    let n = model.dimension;
    let gamma = RationalFunction::new(model.b_poly.clone(), model.n_poly.clone()).expect("N is nonzero");
    let lead_b = RationalFunction::from_poly(UniPoly::monomial(model.b_poly.coeff(n + 1), n + 1));
    let lead_n = RationalFunction::from_poly(UniPoly::monomial(model.a_n.clone(), n));
    (&lead_b - &(&gamma * &lead_n)).scale(&factorial(n + 1))
}

/// Donaldson-Futaki coefficient and higher expansion coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FutakiCoefficients {
    /// `F̄_1`, the limit of `q(l) / ((n+1)! c_1(L)^n[X] l^n)`.
    pub df1: Rational,
    /// `F̄_2, F̄_3, ...`: coefficients of `l^{n-1}, l^{n-2}, ...` in the
    /// same normalized expansion. These are expansion coefficients of the
    /// exact `q(l)`, not independently certified invariants.
    pub higher: Vec<Rational>,
}

/// Reads `F̄_1` and `count` further coefficients off the exact `q(l)`.
pub fn donaldson_futaki(
    model: &AsymptoticModel,
    q: &RationalFunction,
    count: usize,
) -> Result<FutakiCoefficients, InvariantError> {
    let n = model.dimension;
    let norm = factorial(n + 1) * &model.intersection_number;
    let normalized = q.scale(&norm.recip());
    let df1 = match limit_at_infinity(&normalized.mul_power(-(n as i64))) {
        LimitClass::Finite(v) => v,
        _ => return Err(InvariantError::UnboundedFutaki),
    };
    debug_assert_eq!(df1, laurent_coefficient(&normalized, n as i64));
    let higher = (1..=count).map(|i| laurent_coefficient(&normalized, n as i64 - i as i64)).collect();
    Ok(FutakiCoefficients { df1, higher })
}

/// Cross-check for `F̄_1`: the `l^{-1}` coefficient of `-B(l) / (l N(l))`.
///
/// `F̄_1` is normalized by `c_1(L)^n[X] = n! a_n` while this expansion is
/// normalized by `a_n`, so the two differ by a factor `n!` (equal on curves).
pub fn donaldson_diagnostic(model: &AsymptoticModel) -> Rational {
    let f = RationalFunction::new(-&model.b_poly, model.n_poly.shift(1)).expect("N is nonzero");
    laurent_coefficient(&f, -1)
}

/// True when `p(l) >= 0` for every integer `l >= from`.
fn nonnegative_from(p: &UniPoly, from: usize) -> bool {
    let Some(lead) = p.leading_coeff() else {
        return true;
    };
    if lead.is_negative() {
        return false;
    }
    // Cauchy bound on the real roots
    let bound = p.coeffs().iter().map(|c| (c / lead).abs()).fold(Rational::zero(), |a, b| a.max(b)) + Rational::one();
    let top = bound.ceil().to_integer();
    let mut l = r(from);
    while l.to_integer() <= top {
        if p.eval(&l).is_negative() {
            return false;
        }
        l += Rational::one();
    }
    true
}

/// Closed forms of `||psi||(l)` and `s(l)` when certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicRefined {
    /// `||psi||(l) = 2 B(l) n(l) / N(l)`.
    pub norm: RationalFunction,
    /// `s(l) = l q(l) / ||psi||(l)`.
    pub s: RationalFunction,
    /// Smallest degree from which both closed forms hold.
    pub valid_from: usize,
}

/// The refined sequence: per-degree values and, when certified, a closed
/// form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedSequence {
    pub values: Vec<(usize, Rational)>,
    pub symbolic: Option<SymbolicRefined>,
    /// Why the closed form is unavailable, when it is.
    pub symbolic_note: Option<String>,
}

/// Closed form of the refined sequence.
///
/// `sum |b_alpha - gamma|` equals `2 B n / N` exactly when no positive
/// weight is below `gamma`; since positive weights are at least the
/// smallest coordinate weight `c`, it suffices that `c N(l) - B(l) >= 0`
/// for all `l >= max(m0, w_m0)`, which is certified exactly.
pub fn refined_closed_form(
    config: &TestConfiguration,
    q: &RationalFunction,
) -> Result<Result<SymbolicRefined, String>, InvariantError> {
    let model = config.model()?;
    let valid_from = model.valid_from();
    if model.b_poly.is_zero() {
        return Err(InvariantError::TrivialAction { l: valid_from });
    }
    let c = config.weights().min_positive_weight().unwrap_or(1);
    let slack = &model.n_poly.scale(&r(c as usize)) - &model.b_poly;
    if !nonnegative_from(&slack, valid_from) {
        return Ok(Err(format!(
            "gamma(l) exceeds the smallest positive weight {c} for some l >= {valid_from}; per-degree values only"
        )));
    }
    let two_b_n = (&model.b_poly * &model.w_poly).scale(&r(2));
    let norm = RationalFunction::new(two_b_n, model.n_poly.clone())?;
    if norm.is_zero() {
        return Err(InvariantError::TrivialAction { l: valid_from });
    }
    let s = &q.mul_power(1) / &norm;
    Ok(Ok(SymbolicRefined { norm, s, valid_from }))
}

/// `s_l = l q_l / ||psi_l||` for every profile with a Chow weight.
pub fn refined_values(profiles: &[DegreeProfile]) -> Result<Vec<(usize, Rational)>, InvariantError> {
    profiles
        .iter()
        .filter_map(|p| p.q.as_ref().map(|q| (p, q)))
        .map(|(p, q)| {
            if p.norm.is_zero() {
                Err(InvariantError::TrivialAction { l: p.l })
            } else {
                Ok((p.l, r(p.l) * q / &p.norm))
            }
        })
        .collect()
}

pub fn refined_sequence(
    config: &TestConfiguration,
    q: &RationalFunction,
    profiles: &[DegreeProfile],
) -> Result<RefinedSequence, InvariantError> {
    let values = refined_values(profiles)?;
    let (symbolic, symbolic_note) = match refined_closed_form(config, q)? {
        Ok(s) => (Some(s), None),
        Err(note) => (None, Some(note)),
    };
    Ok(RefinedSequence { values, symbolic, symbolic_note })
}

/// Limit class of `F_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum F1Class {
    /// Decided exactly from the closed form of `s(l)`.
    Exact(LimitClass),
    /// Guessed from the trend of finitely many values.
    Heuristic(LimitClass),
    Inconclusive,
}

impl fmt::Display for F1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            F1Class::Exact(c) => write!(f, "{c}"),
            F1Class::Heuristic(c) => write!(f, "{c} (heuristic)"),
            F1Class::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

/// Input to the limit classification.
pub enum RefinedInput<'a> {
    Symbolic(&'a RationalFunction),
    Values(&'a [(usize, Rational)]),
}

/// Classifies `lim s_l`. The symbolic path is exact; the numeric path
/// looks at the last six values and only commits when the trend is
/// unambiguous.
pub fn classify_f1(input: RefinedInput<'_>) -> F1Class {
    match input {
        RefinedInput::Symbolic(s) => F1Class::Exact(limit_at_infinity(s)),
        RefinedInput::Values(v) => {
            if v.len() < 6 {
                return F1Class::Inconclusive;
            }
            let tail: Vec<&Rational> = v[v.len() - 6..].iter().map(|(_, s)| s).collect();
            let diffs: Vec<Rational> = tail.windows(2).map(|w| w[1] - w[0]).collect();
            let first = diffs[0].abs();
            let last = diffs[diffs.len() - 1].abs();
            if diffs.iter().all(Zero::is_zero) {
                F1Class::Heuristic(LimitClass::Finite(tail[5].clone()))
            } else if last * r(2) < first {
                // increments are decaying; could converge or diverge slowly
                F1Class::Inconclusive
            } else if diffs.iter().all(Signed::is_negative) {
                F1Class::Heuristic(LimitClass::MinusInfinity)
            } else if diffs.iter().all(Signed::is_positive) {
                F1Class::Heuristic(LimitClass::PlusInfinity)
            } else {
                F1Class::Inconclusive
            }
        }
    }
}

/// All invariants of a configuration for degrees `1..=lmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    /// Per-degree data with `q` and `s` filled in.
    pub rows: Vec<DegreeProfile>,
    pub model: AsymptoticModel,
    /// Closed-form Chow weight `q(l)`.
    pub q: RationalFunction,
    pub futaki: FutakiCoefficients,
    /// `l^{-1}` coefficient of `-B(l)/(l N(l))`.
    pub donaldson_diagnostic: Rational,
    pub refined: RefinedSequence,
    pub f1: F1Class,
    /// Degrees where the sweep and closed-form Chow weights differ (should
    /// be empty).
    pub sweep_mismatches: Vec<usize>,
}

/// Number of higher expansion coefficients reported.
pub const HIGHER_COEFFICIENTS: usize = 3;

pub fn analyze_invariants(
    config: &TestConfiguration,
    lmax: usize,
    kmax: Option<usize>,
) -> Result<InvariantReport, InvariantError> {
    let model = config.model()?.clone();
    let q = chow_weight_symbolic(&model);
    let futaki = donaldson_futaki(&model, &q, HIGHER_COEFFICIENTS)?;
    let donaldson = donaldson_diagnostic(&model);

    let mut rows = Vec::with_capacity(lmax);
    let mut sweep_mismatches = Vec::new();
    for l in 1..=lmax {
        let mut p = degree_profile(config, l);
        let fit = chow_weight_sweep(config, l, kmax)?;
        if l >= model.m0 && q.eval(&r(l)).as_ref() != Some(&fit.q) {
            sweep_mismatches.push(l);
        }
        p.q = Some(fit.q);
        rows.push(p);
    }
    let refined = refined_sequence(config, &q, &rows)?;
    for (row, (_, s)) in rows.iter_mut().zip(&refined.values) {
        row.s = Some(s.clone());
    }
    let f1 = match &refined.symbolic {
        Some(sym) => classify_f1(RefinedInput::Symbolic(&sym.s)),
        None => classify_f1(RefinedInput::Values(&refined.values)),
    };
    Ok(InvariantReport { rows, model, q, futaki, donaldson_diagnostic: donaldson, refined, f1, sweep_mismatches })
}
