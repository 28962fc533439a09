use std::fmt;

use super::{degree_profile, ConfigError, IsomorphismDiagnostic, TestConfiguration, WeightedSeries};
use crate::exact::{interpolate_poly, Rational, UniPoly};
use crate::polyring::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Set-theoretic comparison of the central fiber with `Phi_W(X)`,
/// certified up to a degree/power cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFiberCheck {
    pub status: CheckStatus,
    /// Reduced generators of `J`, the ideal of `Phi_W(X)` in `P(V)`.
    pub image_generators: Vec<String>,
    /// For each generator `g` of `J`, the least `m <= cap` with `g^m ∈ I`.
    pub powers: Vec<Option<u32>>,
    /// Every generator of `I` of degree at most `cap` lies in `J`.
    pub fiber_in_image: bool,
    pub cap: usize,
}

/// Growth of `N_l - n_l`, expected to have degree at most `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthCheck {
    pub status: CheckStatus,
    /// Exact polynomial `N(l) - n(l)`, fitted from enumerated degrees.
    pub difference: Option<UniPoly>,
    /// Its degree; `None` for the zero polynomial or when not determined.
    pub degree: Option<usize>,
    pub dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessCheck {
    pub status: CheckStatus,
    /// Degrees `1..=through` were compared.
    pub through: usize,
    pub first_mismatch: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub reduced_fiber: ReducedFiberCheck,
    pub growth: GrowthCheck,
    pub flatness: FlatnessCheck,
    pub isomorphism: IsomorphismDiagnostic,
}

/// Runs the reduced-fiber, growth and flatness checks with degrees and
/// powers bounded by `cap`.
pub fn structural_checks(config: &TestConfiguration, cap: usize) -> Result<StructuralReport, ConfigError> {
    if cap < 2 {
        return Err(ConfigError::CapTooSmall(cap));
    }
    let profiles: Vec<_> = (1..=cap).map(|l| degree_profile(config, l)).collect();
    Ok(StructuralReport {
        reduced_fiber: reduced_fiber(config, cap)?,
        growth: growth(config, &profiles)?,
        flatness: flatness(config, &profiles)?,
        isomorphism: config.isomorphism_diagnostic().clone(),
    })
}

fn reduced_fiber(config: &TestConfiguration, cap: usize) -> Result<ReducedFiberCheck, ConfigError> {
    let fiber = config.central_fiber();
    let image = config.image_ideal();
    let fiber_gb = fiber.groebner(&MonomialOrder::Grevlex)?;
    let image_gb = image.groebner(&MonomialOrder::Grevlex)?;

    let mut inconclusive = false;
    let mut fiber_in_image = true;
    for g in &fiber_gb.generators {
        if g.degree().unwrap_or(0) as usize > cap {
            inconclusive = true;
        } else if !image_gb.contains(g) {
            fiber_in_image = false;
        }
    }

    let mut powers = Vec::with_capacity(image_gb.generators.len());
    for g in &image_gb.generators {
        let mut power = g.clone();
        let mut found = None;
        for m in 1..=cap as u32 {
            if fiber_gb.contains(&power) {
                found = Some(m);
                break;
            }
            power = &power * g;
        }
        if found.is_none() {
            inconclusive = true;
        }
        powers.push(found);
    }

    let status = if !fiber_in_image {
        CheckStatus::Fail
    } else if inconclusive {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Pass
    };
    Ok(ReducedFiberCheck {
        status,
        image_generators: image_gb.generators.iter().map(|g| g.to_string_with(config.names())).collect(),
        powers,
        fiber_in_image,
        cap,
    })
}

fn growth(config: &TestConfiguration, profiles: &[super::DegreeProfile]) -> Result<GrowthCheck, ConfigError> {
    let model = config.model()?;
    let r = config.names().len();
    let start = model.valid_from();
    let points: Vec<(Rational, Rational)> = profiles
        .iter()
        .filter(|p| p.l >= start)
        .map(|p| (Rational::from_integer(p.l.into()), Rational::from_integer((p.big_n - p.small_n).into())))
        .collect();
    let dimension = config.dimension();
    // need degree + 1 fit points plus one verification point
    if points.len() < r + 1 {
        return Ok(GrowthCheck { status: CheckStatus::Inconclusive, difference: None, degree: None, dimension });
    }
    let difference = interpolate_poly(&points, r - 1)?;
    debug_assert_eq!(difference, &model.n_poly - &model.w_poly);
    let degree = difference.degree();
    let ok = match degree {
        None => true,
        Some(d) => (d as i64) < dimension as i64,
    };
    Ok(GrowthCheck {
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        difference: Some(difference),
        degree,
        dimension,
    })
}

fn flatness(config: &TestConfiguration, profiles: &[super::DegreeProfile]) -> Result<FlatnessCheck, ConfigError> {
    let nvars = config.names().len();
    let x_series = WeightedSeries::new(&config.ideal().leading_monomials()?, &vec![0; nvars]);
    let through = profiles.len();
    let hx = x_series.histograms(through);
    let first_mismatch = profiles.iter().find(|p| hx[p.l].total() != p.big_n.into()).map(|p| p.l);
    Ok(FlatnessCheck {
        status: if first_mismatch.is_none() { CheckStatus::Pass } else { CheckStatus::Fail },
        through,
        first_mismatch,
    })
}
