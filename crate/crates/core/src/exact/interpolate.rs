use std::collections::HashSet;

use num_traits::{One, Zero};

use super::{render, ExactError, Rational, UniPoly};

/// Fits the unique polynomial of degree at most `degree_bound` through the
/// first `degree_bound + 1` points, then checks it against every remaining
/// point.
///
/// A mismatch on a verification point usually means the data is not
/// polynomial yet (for instance a Hilbert function sampled below its
/// stabilization degree).
pub fn interpolate_poly(points: &[(Rational, Rational)], degree_bound: usize) -> Result<UniPoly, ExactError> {
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(ExactError::TooFewPoints { needed, bound: degree_bound, got: points.len() });
    }
    let mut seen = HashSet::new();
    for (x, _) in points {
        if !seen.insert(x.clone()) {
            return Err(ExactError::DuplicateAbscissa(render(x)));
        }
    }

    let (fit, verify) = points.split_at(needed);
    let xs: Vec<&Rational> = fit.iter().map(|(x, _)| x).collect();

    // Newton divided differences, then expand the Newton form.
    let mut dd: Vec<Rational> = fit.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut poly = UniPoly::zero();
    for i in (0..needed).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let factor = UniPoly::new(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &factor) + &UniPoly::constant(dd[i].clone());
    }

    for (x, y) in verify {
        let v = poly.eval(x);
        if &v != y {
            return Err(ExactError::VerificationMismatch { x: render(x), expected: render(y), actual: render(&v) });
        }
    }
    debug_assert!(fit.iter().all(|(x, y)| (poly.eval(x) - y).is_zero()));
    Ok(poly)
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn recovers_sampled_polynomial(c in prop::collection::vec(-20i64..=20, 1..=5), extra in 0usize..3) {
            let p = UniPoly::from_ints(&c);
            let pts: Vec<(Rational, Rational)> = (0..7).map(|x| (rat(x), p.eval(&rat(x)))).collect();
            prop_assert_eq!(interpolate_poly(&pts, 4 + extra.min(2)).unwrap(), p);
        }
    }
}
