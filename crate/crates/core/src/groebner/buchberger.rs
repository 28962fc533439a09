use std::collections::BTreeSet;

use num_traits::One;

use super::GroebnerError;
use crate::exact::Rational;
use crate::polyring::{Monomial, MonomialOrder, MultiPoly};

/// Gröbner basis of an ideal for a fixed monomial order.
///
/// When `reduced` is set the generators are monic, no term of any
/// generator is divisible by another generator's leading monomial, and the
/// list is sorted by decreasing leading monomial. This makes the basis a
/// canonical form of the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub reduced: bool,
    nvars: usize,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero").clone())
            .collect()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.degree() == Some(0))
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        normal_form(p, self).is_zero()
    }
}

/// Remainder of `p` after full reduction by the basis: no term of the
/// result is divisible by a leading monomial, and `p - result` lies in the
/// ideal.
pub fn normal_form(p: &MultiPoly, gb: &GroebnerBasis) -> MultiPoly {
    let lms = gb.leading_monomials();
    reduce_with(p, &gb.generators, &lms, &gb.order)
}

/// Full reduction of `p` by monic `basis` with precomputed leading
/// monomials `lms`.
pub(crate) fn reduce_with(p: &MultiPoly, basis: &[MultiPoly], lms: &[Monomial], order: &MonomialOrder) -> MultiPoly {
    let mut work = p.clone();
    let mut rem = MultiPoly::zero(p.nvars());
    while let Some((m, c)) = work.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match lms.iter().position(|lm| lm.divides(&m)) {
            Some(i) => {
                let q = m.div(&lms[i]).unwrap();
                work.sub_scaled(&basis[i], &q, &c);
            }
            None => {
                work.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPoly, lf: &Monomial, g: &MultiPoly, lg: &Monomial) -> MultiPoly {
    // f and g are monic
    let l = lf.lcm(lg);
    let mut s = f.mul_term(&l.div(lf).unwrap(), &Rational::one());
    s.sub_scaled(g, &l.div(lg).unwrap(), &Rational::one());
    s
}

/// Buchberger's algorithm with the coprime-leading-monomial criterion and
/// the normal pair-selection strategy (smallest lcm first). Returns the
/// reduced basis.
///
/// `grading` gives the degree of each coordinate; an S-pair whose lcm has
/// degree above `degree_cap` aborts the computation.
pub fn buchberger_with(
    generators: &[MultiPoly],
    nvars: usize,
    order: &MonomialOrder,
    grading: &[i64],
    degree_cap: u32,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<MultiPoly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    for g in generators {
        let r = reduce_with(g, &basis, &lms, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            lms.push(r.leading_monomial(order).unwrap().clone());
            basis.push(r);
        }
    }

    // pairs keyed by (degree of lcm, insertion index) for a deterministic order
    let mut pairs: BTreeSet<(i64, usize, usize)> = BTreeSet::new();
    let deg = |m: &Monomial| m.weighted_degree(grading);
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((deg(&lms[i].lcm(&lms[j])), i, j));
        }
    }

    while let Some(&(d, i, j)) = pairs.iter().next() {
        pairs.remove(&(d, i, j));
        if d > degree_cap as i64 {
            return Err(GroebnerError::DegreeCap { cap: degree_cap, degree: d });
        }
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        // chain criterion: some k with lm_k | lcm(i, j) whose pairs with i
        // and j have already been handled
        let l = lms[i].lcm(&lms[j]);
        let handled = |a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            !pairs.contains(&(deg(&lms[a].lcm(&lms[b])), a, b))
        };
        if (0..basis.len()).any(|k| k != i && k != j && lms[k].divides(&l) && handled(i, k) && handled(j, k)) {
            continue;
        }
        let s = s_polynomial(&basis[i], &lms[i], &basis[j], &lms[j]);
        let h = reduce_with(&s, &basis, &lms, order);
        if h.is_zero() {
            continue;
        }
        let h = h.make_monic(order);
        let lm = h.leading_monomial(order).unwrap().clone();
        let new = basis.len();
        for (k, lk) in lms.iter().enumerate() {
            pairs.insert((deg(&lk.lcm(&lm)), k, new));
        }
        basis.push(h);
        lms.push(lm);
    }

    Ok(reduce_basis(basis, nvars, order))
}

/// Turns any Gröbner basis into the reduced one.
fn reduce_basis(basis: Vec<MultiPoly>, nvars: usize, order: &MonomialOrder) -> GroebnerBasis {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let min_basis: Vec<MultiPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let min_lms: Vec<Monomial> = keep.iter().map(|&i| lms[i].clone()).collect();

    let mut out: Vec<MultiPoly> = Vec::with_capacity(min_basis.len());
    for (i, g) in min_basis.iter().enumerate() {
        // reduce the tail of g by the other elements
        let lead = MultiPoly::term(min_lms[i].clone(), g.coeff(&min_lms[i]));
        let tail = g - &lead;
        let others: Vec<MultiPoly> =
            min_basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let other_lms: Vec<Monomial> =
            min_lms.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, m)| m.clone()).collect();
        let tail = reduce_with(&tail, &others, &other_lms, order);
        out.push((&lead + &tail).make_monic(order));
    }
    out.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap());
        order.cmp(lb, la)
    });
    GroebnerBasis { generators: out, order: order.clone(), reduced: true, nvars }
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn quadric() -> impl Strategy<Value = MultiPoly> {
        let monos = Monomial::all_of_degree(3, 2);
        prop::collection::vec(-3i64..=3, monos.len())
            .prop_map(move |c| MultiPoly::from_terms(3, monos.iter().cloned().zip(c.into_iter().map(rat))))
    }

    fn cubic() -> impl Strategy<Value = MultiPoly> {
        let monos = Monomial::all_of_degree(3, 3);
        prop::collection::vec(-2i64..=2, monos.len())
            .prop_map(move |c| MultiPoly::from_terms(3, monos.iter().cloned().zip(c.into_iter().map(rat))))
    }

    fn basis(gens: &[MultiPoly]) -> GroebnerBasis {
        buchberger_with(gens, 3, &MonomialOrder::Grevlex, &[1, 1, 1], 40).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normal_form_is_idempotent(gens in prop::collection::vec(quadric(), 1..=3), p in cubic(), h in quadric()) {
            let b = basis(&gens);
            let r = normal_form(&p, &b);
            prop_assert_eq!(normal_form(&r, &b), r.clone());
            // adding an ideal element does not change the remainder
            let shifted = &p + &(&h * &gens[0]);
            prop_assert_eq!(normal_form(&shifted, &b), r);
        }

        #[test]
        fn basis_is_canonical(gens in prop::collection::vec(quadric(), 1..=3), c in 1i64..=5) {
            let b = basis(&gens);
            let mut other: Vec<MultiPoly> = gens.iter().rev().map(|g| g.scale(&rat(-c))).collect();
            if let Some(first) = gens.first() {
                other.push(first + &gens[gens.len() - 1]);
            }
            prop_assert_eq!(b.generators, basis(&other).generators);
        }
    }
}
