use std::cmp::Ordering;
use std::fmt;

use super::monomial::{grevlex_cmp, lex_cmp};
use super::Monomial;

/// Global monomial orders used by the ideal engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Larger weighted degree leads; ties broken by grevlex. Weights must be
    /// non-negative so the order stays a well-order.
    WeightRefined(Vec<i64>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => grevlex_cmp(a, b),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::WeightRefined(w) => {
                a.weighted_degree(w).cmp(&b.weighted_degree(w)).then_with(|| grevlex_cmp(a, b))
            }
        }
    }

    /// Order that eliminates the coordinates flagged `true`: any basis
    /// element whose leading monomial avoids them lies entirely in the
    /// remaining coordinates.
    pub fn elimination(eliminate: &[bool]) -> Self {
        MonomialOrder::WeightRefined(eliminate.iter().map(|&e| i64::from(e)).collect())
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::WeightRefined(w) => write!(f, "weight{:?}+grevlex", w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::WeightRefined(vec![0, 1, 0, 0]),
            MonomialOrder::WeightRefined(vec![2, 0, 3, 1]),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&c.mul(&a), &c.mul(&b)), ab);
                // one is the minimum
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            }
        }

        #[test]
        fn orders_are_transitive(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn weight_refined_prefers_weight() {
        let o = MonomialOrder::WeightRefined(vec![0, 1, 0, 0]);
        let z1z3 = Monomial::new(vec![0, 1, 0, 1]);
        let z2sq = Monomial::new(vec![0, 0, 2, 0]);
        assert_eq!(o.cmp(&z1z3, &z2sq), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&z1z3, &z2sq), Ordering::Less);
    }
}
