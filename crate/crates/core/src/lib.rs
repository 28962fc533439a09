//! Exact computation of test-configuration invariants.
//!
//! A polarized variety is given by the homogeneous ideal of its embedding
//! in `P(V)`. Splitting the coordinates as `V = W + W'` and letting a
//! one-parameter subgroup scale `W'` with positive weights yields a
//! degeneration whose central fiber is the weighted initial ideal. From the
//! central fiber this crate computes, with exact rational arithmetic:
//!
//! * per-degree weight data (`N_l`, `n_l`, `B_l`, `gamma_l`, `||psi_l||`),
//! * Chow weights `q_l`, both from a sweep over `l k` and in closed form,
//! * the Donaldson-Futaki coefficient and the higher expansion coefficients,
//! * the refined sequence `s_l = l q_l / ||psi_l||` and its limit class.

pub mod degeneration;
pub mod exact;
pub mod groebner;
pub mod invariants;
pub mod polyring;
pub mod report;

pub use degeneration::{build_configuration, degree_profile, stable_polynomials, structural_checks, TestConfiguration};
pub use exact::{LimitClass, Rational, RationalFunction, UniPoly};
pub use invariants::{analyze_invariants, InvariantReport};
