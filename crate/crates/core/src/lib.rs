//! Rational approximations to `L(e_0)` for a linear functional `L` known
//! only through its moments `a_n = L(e_n)`, `n >= 1`.
//!
//! Two independent routes compute the same approximant `P_n / Q_n`:
//! Hankel determinants ([`hankel`]) and monic orthogonal polynomials
//! ([`ortho`]). [`driver`] runs them side by side and renders tables.

pub mod driver;
pub mod emit;
pub mod error;
pub mod hankel;
pub mod moments;
pub mod numerics;
pub mod ortho;

pub use error::{Error, Result};
pub use hankel::{
    arrow_det, build_p_matrix, build_q_matrix, det_fraction_free, det_rational, hankel_p,
    hankel_pq, hankel_q, DetResult, IntMatrix, SquareMatrix,
};
pub use moments::{load_moments, parse_moments, MomentKind, MomentSequence, ReferenceConstant};
pub use numerics::{
    binomial, format_rational, harmonic, make_rational, parse_rational, rat_to_decimal,
    DecimalString, Rational, RoundingMode,
};
pub use ortho::{approximant_ortho, inner_product, ortho_init, ortho_step, OrthoState, PolyCoeffs};
pub use driver::{
    compare_reference, cross_validate, run_convergence, run_sequence, ApproximantRecord, Family,
    Method, OutputFormat, RunConfig, RunOutcome, ValidationReport,
};
