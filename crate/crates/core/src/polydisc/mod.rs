//! Dirichlet polynomials, their polydisc lifts, and the multiplicative
//! contractive inequalities connecting the two sides.

mod dirichlet;
mod inequalities;
mod poly;
mod quad;

pub use dirichlet::DirichletPolynomial;
pub use inequalities::{
    coefficient_bound_gap, coefficient_weight, critical_translation, helson_gap, pointwise_gap,
    translation_gap, WeightRoute,
};
pub use poly::{bohr_lift, bohr_unlift, PolydiscPolynomial};
pub use quad::{polydisc_norm, polydisc_norm_quad};
