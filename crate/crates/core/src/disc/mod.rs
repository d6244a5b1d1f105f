//! Analysis on weighted Bergman spaces of the unit disc: polynomials,
//! weighted quadrature, and the gap functionals for the contractive
//! embeddings between them.

mod inequalities;
mod poly;
mod quad;

pub use inequalities::{
    carleman_gap, carleman_threshold, carlen_identity_residual, coefficient_l2_gap,
    dilation_expansion_coefficient, dilation_expansion_prediction, pointwise_gap,
    sphere_slice_residual, square_embedding_gap, weissler_gap, CarlenIdentity, Gap,
    SliceEstimate,
};
pub use poly::DiscPolynomial;
pub use quad::{
    gauss_jacobi_cached, integrate_weighted, norm_a2alpha_coeff, norm_mod_p, norm_quad,
    DiscQuadrature, GaussJacobi01, NormEstimate,
};
