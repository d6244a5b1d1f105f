//! Numerical verification toolkit for coefficient-space norms on the unit
//! disc, the polydisc, and the Dirichlet-series scale, together with the
//! dilation/translation operators acting between them, weighted
//! multiplicative Hankel matrices and their spectra, and the explicit
//! counterexample computations tied to diagonal restriction and
//! Carleson-measure questions.
//!
//! The crate is organised around five computational areas plus a report
//! layer:
//!
//! * [`kernel`] — prime tables, multi-index codecs, divisor-power sieves,
//!   binomial-series coefficients, and the real special functions backing
//!   everything else.
//! * [`disc`] — polynomials on the unit disc, Gauss–Jacobi/trapezoid
//!   quadrature for weighted area integrals, and the contraction gap
//!   functionals (dilation, embedding chains, pointwise bounds, the
//!   gradient identity).
//! * [`polydisc`] — Dirichlet polynomials, the polydisc lift, translation
//!   operators, and the corresponding gap functionals.
//! * [`hankel`] — weighted multiplicative Hankel matrices, their singular
//!   spectra, Hilbert–Schmidt masses, the extension/diagonal/averaging
//!   operators between one and two variables, and the integral-form
//!   evaluations.
//! * [`carleson`] — trigonometric polynomials with signed frequencies,
//!   Poisson extension, diagonal restriction measures, and the embedding
//!   ratio computations.
//! * [`report`] — the check registry, suite runner, and serialisers used by
//!   the command-line front end.
//!
//! All randomised routines take explicit seeds and all parallel reductions
//! run over a fixed chunk tree, so every public entry point is a pure
//! function of its arguments: identical inputs give bit-identical outputs
//! whether or not the `parallel` feature is enabled.

pub mod carleson;
pub mod disc;
mod error;
pub mod hankel;
pub mod kernel;
pub mod par;
pub mod polydisc;
pub mod report;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
