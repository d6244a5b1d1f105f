use thiserror::Error;

/// Errors reported by the verification toolkit.
///
/// Numerical routines prefer returning diagnostics (residuals, error
/// estimates) over failing; an `Error` means a contract violation the caller
/// must fix, not a large residual.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument lies outside the documented domain.
    #[error("domain violation: {0}")]
    Domain(String),

    /// An integer construction exceeded the 64-bit range.
    #[error("integer overflow in {0}")]
    Overflow(String),

    /// A Hankel build would need symbol values beyond the declared support.
    /// Products of basis labels reach `needed`, the symbol declares `declared`.
    #[error("symbol support too small: products reach {needed}, symbol declares {declared}")]
    SymbolSupport { needed: u64, declared: u64 },

    /// A requested matrix or grid dimension is beyond the supported size.
    #[error("dimension {dim} exceeds supported maximum {max} for {what}")]
    DimensionTooLarge {
        what: &'static str,
        dim: usize,
        max: usize,
    },

    /// A fixed quadrature rule cannot integrate the requested integrand
    /// exactly and the caller demanded exactness.
    #[error("quadrature rule of exactness degree {have} cannot handle degree {need}")]
    InsufficientQuadrature { need: usize, have: usize },

    /// The gradient-identity residual requires the function to stay away
    /// from zero on the closed disc; the observed minimum modulus was too
    /// small.
    #[error("function modulus drops to {min_modulus:.3e} on the closed disc; identity requires >= {required:.3e}")]
    VanishesOnDisc { min_modulus: f64, required: f64 },

    /// An adaptive quadrature failed to reach its target accuracy within
    /// the resolution cap; the payload carries the best estimate and the
    /// last observed refinement delta.
    #[error("quadrature did not converge: value {value:.6e}, last delta {delta:.3e}")]
    QuadratureNotConverged { value: f64, delta: f64 },

    /// Report/configuration validation failure.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Unknown suite or check name.
    #[error("unknown suite or check: {0}")]
    UnknownName(String),

    /// Filesystem failure while writing a report or table.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
