//! Multiplicative kernel: primes, multi-index codecs, sieve tables,
//! divisor-power coefficients, real special functions, and the asymptotic
//! comparison routines built on them.

mod asymptotic;
mod divisor;
mod multiindex;
mod primes;
mod special;
mod tables;

pub use asymptotic::{
    average_order_ratio, euler_g_factor, squarefree_zeta_residual, two_omega_residual,
    AverageOrder, EulerFactorValue, TruncationResidual,
};
pub use divisor::{
    binom_coeff, binom_coeff_exact, binom_coeff_u128, convolution_residual, divisor_fn,
    divisor_fn_exact, divisor_fn_from_index, ConvolutionResidual,
};
pub use multiindex::{factorize, index_to_integer, MultiIndex};
pub use primes::{is_prime_u64, PrimeTable};
pub use special::{beta_real, gamma_real, ln_gamma_real, zeta_minus_one, zeta_real};
pub use tables::ArithmeticTables;
