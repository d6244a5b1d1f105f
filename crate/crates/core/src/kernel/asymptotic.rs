//! Asymptotic comparisons: the average order of `d(n) alpha^{Omega(n)}`,
//! truncated square-free zeta sums, and the `2^omega` identity.

use crate::par;
use crate::{Error, Result};

use super::primes::PrimeTable;
use super::special::{gamma_real, zeta_real};
use super::tables::ArithmeticTables;

/// Convergent Euler product value with a rigorous truncation bound.
#[derive(Debug, Clone, Copy)]
pub struct EulerFactorValue {
    pub value: f64,
    /// Rigorous bound on `|log(true/value)|` from the dropped primes.
    pub log_tail_bound: f64,
    pub primes_used: usize,
}

/// `g_alpha(1) = prod_p ((1 - 1/p)^alpha / (1 - alpha/p))^2` for
/// `alpha` in `(0, 2)`.
///
/// Factors are multiplied in ascending prime order until the local factor
/// deviates from 1 by less than 1e-12; the remaining primes contribute at
/// most `2(alpha^2 + alpha)/P` to the log, which is reported as the bound.
pub fn euler_g_factor(alpha: f64) -> Result<EulerFactorValue> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Domain(format!(
            "euler_g_factor requires alpha in (0,2), got {alpha}"
        )));
    }
    let dev = 2.0 * alpha * (alpha - 1.0).abs();
    let sieve_to = ((dev * 1e12).sqrt() as u64 + 100).max(1000);
    let primes = PrimeTable::sieve_limit(sieve_to);
    let mut value = 1.0f64;
    let mut used = 0usize;
    let mut last_p = 2u64;
    for &p in primes.as_slice() {
        let pf = p as f64;
        let f = ((1.0 - 1.0 / pf).powf(alpha) / (1.0 - alpha / pf)).powi(2);
        value *= f;
        used += 1;
        last_p = p;
        if (f - 1.0).abs() < 1e-12 && pf > 2.0 * alpha {
            break;
        }
    }
    let log_tail_bound = 2.0 * (alpha * alpha + alpha) / last_p as f64;
    Ok(EulerFactorValue {
        value,
        log_tail_bound,
        primes_used: used,
    })
}

/// Empirical-versus-predicted comparison of the partial sums
/// `sum_{n<=x} d(n) alpha^{Omega(n)}`.
#[derive(Debug, Clone, Copy)]
pub struct AverageOrder {
    /// `(1/x) sum_{n<=x} d(n) alpha^{Omega(n)}`.
    pub empirical: f64,
    /// `C_alpha (log x)^{2 alpha - 1}` with
    /// `C_alpha = g_alpha(1) / Gamma(2 alpha)`.
    pub predicted: f64,
    /// `empirical / predicted`; drifts toward 1 like `1/log x`.
    pub ratio: f64,
    pub constant: f64,
    /// Truncation bound carried over from the Euler product.
    pub constant_log_tail: f64,
}

pub fn average_order_ratio(
    alpha: f64,
    x: u64,
    tables: &ArithmeticTables,
) -> Result<AverageOrder> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::Domain(format!(
            "average_order_ratio requires alpha in (0,2), got {alpha}"
        )));
    }
    if x < 100 || x > tables.limit() {
        return Err(Error::Domain(format!(
            "x = {x} outside 100..={}",
            tables.limit()
        )));
    }
    // alpha^k lookup for the bounded exponent range.
    let mut pows = [0.0f64; 64];
    for (k, v) in pows.iter_mut().enumerate() {
        *v = alpha.powi(k as i32);
    }
    let sum = par::sum_indexed(x as usize, |i| {
        let n = (i + 1) as u64;
        let d = tables.divisor_count(n).unwrap() as f64;
        d * pows[tables.big_omega(n).unwrap() as usize]
    });
    let g = euler_g_factor(alpha)?;
    let constant = g.value / gamma_real(2.0 * alpha)?;
    let lx = (x as f64).ln();
    let predicted = constant * lx.powf(2.0 * alpha - 1.0);
    let empirical = sum / x as f64;
    Ok(AverageOrder {
        empirical,
        predicted,
        ratio: empirical / predicted,
        constant,
        constant_log_tail: g.log_tail_bound,
    })
}

/// Truncated Dirichlet-series sum compared against its closed-form limit.
#[derive(Debug, Clone, Copy)]
pub struct TruncationResidual {
    pub partial: f64,
    pub reference: f64,
    pub residual: f64,
    /// Rigorous bound on the dropped tail; the residual must not exceed it.
    pub tail_bound: f64,
}

/// `sum_{n<=N} |mu(n)| n^{-s}` against `zeta(s)/zeta(2s)`, with tail bound
/// `N^{1-s}/(s-1)`.
pub fn squarefree_zeta_residual(
    s: f64,
    n_max: u64,
    tables: &ArithmeticTables,
) -> Result<TruncationResidual> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!(
            "squarefree_zeta_residual requires s > 1, got {s}"
        )));
    }
    if n_max > tables.limit() {
        return Err(Error::Domain(format!(
            "N = {n_max} beyond table limit {}",
            tables.limit()
        )));
    }
    let partial = par::sum_indexed(n_max as usize, |i| {
        let n = (i + 1) as u64;
        if tables.mobius(n).unwrap() != 0 {
            (n as f64).powf(-s)
        } else {
            0.0
        }
    });
    let reference = zeta_real(s)? / zeta_real(2.0 * s)?;
    let tail_bound = (n_max as f64).powf(1.0 - s) / (s - 1.0);
    Ok(TruncationResidual {
        partial,
        reference,
        residual: (partial - reference).abs(),
        tail_bound,
    })
}

/// `sum_{n<=N} 2^{omega(n)} n^{-s}` against `zeta(s)^2/zeta(2s)`.
///
/// The tail bound uses `2^{omega(n)} <= d(n) <= 2 sqrt(n)`, so `s > 3/2` is
/// required for it to close.
pub fn two_omega_residual(
    s: f64,
    n_max: u64,
    tables: &ArithmeticTables,
) -> Result<TruncationResidual> {
    if !(s > 1.5) {
        return Err(Error::Domain(format!(
            "two_omega_residual requires s > 3/2, got {s}"
        )));
    }
    if n_max > tables.limit() {
        return Err(Error::Domain(format!(
            "N = {n_max} beyond table limit {}",
            tables.limit()
        )));
    }
    let partial = par::sum_indexed(n_max as usize, |i| {
        let n = (i + 1) as u64;
        2f64.powi(tables.omega(n).unwrap() as i32) * (n as f64).powf(-s)
    });
    let z = zeta_real(s)?;
    let reference = z * z / zeta_real(2.0 * s)?;
    let tail_bound = 2.0 * (n_max as f64).powf(1.5 - s) / (s - 1.5);
    Ok(TruncationResidual {
        partial,
        reference,
        residual: (partial - reference).abs(),
        tail_bound,
    })
}
