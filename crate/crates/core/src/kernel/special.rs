//! Real special functions: the Riemann zeta function on `(1, inf)`, the
//! gamma function on `(0, inf)`, and the beta function.
//!
//! Zeta uses Euler–Maclaurin summation with cutoff N = 24 and twelve
//! Bernoulli correction terms; the remainder is below the first omitted
//! term, which stays under 1e-13 relative for s in [1.01, 60]. Above
//! s = 60 the defining series itself converges to full precision in a
//! handful of terms. Gamma uses the Lanczos approximation (g = 7, nine
//! coefficients) with reflection below 1/2.

use crate::{Error, Result};

/// `B_{2k}` for `k = 1..=12` as exact fractions.
const BERNOULLI: [(f64, f64); 12] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
];

const EM_CUTOFF: u32 = 24;

/// Riemann zeta on `s > 1`.
pub fn zeta_real(s: f64) -> Result<f64> {
    Ok(1.0 + zeta_minus_one(s)?)
}

/// `zeta(s) - 1`, computed without cancellation for large `s`.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("zeta_real requires s > 1, got {s}")));
    }
    if s > 60.0 {
        // 2^{-s} dominates; the series over n >= 2 converges immediately.
        let mut acc = 0.0;
        let mut n = 2u32;
        loop {
            let t = (n as f64).powf(-s);
            acc += t;
            if t < acc * 1e-18 || n > 64 {
                return Ok(acc);
            }
            n += 1;
        }
    }
    let n = EM_CUTOFF as f64;
    let mut acc = 0.0;
    // Partial sum over 2..=N, small terms first.
    for k in (2..=EM_CUTOFF).rev() {
        acc += (k as f64).powf(-s);
    }
    acc += n.powf(1.0 - s) / (s - 1.0);
    acc -= 0.5 * n.powf(-s);
    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    let mut poch = s;
    let mut fact = 1.0f64;
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let two_k = 2 * (k as u32 + 1);
        fact *= ((two_k - 1) * two_k) as f64;
        acc += (num / den) / fact * poch * n.powf(-s - (two_k - 1) as f64);
        poch *= (s + (two_k - 1) as f64) * (s + two_k as f64);
    }
    Ok(acc)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma on `x > 0`.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("gamma_real requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos argument away from the pole side.
        return Ok(std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin() * gamma_real(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a)
}

/// `ln Gamma` on `x > 0`, evaluated in log space so large arguments do not
/// overflow.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "ln_gamma_real requires x > 0, got {x}"
        )));
    }
    if x < 0.5 {
        let s = (std::f64::consts::PI * x).sin();
        return Ok(std::f64::consts::PI.ln() - s.ln() - ln_gamma_real(1.0 - x)?);
    }
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + a.ln())
}

/// Euler beta `B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)` on `x, y > 0`.
pub fn beta_real(x: f64, y: f64) -> Result<f64> {
    Ok((ln_gamma_real(x)? + ln_gamma_real(y)? - ln_gamma_real(x + y)?).exp())
}
