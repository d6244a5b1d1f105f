//! Gap functionals for the contractive embeddings on the disc.
//!
//! Every functional returns `left - right` for an inequality stated as
//! `left <= right`, so nonpositive gaps (within quadrature error) confirm
//! the inequality and positive gaps certify counterexamples.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernel::binom_coeff;
use crate::par;
use crate::{Error, Result};

use super::poly::DiscPolynomial;
use super::quad::{integrate_weighted, norm_a2alpha_coeff, norm_mod_p, unit_roots, NormEstimate};

/// Signed inequality gap `left - right` with the accumulated quadrature
/// error of both sides.
#[derive(Debug, Clone, Copy)]
pub struct Gap {
    pub left: f64,
    pub right: f64,
    pub gap: f64,
    pub error: f64,
}

impl Gap {
    fn from_estimates(left: NormEstimate, right: NormEstimate) -> Gap {
        Gap {
            left: left.value,
            right: right.value,
            gap: left.value - right.value,
            error: left.error + right.error,
        }
    }
}

/// `|| f(r .) ||_{A^q_alpha} - || f ||_{A^p_alpha}`.
///
/// The dilation is a contraction exactly when `r <= sqrt(p/q)`.
pub fn weissler_gap(f: &DiscPolynomial, p: f64, q: f64, alpha: f64, r: f64) -> Result<Gap> {
    if !(0.0 < r && r <= 1.0) {
        return Err(Error::Domain(format!(
            "dilation parameter must lie in (0, 1], got {r}"
        )));
    }
    let left = norm_mod_p(&f.dilate(r), q, alpha)?;
    let right = norm_mod_p(f, p, alpha)?;
    Ok(Gap::from_estimates(left, right))
}

/// Measured second-order coefficient of `eps -> ||1 + eps r w||_{A^q_alpha}`,
/// to compare with the prediction `q r^2 / (4 alpha)`.
pub fn dilation_expansion_coefficient(alpha: f64, q: f64, r: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain(format!(
            "expansion step must lie in (0, 0.5), got {eps}"
        )));
    }
    let f = DiscPolynomial::new(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(eps * r, 0.0),
    ]);
    let n = norm_mod_p(&f, q, alpha)?;
    Ok((n.value - 1.0) / (eps * eps))
}

/// Predicted second-order dilation response `q r^2 / (4 alpha)`.
pub fn dilation_expansion_prediction(alpha: f64, q: f64, r: f64) -> f64 {
    q * r * r / (4.0 * alpha)
}

/// `|| f ||_{A^{p(alpha+1)/alpha}_{alpha+1}} - || f ||_{A^p_alpha}`.
///
/// Nonpositive for every polynomial once `alpha` exceeds the threshold of
/// [`carleman_threshold`]; at `alpha = 1` the right-hand space is the
/// boundary-circle `H^p`.
pub fn carleman_gap(f: &DiscPolynomial, p: f64, alpha: f64) -> Result<Gap> {
    if !(alpha >= 1.0) {
        return Err(Error::Domain(format!(
            "carleman gap needs alpha >= 1, got {alpha}"
        )));
    }
    let q = p * (alpha + 1.0) / alpha;
    let left = norm_mod_p(f, q, alpha + 1.0)?;
    let right = norm_mod_p(f, p, alpha)?;
    Ok(Gap::from_estimates(left, right))
}

/// Smallest weight for which the one-step embedding holds for the degree-1
/// test family: the root in `(1, 2)` of
/// `g(alpha) = alpha(2-alpha)/4 - alpha(alpha+1)/(2 alpha+1)^2`,
/// located by bisection. Closed form: `(1 + sqrt(17))/4`.
pub fn carleman_threshold(tol: f64) -> f64 {
    let g = |a: f64| a * (2.0 - a) / 4.0 - a * (a + 1.0) / (2.0 * a + 1.0).powi(2);
    let mut lo = 1.01f64;
    let mut hi = 1.99f64;
    debug_assert!(g(lo) > 0.0 && g(hi) < 0.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `(sum_j |a_j|^2 / c_{n+2}(j))^{1/2} - || f ||_{A^p}` with
/// `p = 2/(1 + n/2)` on the unweighted Bergman space.
pub fn coefficient_l2_gap(f: &DiscPolynomial, n: u32) -> Result<Gap> {
    let p = 4.0 / (2.0 + n as f64);
    let mut acc = 0.0;
    for (j, &a) in f.coeffs().iter().enumerate() {
        acc += a.norm_sqr() / binom_coeff(n as f64 + 2.0, j as u32);
    }
    let left = acc.sqrt();
    let right = norm_mod_p(f, p, 2.0)?;
    Ok(Gap {
        left,
        right: right.value,
        gap: left - right.value,
        error: right.error + 1e-14 * left,
    })
}

/// `|| f ||_{A^4_{2 alpha}} - || f ||_{A^2_alpha}`; both sides use exact
/// even-power rules.
pub fn square_embedding_gap(f: &DiscPolynomial, alpha: f64) -> Result<Gap> {
    let left = norm_mod_p(f, 4.0, 2.0 * alpha)?;
    let right = norm_mod_p(f, 2.0, alpha)?;
    Ok(Gap::from_estimates(left, right))
}

/// `|f(xi)| - (1 - |xi|^2)^{-alpha/p} || f ||_{A^p_alpha}`.
///
/// Always nonpositive; the truncated kernel
/// [`DiscPolynomial::extremizer`] drives it to zero.
pub fn pointwise_gap(f: &DiscPolynomial, xi: Complex64, p: f64, alpha: f64) -> Result<Gap> {
    let t = xi.norm_sqr();
    if !(t < 1.0) {
        return Err(Error::Domain(format!(
            "evaluation point must lie inside the disc, got |xi| = {}",
            t.sqrt()
        )));
    }
    let norm = norm_mod_p(f, p, alpha)?;
    let left = f.eval(xi).norm();
    let right = (1.0 - t).powf(-alpha / p) * norm.value;
    Ok(Gap {
        left,
        right,
        gap: left - right,
        error: (1.0 - t).powf(-alpha / p) * norm.error + 1e-14 * left.abs(),
    })
}

/// Both sides of the integral identity behind the sharpness argument, for a
/// zero-free polynomial.
#[derive(Debug, Clone, Copy)]
pub struct CarlenIdentity {
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs - rhs|`.
    pub residual: f64,
    /// `residual / (|rhs| + 1)`.
    pub relative: f64,
    pub quadrature_error: f64,
    pub boundary_min_modulus: f64,
}

/// Evaluates `int |dbar u|^2 dm = (beta/2) int |f|^{2p} (1-t)^{2 beta - 2} dm`
/// for `u = |f|^p (1 - |w|^2)^beta`, where
/// `dbar u = (1-t)^{beta-1} [ (p/2)|f|^{p-2} f conj(f') (1-t) - beta w |f|^p ]`.
///
/// Requires `beta > 1/2` (integrable Jacobi weight) and `min |f| >= 1e-3` on
/// the closed disc, certified by dense boundary sampling plus a winding-number
/// count that rules out interior zeros.
pub fn carlen_identity_residual(f: &DiscPolynomial, p: f64, beta: f64) -> Result<CarlenIdentity> {
    const MIN_MODULUS: f64 = 1e-3;
    if !(p > 0.0) {
        return Err(Error::Domain(format!("exponent p must be positive, got {p}")));
    }
    if !(beta > 0.5) {
        return Err(Error::Domain(format!(
            "weight power beta must exceed 1/2, got {beta}"
        )));
    }
    let samples = (64 * (f.degree() + 1)).clamp(2048, 16384);
    let (bmin, winding) = boundary_min_and_winding(f, samples);
    if bmin < MIN_MODULUS {
        return Err(Error::VanishesOnDisc {
            min_modulus: bmin,
            required: MIN_MODULUS,
        });
    }
    if winding != 0 {
        // The argument principle found zeros strictly inside the disc.
        return Err(Error::VanishesOnDisc {
            min_modulus: 0.0,
            required: MIN_MODULUS,
        });
    }
    let fd = f.derivative();
    let c = 2.0 * beta - 2.0;
    let lhs_integrand = |w: Complex64, t: f64| {
        let z = f.eval(w);
        let d = fd.eval(w);
        let s = z.norm_sqr();
        let t1 = z * d.conj() * ((p / 2.0) * s.powf((p - 2.0) / 2.0) * (1.0 - t));
        let t2 = w * (beta * s.powf(p / 2.0));
        (t1 - t2).norm_sqr()
    };
    let rhs_integrand = |w: Complex64, _t: f64| {
        let s = f.eval(w).norm_sqr();
        (beta / 2.0) * s.powf(p)
    };
    let base_r = (2 * f.degree().max(1) + 32).min(256);
    let base_a = (8 * f.degree().max(1) + 32).clamp(64, 4096);
    let lhs = integrate_weighted(lhs_integrand, c, base_r, base_a, 1e-11)?;
    let rhs = integrate_weighted(rhs_integrand, c, base_r, base_a, 1e-11)?;
    let residual = (lhs.value - rhs.value).abs();
    Ok(CarlenIdentity {
        lhs: lhs.value,
        rhs: rhs.value,
        residual,
        relative: residual / (rhs.value.abs() + 1.0),
        quadrature_error: lhs.error + rhs.error,
        boundary_min_modulus: bmin,
    })
}

/// Minimum of `|f|` over a dense grid on the unit circle, and the winding
/// number of `f` around 0 along it (the interior zero count for a
/// zero-free-boundary polynomial).
fn boundary_min_and_winding(f: &DiscPolynomial, m: usize) -> (f64, i64) {
    let roots = unit_roots(m);
    let values: Vec<Complex64> = roots.iter().map(|&w| f.eval(w)).collect();
    let min = values
        .iter()
        .map(|v| v.norm())
        .fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        return (0.0, 0);
    }
    let mut total = 0.0;
    for k in 0..m {
        let next = values[(k + 1) % m];
        total += (next / values[k]).arg();
    }
    (min, (total / (2.0 * std::f64::consts::PI)).round() as i64)
}

/// Monte Carlo check for the sphere-slice identity: the average over the
/// unit sphere `S^n` of `h(x_1^2 + x_2^2)` equals
/// `sum_k h_k / c_alpha(k)` with `alpha = (n+1)/2`.
#[derive(Debug, Clone, Copy)]
pub struct SliceEstimate {
    pub monte_carlo: f64,
    pub exact: f64,
    pub residual: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// `h` lists polynomial coefficients in the variable `u = x_1^2 + x_2^2`.
/// Sampling is uniform on `S^n` via normalised Gaussian vectors; the chunked
/// accumulation is deterministic for a fixed seed regardless of thread
/// count.
pub fn sphere_slice_residual(h: &[f64], n: u32, samples: u64, seed: u64) -> Result<SliceEstimate> {
    if n == 0 {
        return Err(Error::Domain(
            "sphere dimension must be at least 1".to_string(),
        ));
    }
    if samples < 2 {
        return Err(Error::Domain(
            "need at least 2 Monte Carlo samples".to_string(),
        ));
    }
    let alpha = (n as f64 + 1.0) / 2.0;
    let exact: f64 = h
        .iter()
        .enumerate()
        .map(|(k, &c)| c / binom_coeff(alpha, k as u32))
        .sum();
    const CHUNK_SAMPLES: u64 = 8192;
    let chunks = samples.div_ceil(CHUNK_SAMPLES) as usize;
    let dim = (n + 1) as usize;
    let partials: Vec<(f64, f64)> = par::map_collect(chunks, |ci| {
        let lo = ci as u64 * CHUNK_SAMPLES;
        let hi = (lo + CHUNK_SAMPLES).min(samples);
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (ci as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in lo..hi {
            let mut total = 0.0;
            let mut first_two = 0.0;
            let mut produced = 0usize;
            while produced < dim {
                // Box-Muller pair from uniforms in (0,1] and [0,1).
                let u1: f64 = 1.0 - rng.gen::<f64>();
                let u2: f64 = rng.gen();
                let rad = (-2.0 * u1.ln()).sqrt();
                let ang = 2.0 * std::f64::consts::PI * u2;
                for z in [rad * ang.cos(), rad * ang.sin()] {
                    if produced < dim {
                        total += z * z;
                        if produced < 2 {
                            first_two += z * z;
                        }
                        produced += 1;
                    }
                }
            }
            let u = first_two / total.max(f64::MIN_POSITIVE);
            let mut v = 0.0;
            for &c in h.iter().rev() {
                v = v * u + c;
            }
            sum += v;
            sumsq += v * v;
        }
        (sum, sumsq)
    });
    let mut s = 0.0;
    let mut s2 = 0.0;
    for (a, b) in partials {
        s += a;
        s2 += b;
    }
    let nn = samples as f64;
    let mean = s / nn;
    let var = ((s2 - nn * mean * mean) / (nn - 1.0)).max(0.0);
    Ok(SliceEstimate {
        monte_carlo: mean,
        exact,
        residual: (mean - exact).abs(),
        std_error: (var / nn).sqrt(),
        samples,
    })
}
