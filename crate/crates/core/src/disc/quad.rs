//! Quadrature for weighted area integrals on the unit disc.
//!
//! In the squared-radius variable `t = r^2`, the normalised measure
//! `dm_alpha = (alpha-1)(1-|w|^2)^{alpha-2} dm` factors into the Jacobi
//! weight `(alpha-1)(1-t)^{alpha-2} dt` on `(0,1)` times the uniform
//! angular mean. Radial rules are Gauss–Jacobi rules assembled by
//! Golub–Welsch (symmetric tridiagonal eigenproblem); the `M`-point
//! angular rule is exact through trigonometric degree `M-1`. At
//! `alpha = 1` the radial factor degenerates to the boundary circle.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::kernel::{beta_real, binom_coeff};
use crate::par;
use crate::{Error, Result};

use super::poly::DiscPolynomial;

/// Hard caps for adaptive refinement.
const MAX_RADIAL: usize = 512;
const MAX_ANGULAR: usize = 8192;
/// Absolute target for adaptive integrals of `|f|^p`.
const ADAPTIVE_ABS_TOL: f64 = 1e-10;

/// Gauss rule for `int_0^1 (1-t)^a g(t) dt`, exact for polynomial `g` of
/// degree `<= 2n - 1`.
#[derive(Debug, Clone)]
pub struct GaussJacobi01 {
    exponent: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussJacobi01 {
    pub fn new(exponent: f64, n: usize) -> Result<GaussJacobi01> {
        if !(exponent > -1.0) {
            return Err(Error::Domain(format!(
                "Jacobi exponent must exceed -1, got {exponent}"
            )));
        }
        if n == 0 || n > MAX_RADIAL {
            return Err(Error::DimensionTooLarge {
                what: "Gauss-Jacobi node count",
                dim: n,
                max: MAX_RADIAL,
            });
        }
        // Golub-Welsch on [-1,1] with weight (1-x)^a (1+x)^0.
        let a = exponent;
        let b = 0.0f64;
        let s = a + b;
        let mut m = DMatrix::<f64>::zeros(n, n);
        m[(0, 0)] = (b - a) / (s + 2.0);
        for k in 2..=n {
            let kk = k as f64;
            m[(k - 1, k - 1)] = (b * b - a * a) / ((2.0 * kk + s) * (2.0 * kk + s - 2.0));
        }
        for k in 1..n {
            let kk = k as f64;
            let num = 4.0 * kk * (kk + a) * (kk + b) * (kk + s);
            let den =
                (2.0 * kk + s).powi(2) * (2.0 * kk + s + 1.0) * (2.0 * kk + s - 1.0);
            let e = (num / den).sqrt();
            m[(k - 1, k)] = e;
            m[(k, k - 1)] = e;
        }
        let eig = m.symmetric_eigen();
        // Total mass of the [-1,1] weight.
        let mu0 = 2f64.powf(s + 1.0) * beta_real(a + 1.0, b + 1.0)?;
        let scale = 2f64.powf(-a - 1.0);
        let mut pairs: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let x = eig.eigenvalues[i];
                let w = mu0 * eig.eigenvectors[(0, i)].powi(2);
                ((1.0 + x) / 2.0, scale * w)
            })
            .collect();
        pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
        Ok(GaussJacobi01 {
            exponent,
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, g: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * g(t))
            .sum()
    }
}

type RuleKey = (u64, usize);

fn rule_cache() -> &'static Mutex<HashMap<RuleKey, Arc<GaussJacobi01>>> {
    static CACHE: OnceLock<Mutex<HashMap<RuleKey, Arc<GaussJacobi01>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cached Gauss–Jacobi rule; construction costs a dense eigensolve, reuse is
/// free.
pub fn gauss_jacobi_cached(exponent: f64, n: usize) -> Result<Arc<GaussJacobi01>> {
    let key = (exponent.to_bits(), n);
    if let Some(rule) = rule_cache().lock().unwrap().get(&key) {
        return Ok(rule.clone());
    }
    let rule = Arc::new(GaussJacobi01::new(exponent, n)?);
    rule_cache()
        .lock()
        .unwrap()
        .insert(key, rule.clone());
    Ok(rule)
}

fn roots_cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Complex64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Complex64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `exp(2 pi i m / M)` for `m < M`, cached per `M`.
pub(crate) fn unit_roots(m: usize) -> Arc<Vec<Complex64>> {
    if let Some(r) = roots_cache().lock().unwrap().get(&m) {
        return r.clone();
    }
    let roots: Vec<Complex64> = (0..m)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            Complex64::new(th.cos(), th.sin())
        })
        .collect();
    let arc = Arc::new(roots);
    roots_cache().lock().unwrap().insert(m, arc.clone());
    arc
}

/// Tensor rule on the disc for one weight parameter `alpha >= 1`.
///
/// Radial nodes live in the `t = r^2` variable with weights normalised to
/// total mass exactly 1; at `alpha = 1` the radial factor is the single
/// boundary node `t = 1`.
#[derive(Debug, Clone)]
pub struct DiscQuadrature {
    alpha: f64,
    radial_t: Vec<f64>,
    radial_w: Vec<f64>,
    angular: usize,
}

impl DiscQuadrature {
    pub fn new(alpha: f64, radial_nodes: usize, angular: usize) -> Result<DiscQuadrature> {
        if !(alpha >= 1.0) {
            return Err(Error::Domain(format!(
                "disc weight parameter must satisfy alpha >= 1, got {alpha}"
            )));
        }
        if angular == 0 || angular > MAX_ANGULAR {
            return Err(Error::DimensionTooLarge {
                what: "angular node count",
                dim: angular,
                max: MAX_ANGULAR,
            });
        }
        if alpha == 1.0 {
            return Ok(DiscQuadrature {
                alpha,
                radial_t: vec![1.0],
                radial_w: vec![1.0],
                angular,
            });
        }
        let rule = gauss_jacobi_cached(alpha - 2.0, radial_nodes)?;
        // True mass of (alpha-1)(1-t)^{alpha-2} is exactly 1; normalising
        // the weights to sum to 1 removes the constant-factor rounding.
        let raw: Vec<f64> = rule.weights().to_vec();
        let total: f64 = raw.iter().sum();
        Ok(DiscQuadrature {
            alpha,
            radial_t: rule.nodes().to_vec(),
            radial_w: raw.iter().map(|w| w / total).collect(),
            angular,
        })
    }

    /// Rule sized for `|f|^p` with `deg f <= max_degree`: radial
    /// `ceil(max_degree * p / 2) + 8` nodes, angular `4 * max_degree + 8`.
    pub fn for_space(alpha: f64, max_degree: usize, p: f64) -> Result<DiscQuadrature> {
        if !(p > 0.0) {
            return Err(Error::Domain(format!("exponent p must be positive, got {p}")));
        }
        let radial = (((max_degree as f64 * p) / 2.0).ceil() as usize + 8).min(MAX_RADIAL);
        let angular = (4 * max_degree + 8).min(MAX_ANGULAR);
        DiscQuadrature::new(alpha, radial, angular)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn angular(&self) -> usize {
        self.angular
    }

    pub fn radial_len(&self) -> usize {
        self.radial_t.len()
    }

    /// `(t, weight)` of the `i`-th radial node in the `t = r^2` variable.
    pub fn radial_point(&self, i: usize) -> (f64, f64) {
        (self.radial_t[i], self.radial_w[i])
    }

    /// Largest exact polynomial degree in the radial `t` variable.
    fn t_exactness(&self) -> usize {
        if self.alpha == 1.0 {
            // On the boundary circle every power of t = 1 is exact.
            usize::MAX
        } else {
            2 * self.radial_t.len() - 1
        }
    }

    /// Checks that `|f|^{2h}` (an even power) integrates exactly for
    /// degree-`deg` polynomials.
    pub fn is_exact_for(&self, deg: usize, half_power: usize) -> bool {
        let need = deg * half_power;
        need <= self.t_exactness() && need < self.angular
    }

    /// Quadrature value of `int |w|^{2k} dm_alpha` (tests compare this to
    /// the closed form `1/c_alpha(k)`).
    pub fn moment(&self, k: u32) -> f64 {
        self.radial_t
            .iter()
            .zip(&self.radial_w)
            .map(|(&t, &w)| w * t.powi(k as i32))
            .sum()
    }

    /// `int |f(w)|^p dm_alpha` with this fixed rule.
    pub fn integrate_mod_p(&self, f: &DiscPolynomial, p: f64) -> f64 {
        let roots = unit_roots(self.angular);
        let m = self.angular;
        let nr = self.radial_t.len();
        let means = par::map_collect(nr, |i| {
            let r = self.radial_t[i].sqrt();
            let b = f.scaled_coeffs(r);
            angular_mean_mod_p(&b, &roots, m, p)
        });
        let mut acc = 0.0;
        for i in 0..nr {
            acc += self.radial_w[i] * means[i];
        }
        acc
    }
}

/// Mean over the `m` angular nodes of `|sum_j b_j e(j theta)|^p`.
fn angular_mean_mod_p(b: &[Complex64], roots: &[Complex64], m: usize, p: f64) -> f64 {
    let even_half: Option<i32> = if p == 2.0 {
        Some(1)
    } else if p == 4.0 {
        Some(2)
    } else if p > 0.0 && p.fract() == 0.0 && (p as u64) % 2 == 0 {
        Some((p as i32) / 2)
    } else {
        None
    };
    let mut acc = 0.0;
    for point in 0..m {
        let mut v = Complex64::new(0.0, 0.0);
        let mut idx = 0usize;
        for &c in b {
            v += c * roots[idx];
            idx += point;
            if idx >= m {
                idx -= m;
            }
        }
        let sq = v.norm_sqr();
        acc += match even_half {
            Some(1) => sq,
            Some(2) => sq * sq,
            Some(h) => sq.powi(h),
            None => sq.powf(p / 2.0),
        };
    }
    acc / m as f64
}

/// A numerically estimated norm with its absolute error estimate.
#[derive(Debug, Clone, Copy)]
pub struct NormEstimate {
    pub value: f64,
    /// Estimated absolute error of `value`. Even integrands on adequate
    /// rules report machine-level error; adaptive paths report the last
    /// refinement delta propagated through the `1/p` power.
    pub error: f64,
    pub converged: bool,
}

/// `A^p_alpha` norm of `f` using the supplied rule.
///
/// For even `p` the rule must be exact for `|f|^p` (error otherwise); for
/// other `p` the rule's resolution is the starting point of adaptive
/// doubling in both directions.
pub fn norm_quad(f: &DiscPolynomial, p: f64, quad: &DiscQuadrature) -> Result<NormEstimate> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("exponent p must be positive, got {p}")));
    }
    let deg = f.degree();
    if p.fract() == 0.0 && (p as u64) % 2 == 0 {
        let half = (p as usize) / 2;
        if !quad.is_exact_for(deg, half) {
            return Err(Error::InsufficientQuadrature {
                need: deg * half,
                have: quad.t_exactness().min(quad.angular - 1),
            });
        }
        let integral = quad.integrate_mod_p(f, p);
        let value = integral.powf(1.0 / p);
        return Ok(NormEstimate {
            value,
            error: 1e-13 * value.abs() + f64::MIN_POSITIVE,
            converged: true,
        });
    }
    adaptive_norm_mod_p(f, p, quad.alpha(), quad.radial_len(), quad.angular())
}

/// `A^p_alpha` norm with automatic sizing: exact rule for even `p`,
/// adaptive refinement otherwise.
pub fn norm_mod_p(f: &DiscPolynomial, p: f64, alpha: f64) -> Result<NormEstimate> {
    let deg = f.degree();
    if p.fract() == 0.0 && (p as u64) % 2 == 0 {
        let quad = DiscQuadrature::for_space(alpha, deg.max(1), p)?;
        return norm_quad(f, p, &quad);
    }
    let base_radial = ((deg.max(1) as f64 * p / 2.0).ceil() as usize + 8).min(MAX_RADIAL);
    let base_angular = (4 * deg.max(1) + 16).clamp(32, MAX_ANGULAR);
    adaptive_norm_mod_p(f, p, alpha, base_radial, base_angular)
}

fn adaptive_norm_mod_p(
    f: &DiscPolynomial,
    p: f64,
    alpha: f64,
    base_radial: usize,
    base_angular: usize,
) -> Result<NormEstimate> {
    let mut nr = base_radial.max(4);
    let mut m = base_angular.max(16);
    let mut prev: Option<f64> = None;
    let mut value: f64;
    let mut delta = f64::INFINITY;
    loop {
        let quad = DiscQuadrature::new(alpha, nr.min(MAX_RADIAL), m.min(MAX_ANGULAR))?;
        value = quad.integrate_mod_p(f, p);
        if let Some(prev) = prev {
            delta = (value - prev).abs();
            if delta <= ADAPTIVE_ABS_TOL * value.abs().max(1.0) {
                break;
            }
        }
        if nr >= MAX_RADIAL && m >= MAX_ANGULAR {
            break;
        }
        prev = Some(value);
        nr = (nr * 2).min(MAX_RADIAL);
        m = (m * 2).min(MAX_ANGULAR);
    }
    let converged = delta <= ADAPTIVE_ABS_TOL * value.abs().max(1.0);
    let norm = value.max(0.0).powf(1.0 / p);
    // d(I^{1/p}) = I^{1/p - 1}/p dI.
    let err = if value > 0.0 {
        (value.powf(1.0 / p - 1.0) / p) * delta + 1e-14 * norm
    } else {
        delta
    };
    Ok(NormEstimate {
        value: norm,
        error: err,
        converged,
    })
}

/// Weighted integral `int g(w) (1-|w|^2)^c dm` for a pointwise-evaluable
/// real integrand `g`, with adaptive doubling. The `(1-t)^c` factor is the
/// Jacobi weight of the radial rule, so endpoint singularities with
/// `c > -1` are handled exactly.
pub fn integrate_weighted<G>(
    g: G,
    c: f64,
    base_radial: usize,
    base_angular: usize,
    abs_tol: f64,
) -> Result<NormEstimate>
where
    G: Fn(Complex64, f64) -> f64 + Sync + Send,
{
    let mut nr = base_radial.max(8);
    let mut m = base_angular.max(16);
    let mut prev: Option<f64> = None;
    let mut value: f64;
    let mut delta = f64::INFINITY;
    loop {
        let rule = gauss_jacobi_cached(c, nr.min(MAX_RADIAL))?;
        let roots = unit_roots(m.min(MAX_ANGULAR));
        let mm = roots.len();
        let means = par::map_collect(rule.len(), |i| {
            let t = rule.nodes()[i];
            let r = t.sqrt();
            let mut acc = 0.0;
            for root in roots.iter() {
                acc += g(root * r, t);
            }
            acc / mm as f64
        });
        value = 0.0;
        for i in 0..rule.len() {
            value += rule.weights()[i] * means[i];
        }
        if let Some(prev) = prev {
            delta = (value - prev).abs();
            if delta <= abs_tol * value.abs().max(1.0) {
                break;
            }
        }
        if nr >= MAX_RADIAL && m >= MAX_ANGULAR {
            break;
        }
        prev = Some(value);
        nr = (nr * 2).min(MAX_RADIAL);
        m = (m * 2).min(MAX_ANGULAR);
    }
    Ok(NormEstimate {
        converged: delta <= abs_tol * value.abs().max(1.0),
        value,
        error: delta,
    })
}

/// Coefficient-side `A^2_alpha` norm `(sum |a_j|^2 / c_alpha(j))^{1/2}`.
pub fn norm_a2alpha_coeff(f: &DiscPolynomial, alpha: f64) -> f64 {
    let mut acc = 0.0;
    for (j, &a) in f.coeffs().iter().enumerate() {
        acc += a.norm_sqr() / binom_coeff(alpha, j as u32);
    }
    acc.sqrt()
}
