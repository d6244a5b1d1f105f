//! Tensor quadrature on low-dimensional polydiscs.
//!
//! Even exponents never need it: `|F|^{2h} = |F^h|^2` reduces to the exact
//! coefficient norm in any number of variables. Quadrature covers the
//! fractional exponents, where cost grows like `(nodes)^d`; dimension is
//! capped at 3.

use num_complex::Complex64;

use crate::disc::{self, DiscPolynomial, DiscQuadrature, NormEstimate};
use crate::par;
use crate::{Error, Result};

use super::poly::PolydiscPolynomial;

const MAX_TENSOR_DIM: usize = 3;
/// Per-dimension refinement caps (radial, angular) for fractional p.
const CAPS: [(usize, usize); 3] = [(512, 8192), (48, 192), (14, 40)];
const ADAPTIVE_ABS_TOL: f64 = 1e-10;

/// One disc variable reduced to a flat list of weighted sample points.
struct VariableRule {
    /// `(w, weight)` over the disc; weights sum to 1.
    points: Vec<(Complex64, f64)>,
}

fn variable_rule(alpha: f64, radial: usize, angular: usize) -> Result<VariableRule> {
    let quad = DiscQuadrature::new(alpha, radial, angular)?;
    let roots = disc_unit_roots(angular);
    let mut points = Vec::with_capacity(quad.radial_len() * angular);
    for k in 0..quad.radial_len() {
        let (t, w) = quad.radial_point(k);
        let r = t.sqrt();
        for root in roots.iter() {
            points.push((root * r, w / angular as f64));
        }
    }
    Ok(VariableRule { points })
}

fn disc_unit_roots(m: usize) -> Vec<Complex64> {
    (0..m)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
            Complex64::new(th.cos(), th.sin())
        })
        .collect()
}

/// `int_{D^d} |F|^p dm_alpha^{(d)}` for a fixed tensor rule.
fn tensor_integrate_mod_p(
    big_f: &PolydiscPolynomial,
    p: f64,
    alpha: f64,
    radial: usize,
    angular: usize,
) -> Result<f64> {
    let d = big_f.dimension();
    if d > MAX_TENSOR_DIM {
        return Err(Error::DimensionTooLarge {
            what: "polydisc quadrature dimension",
            dim: d,
            max: MAX_TENSOR_DIM,
        });
    }
    if d == 0 {
        let v = big_f
            .terms()
            .next()
            .map_or(0.0, |(_, c)| c.norm());
        return Ok(v.powf(p));
    }
    let rule = variable_rule(alpha, radial, angular)?;
    let npts = rule.points.len();
    let degrees = big_f.degrees();
    // Monomial value tables: pw[j][point][e] = w^e at that point.
    let pw: Vec<Vec<Vec<Complex64>>> = degrees
        .iter()
        .map(|&dj| {
            rule.points
                .iter()
                .map(|&(w, _)| {
                    let mut row = Vec::with_capacity(dj as usize + 1);
                    let mut v = Complex64::new(1.0, 0.0);
                    for _ in 0..=dj {
                        row.push(v);
                        v *= w;
                    }
                    row
                })
                .collect()
        })
        .collect();
    let support: Vec<(Vec<u32>, Complex64)> = big_f
        .terms()
        .map(|(k, c)| {
            let mut e = vec![0u32; d];
            for (j, slot) in e.iter_mut().enumerate() {
                *slot = k.exponent(j);
            }
            (e, c)
        })
        .collect();
    // Parallel over the first variable's points, sequential inner loops.
    let partials = par::map_collect(npts, |i0| {
        let w0 = rule.points[i0].1;
        let mut acc = 0.0;
        match d {
            1 => {
                let mut v = Complex64::new(0.0, 0.0);
                for (e, c) in &support {
                    v += c * pw[0][i0][e[0] as usize];
                }
                acc = v.norm_sqr().powf(p / 2.0);
            }
            2 => {
                for i1 in 0..npts {
                    let mut v = Complex64::new(0.0, 0.0);
                    for (e, c) in &support {
                        v += c * pw[0][i0][e[0] as usize] * pw[1][i1][e[1] as usize];
                    }
                    acc += rule.points[i1].1 * v.norm_sqr().powf(p / 2.0);
                }
            }
            _ => {
                for i1 in 0..npts {
                    let w1 = rule.points[i1].1;
                    for i2 in 0..npts {
                        let mut v = Complex64::new(0.0, 0.0);
                        for (e, c) in &support {
                            v += c
                                * pw[0][i0][e[0] as usize]
                                * pw[1][i1][e[1] as usize]
                                * pw[2][i2][e[2] as usize];
                        }
                        acc += w1 * rule.points[i2].1 * v.norm_sqr().powf(p / 2.0);
                    }
                }
            }
        }
        w0 * acc
    });
    Ok(partials.iter().sum())
}

/// `A^p_alpha` tensor norm by explicit quadrature at a fixed resolution
/// (cross-check interface; `d <= 3`).
pub fn polydisc_norm_quad(
    big_f: &PolydiscPolynomial,
    p: f64,
    alpha: f64,
    radial: usize,
    angular: usize,
) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("exponent p must be positive, got {p}")));
    }
    Ok(tensor_integrate_mod_p(big_f, p, alpha, radial, angular)?.powf(1.0 / p))
}

/// `A^p_alpha` norm of a polydisc polynomial.
///
/// Even `p` reduces to the exact coefficient norm of `F^{p/2}` (valid in
/// any dimension); one variable delegates to the adaptive disc integrator;
/// fractional `p` in 2 or 3 variables uses adaptive tensor quadrature.
pub fn polydisc_norm(big_f: &PolydiscPolynomial, p: f64, alpha: f64) -> Result<NormEstimate> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("exponent p must be positive, got {p}")));
    }
    if p.fract() == 0.0 && (p as u64) % 2 == 0 {
        let h = (p as u32) / 2;
        let value = big_f.powi(h).norm_a2alpha_coeff(alpha).powf(2.0 / p);
        return Ok(NormEstimate {
            value,
            error: 1e-13 * value + f64::MIN_POSITIVE,
            converged: true,
        });
    }
    let d = big_f.dimension();
    if d <= 1 {
        let deg = big_f.degrees().first().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (k, c) in big_f.terms() {
            coeffs[k.exponent(0) as usize] = c;
        }
        return disc::norm_mod_p(&DiscPolynomial::new(coeffs), p, alpha);
    }
    if d > MAX_TENSOR_DIM {
        return Err(Error::DimensionTooLarge {
            what: "polydisc quadrature dimension",
            dim: d,
            max: MAX_TENSOR_DIM,
        });
    }
    let (cap_r, cap_a) = CAPS[d - 1];
    let maxdeg = big_f.max_degree() as usize;
    let mut nr = (((maxdeg as f64) * p / 2.0).ceil() as usize + 4).clamp(4, cap_r);
    let mut m = (2 * maxdeg + 8).clamp(8, cap_a);
    let mut prev: Option<f64> = None;
    let mut value: f64;
    let mut delta = f64::INFINITY;
    loop {
        value = tensor_integrate_mod_p(big_f, p, alpha, nr, m)?;
        if let Some(prev) = prev {
            delta = (value - prev).abs();
            if delta <= ADAPTIVE_ABS_TOL * value.abs().max(1.0) {
                break;
            }
        }
        if nr >= cap_r && m >= cap_a {
            break;
        }
        prev = Some(value);
        nr = (nr * 2).min(cap_r);
        m = (m * 2).min(cap_a);
    }
    let converged = delta <= ADAPTIVE_ABS_TOL * value.abs().max(1.0);
    let norm = value.max(0.0).powf(1.0 / p);
    let err = if value > 0.0 {
        (value.powf(1.0 / p - 1.0) / p) * delta + 1e-13 * norm
    } else {
        delta
    };
    Ok(NormEstimate {
        value: norm,
        error: err,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::MultiIndex;
    use approx::assert_relative_eq;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn even_norm_matches_coefficient_route_in_two_vars() {
        // F = 1 + w1 + w1 w2.
        let f = PolydiscPolynomial::from_pairs(&[
            (MultiIndex::empty(), c(1.0)),
            (MultiIndex::new(vec![1]), c(1.0)),
            (MultiIndex::new(vec![1, 1]), c(1.0)),
        ]);
        let alpha = 2.0;
        let coeff = polydisc_norm(&f, 2.0, alpha).unwrap().value;
        assert_relative_eq!(coeff, f.norm_a2alpha_coeff(alpha), max_relative = 1e-13);
        let quad = polydisc_norm_quad(&f, 2.0, alpha, 6, 8).unwrap();
        assert_relative_eq!(quad, coeff, max_relative = 1e-12);
        // p = 4 via F^2 against explicit tensor quadrature.
        let p4_coeff = polydisc_norm(&f, 4.0, alpha).unwrap().value;
        let p4_quad = polydisc_norm_quad(&f, 4.0, alpha, 10, 12).unwrap();
        assert_relative_eq!(p4_quad, p4_coeff, max_relative = 1e-11);
    }

    #[test]
    fn three_variable_even_norm_cross_checks() {
        // Multilinear F = (1 + w1/2)(1 + w2/3)(1 + w3/4).
        let mut f = PolydiscPolynomial::constant(1.0);
        for (j, s) in [(0usize, 0.5), (1, 1.0 / 3.0), (2, 0.25)] {
            let mut exps = vec![0u32; j + 1];
            exps[j] = 1;
            let factor = PolydiscPolynomial::from_pairs(&[
                (MultiIndex::empty(), c(1.0)),
                (MultiIndex::new(exps), c(s)),
            ]);
            f = f.mul(&factor);
        }
        let alpha = 2.0;
        let coeff = polydisc_norm(&f, 2.0, alpha).unwrap().value;
        // Product structure: norm^2 factors across variables.
        let expect = ((1.0f64 + 0.25 / 2.0) * (1.0 + (1.0 / 9.0) / 2.0) * (1.0 + 0.0625 / 2.0))
            .sqrt();
        assert_relative_eq!(coeff, expect, max_relative = 1e-13);
        let quad = polydisc_norm_quad(&f, 2.0, alpha, 5, 6).unwrap();
        assert_relative_eq!(quad, coeff, max_relative = 1e-12);
    }

    #[test]
    fn one_variable_fractional_norm_delegates_to_disc() {
        let f = PolydiscPolynomial::from_pairs(&[
            (MultiIndex::empty(), c(1.0)),
            (MultiIndex::new(vec![1]), c(0.5)),
        ]);
        let via_polydisc = polydisc_norm(&f, 1.0, 2.0).unwrap();
        let g = DiscPolynomial::from_real(&[1.0, 0.5]);
        let via_disc = disc::norm_mod_p(&g, 1.0, 2.0).unwrap();
        assert_relative_eq!(via_polydisc.value, via_disc.value, max_relative = 1e-12);
    }

    #[test]
    fn fractional_two_variable_norm_converges_for_zero_free_symbol() {
        // F = 1 + (w1 + w2)/4 stays far from zero on the bidisc.
        let f = PolydiscPolynomial::from_pairs(&[
            (MultiIndex::empty(), c(1.0)),
            (MultiIndex::new(vec![1]), c(0.25)),
            (MultiIndex::new(vec![0, 1]), c(0.25)),
        ]);
        let est = polydisc_norm(&f, 1.0, 2.0).unwrap();
        assert!(est.converged, "error = {}", est.error);
        // Sanity: between the norms at p = 2 (above) and the value at F(0).
        let upper = polydisc_norm(&f, 2.0, 2.0).unwrap().value;
        assert!(est.value <= upper + 1e-12);
        assert!(est.value >= 1.0 - 1e-12);
    }

    #[test]
    fn dimension_cap_enforced() {
        let f = PolydiscPolynomial::from_pairs(&[(MultiIndex::new(vec![1, 1, 1, 1]), c(1.0))]);
        assert!(matches!(
            polydisc_norm(&f, 1.5, 2.0),
            Err(Error::DimensionTooLarge { .. })
        ));
        // Even p stays fine in any dimension.
        assert!(polydisc_norm(&f, 2.0, 2.0).is_ok());
    }
}
