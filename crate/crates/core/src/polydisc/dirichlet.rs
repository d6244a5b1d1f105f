//! Dirichlet polynomials `sum a_n n^{-s}` with multiplicative coefficient
//! weights.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::kernel::ArithmeticTables;
use crate::{Error, Result};

/// Finitely supported `sum_{n >= 1} a_n n^{-s}`; zero coefficients are
/// dropped so the support is canonical.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DirichletPolynomial {
    coeffs: BTreeMap<u64, Complex64>,
}

impl DirichletPolynomial {
    pub fn new(coeffs: BTreeMap<u64, Complex64>) -> Result<DirichletPolynomial> {
        if coeffs.keys().any(|&n| n == 0) {
            return Err(Error::Domain(
                "Dirichlet coefficients are indexed from n = 1".to_string(),
            ));
        }
        Ok(DirichletPolynomial {
            coeffs: coeffs
                .into_iter()
                .filter(|(_, c)| c.norm_sqr() != 0.0)
                .collect(),
        })
    }

    pub fn from_pairs(pairs: &[(u64, Complex64)]) -> Result<DirichletPolynomial> {
        let mut map = BTreeMap::new();
        for &(n, c) in pairs {
            if n == 0 {
                return Err(Error::Domain(
                    "Dirichlet coefficients are indexed from n = 1".to_string(),
                ));
            }
            *map.entry(n).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        DirichletPolynomial::new(map)
    }

    pub fn from_real_pairs(pairs: &[(u64, f64)]) -> Result<DirichletPolynomial> {
        DirichletPolynomial::from_pairs(
            &pairs
                .iter()
                .map(|&(n, x)| (n, Complex64::new(x, 0.0)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn coeff(&self, n: u64) -> Complex64 {
        self.coeffs
            .get(&n)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.coeffs.iter().map(|(&n, &c)| (n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest index in the support (1 for the zero polynomial).
    pub fn support_max(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(1)
    }

    /// Vertical translation `(T_eps f)(s) = f(s + eps)`, i.e. `a_n n^{-eps}`.
    pub fn translate(&self, eps: f64) -> DirichletPolynomial {
        DirichletPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&n, &c)| (n, c * (n as f64).powf(-eps)))
                .collect(),
        }
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&n, &c) in &self.coeffs {
            acc += c * (-s * (n as f64).ln()).exp();
        }
        acc
    }

    pub fn eval_real(&self, sigma: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&n, &c) in &self.coeffs {
            acc += c * (n as f64).powf(-sigma);
        }
        acc
    }

    /// `sum |a_n|^2 w(n)` for an arbitrary coefficient weight.
    pub fn weighted_square_sum<W: Fn(u64) -> f64>(&self, w: W) -> f64 {
        self.coeffs
            .iter()
            .map(|(&n, c)| c.norm_sqr() * w(n))
            .sum()
    }

    /// Coefficient-side norm `(sum |a_n|^2 / d_alpha(n))^{1/2}`.
    pub fn norm_a2alpha(&self, alpha: f64, tables: &ArithmeticTables) -> Result<f64> {
        let mut acc = 0.0;
        for (&n, c) in &self.coeffs {
            acc += c.norm_sqr() / tables.d_alpha(alpha, n)?;
        }
        Ok(acc.sqrt())
    }

    pub fn mul(&self, other: &DirichletPolynomial) -> Result<DirichletPolynomial> {
        let mut map: BTreeMap<u64, Complex64> = BTreeMap::new();
        for (&m, &a) in &self.coeffs {
            for (&n, &b) in &other.coeffs {
                let mn = m.checked_mul(n).ok_or_else(|| {
                    Error::Overflow(format!("Dirichlet product index {m} * {n} exceeds u64"))
                })?;
                *map.entry(mn).or_insert(Complex64::new(0.0, 0.0)) += a * b;
            }
        }
        DirichletPolynomial::new(map)
    }

    /// CSV rows `n,re,im` in increasing index order.
    pub fn csv_string(&self) -> String {
        let mut out = String::from("n,re,im\n");
        for (&n, c) in &self.coeffs {
            let _ = writeln!(out, "{},{},{}", n, c.re, c.im);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn f_basic() -> DirichletPolynomial {
        DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, 0.5), (6, -2.0)]).unwrap()
    }

    #[test]
    fn zero_index_rejected_and_zeros_dropped() {
        assert!(DirichletPolynomial::from_real_pairs(&[(0, 1.0)]).is_err());
        let f = DirichletPolynomial::from_real_pairs(&[(3, 0.0), (5, 1.0)]).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.support_max(), 5);
    }

    #[test]
    fn translate_scales_by_powers() {
        let f = f_basic().translate(1.0);
        assert_abs_diff_eq!(f.coeff(2).re, 0.25);
        assert_abs_diff_eq!(f.coeff(6).re, -2.0 / 6.0);
        // Semigroup: T_a T_b = T_{a+b}.
        let g = f_basic().translate(0.3).translate(0.7);
        for (n, c) in f.terms() {
            assert_relative_eq!(g.coeff(n).re, c.re, max_relative = 1e-14);
        }
    }

    #[test]
    fn eval_matches_direct_sum() {
        let f = f_basic();
        let v = f.eval_real(2.0);
        assert_relative_eq!(v.re, 1.0 + 0.5 / 4.0 - 2.0 / 36.0, max_relative = 1e-14);
        let s = Complex64::new(1.0, 0.5);
        let direct = Complex64::new(1.0, 0.0)
            + 0.5 * (-s * 2f64.ln()).exp()
            - 2.0 * (-s * 6f64.ln()).exp();
        let v = f.eval(s);
        assert_relative_eq!(v.re, direct.re, max_relative = 1e-14);
        assert_relative_eq!(v.im, direct.im, max_relative = 1e-14);
    }

    #[test]
    fn coefficient_norm_uses_multiplicative_weights() {
        let tables = ArithmeticTables::up_to(10).unwrap();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, 1.0)]).unwrap();
        // d_4(2) = 4, so the squared norm is 1 + 1/4.
        let n = f.norm_a2alpha(4.0, &tables).unwrap();
        assert_relative_eq!(n, 1.25f64.sqrt(), max_relative = 1e-14);
        // d_2(6) = d(6) = 4.
        let n = f_basic().norm_a2alpha(2.0, &tables).unwrap();
        assert_relative_eq!(
            n,
            (1.0f64 + 0.25 / 2.0 + 4.0 / 4.0).sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn products_multiply_indices() {
        let f = DirichletPolynomial::from_real_pairs(&[(2, 1.0), (3, 1.0)]).unwrap();
        let g = f.mul(&f).unwrap();
        assert_abs_diff_eq!(g.coeff(4).re, 1.0);
        assert_abs_diff_eq!(g.coeff(6).re, 2.0);
        assert_abs_diff_eq!(g.coeff(9).re, 1.0);
        let huge = DirichletPolynomial::from_real_pairs(&[(u64::MAX / 2, 1.0)]).unwrap();
        assert!(huge.mul(&huge).is_err());
    }

    #[test]
    fn csv_is_sorted_and_complete() {
        let csv = f_basic().csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,re,im");
        assert_eq!(lines[1], "1,1,0");
        assert_eq!(lines[2], "2,0.5,0");
        assert_eq!(lines[3], "6,-2,0");
    }
}
