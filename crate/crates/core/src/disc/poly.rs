//! Analytic polynomials on the unit disc.

use num_complex::Complex64;
use rand::Rng;

use crate::kernel::binom_coeff;

/// Polynomial `sum_j a_j w^j` with complex coefficients; trailing zeros are
/// trimmed so `degree` is canonical (the zero polynomial has degree 0).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscPolynomial {
    coeffs: Vec<Complex64>,
}

impl DiscPolynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> DiscPolynomial {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.norm_sqr() == 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        DiscPolynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> DiscPolynomial {
        DiscPolynomial::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn one() -> DiscPolynomial {
        DiscPolynomial::from_real(&[1.0])
    }

    pub fn monomial(j: usize, c: Complex64) -> DiscPolynomial {
        let mut v = vec![Complex64::new(0.0, 0.0); j + 1];
        v[j] = c;
        DiscPolynomial::new(v)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs
            .get(j)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn eval(&self, w: Complex64) -> Complex64 {
        let mut v = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            v = v * w + c;
        }
        v
    }

    /// Coefficients of `f(r w)`, i.e. `a_j r^j`.
    pub fn scaled_coeffs(&self, r: f64) -> Vec<Complex64> {
        let mut pow = 1.0;
        self.coeffs
            .iter()
            .map(|&c| {
                let out = c * pow;
                pow *= r;
                out
            })
            .collect()
    }

    /// Dilation `(P_r f)(w) = f(r w)`.
    pub fn dilate(&self, r: f64) -> DiscPolynomial {
        DiscPolynomial::new(self.scaled_coeffs(r))
    }

    /// Derivative `f'`.
    pub fn derivative(&self) -> DiscPolynomial {
        if self.coeffs.len() == 1 {
            return DiscPolynomial::new(vec![Complex64::new(0.0, 0.0)]);
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        DiscPolynomial::new(v)
    }

    pub fn scale(&self, c: Complex64) -> DiscPolynomial {
        DiscPolynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, other: &DiscPolynomial) -> DiscPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect();
        DiscPolynomial::new(v)
    }

    /// Random test polynomial: degree uniform on `0..=max_degree`, real and
    /// imaginary coefficient parts uniform on `[-1, 1]`.
    pub fn random<R: Rng>(rng: &mut R, max_degree: usize) -> DiscPolynomial {
        let deg = rng.gen_range(0..=max_degree);
        let coeffs = (0..=deg)
            .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
            .collect();
        DiscPolynomial::new(coeffs)
    }

    /// Truncated pointwise-bound extremizer at `xi`: coefficients
    /// `c * c_{2 alpha / p}(j) * conj(xi)^j` for `j <= degree`. As the
    /// degree grows this converges to `c (1 - conj(xi) w)^{-2 alpha / p}`,
    /// which saturates the evaluation bound on `A^p_alpha`.
    pub fn extremizer(
        xi: Complex64,
        c: Complex64,
        alpha: f64,
        p: f64,
        degree: usize,
    ) -> DiscPolynomial {
        let beta = 2.0 * alpha / p;
        let xb = xi.conj();
        let mut pow = Complex64::new(1.0, 0.0);
        let coeffs = (0..=degree)
            .map(|j| {
                let out = c * binom_coeff(beta, j as u32) * pow;
                pow *= xb;
                out
            })
            .collect();
        DiscPolynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trailing_zeros_trimmed() {
        let f = DiscPolynomial::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        assert_eq!(f.degree(), 0);
    }

    #[test]
    fn eval_horner_matches_direct() {
        let f = DiscPolynomial::from_real(&[1.0, -2.0, 0.5, 3.0]);
        let w = Complex64::new(0.3, -0.4);
        let direct = Complex64::new(1.0, 0.0) - 2.0 * w + 0.5 * w * w + 3.0 * w * w * w;
        let v = f.eval(w);
        assert_relative_eq!(v.re, direct.re, max_relative = 1e-14);
        assert_relative_eq!(v.im, direct.im, max_relative = 1e-14);
    }

    #[test]
    fn dilation_composes() {
        let f = DiscPolynomial::from_real(&[1.0, 1.0, 1.0, 1.0, 1.0]);
        let g = f.dilate(0.5).dilate(0.5);
        let h = f.dilate(0.25);
        for j in 0..=4 {
            assert_relative_eq!(g.coeff(j).re, h.coeff(j).re, max_relative = 1e-15);
        }
    }

    #[test]
    fn derivative_of_cubic() {
        let f = DiscPolynomial::from_real(&[5.0, 1.0, 2.0, 4.0]);
        let d = f.derivative();
        assert_eq!(d.degree(), 2);
        assert_eq!(d.coeff(0).re, 1.0);
        assert_eq!(d.coeff(1).re, 4.0);
        assert_eq!(d.coeff(2).re, 12.0);
    }

    #[test]
    fn random_polynomial_is_seed_stable() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        let f = DiscPolynomial::random(&mut r1, 15);
        let g = DiscPolynomial::random(&mut r2, 15);
        assert_eq!(f, g);
        assert!(f.degree() <= 15);
        assert!(f.coeffs().iter().all(|c| c.re.abs() <= 1.0 && c.im.abs() <= 1.0));
    }

    #[test]
    fn extremizer_at_origin_is_constant() {
        let f = DiscPolynomial::extremizer(
            Complex64::new(0.0, 0.0),
            Complex64::new(2.0, 0.0),
            2.0,
            1.0,
            10,
        );
        assert_eq!(f.degree(), 0);
        assert_eq!(f.coeff(0).re, 2.0);
    }

    #[test]
    fn extremizer_coefficients_follow_binomials() {
        // alpha = 2, p = 2 gives the weight 2 kernel: coefficients (j+1) xi^j.
        let xi = Complex64::new(0.5, 0.0);
        let f = DiscPolynomial::extremizer(xi, Complex64::new(1.0, 0.0), 2.0, 2.0, 5);
        for j in 0..=5usize {
            let expect = (j as f64 + 1.0) * 0.5f64.powi(j as i32);
            assert_relative_eq!(f.coeff(j).re, expect, max_relative = 1e-14);
        }
    }
}
