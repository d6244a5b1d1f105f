//! Polynomials on the polydisc and the index codec linking them to
//! Dirichlet polynomials.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::kernel::{binom_coeff, factorize, index_to_integer, MultiIndex, PrimeTable};
use crate::{Error, Result};

use super::dirichlet::DirichletPolynomial;

/// Polynomial `sum_kappa b_kappa w^kappa` in finitely many disc variables.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolydiscPolynomial {
    coeffs: BTreeMap<MultiIndex, Complex64>,
}

impl PolydiscPolynomial {
    pub fn new(coeffs: BTreeMap<MultiIndex, Complex64>) -> PolydiscPolynomial {
        PolydiscPolynomial {
            coeffs: coeffs
                .into_iter()
                .filter(|(_, c)| c.norm_sqr() != 0.0)
                .collect(),
        }
    }

    pub fn from_pairs(pairs: &[(MultiIndex, Complex64)]) -> PolydiscPolynomial {
        let mut map = BTreeMap::new();
        for (k, c) in pairs {
            *map.entry(k.clone()).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        PolydiscPolynomial::new(map)
    }

    pub fn constant(c: f64) -> PolydiscPolynomial {
        PolydiscPolynomial::from_pairs(&[(MultiIndex::empty(), Complex64::new(c, 0.0))])
    }

    pub fn coeff(&self, kappa: &MultiIndex) -> Complex64 {
        self.coeffs
            .get(kappa)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, Complex64)> + '_ {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of disc variables actually used.
    pub fn dimension(&self) -> usize {
        self.coeffs.keys().map(|k| k.dimension()).max().unwrap_or(0)
    }

    /// Per-variable maximum exponents, length [`Self::dimension`].
    pub fn degrees(&self) -> Vec<u32> {
        let d = self.dimension();
        let mut out = vec![0u32; d];
        for k in self.coeffs.keys() {
            for (j, slot) in out.iter_mut().enumerate() {
                *slot = (*slot).max(k.exponent(j));
            }
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn eval(&self, w: &[Complex64]) -> Result<Complex64> {
        if w.len() < self.dimension() {
            return Err(Error::Domain(format!(
                "evaluation point has {} coordinates, polynomial uses {}",
                w.len(),
                self.dimension()
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in &self.coeffs {
            let mut term = c;
            for (j, &e) in k.exponents().iter().enumerate() {
                if e > 0 {
                    term *= w[j].powi(e as i32);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: Complex64) -> PolydiscPolynomial {
        PolydiscPolynomial::new(self.coeffs.iter().map(|(k, &a)| (k.clone(), a * c)).collect())
    }

    pub fn add(&self, other: &PolydiscPolynomial) -> PolydiscPolynomial {
        let mut map = self.coeffs.clone();
        for (k, &c) in &other.coeffs {
            *map.entry(k.clone()).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        PolydiscPolynomial::new(map)
    }

    pub fn mul(&self, other: &PolydiscPolynomial) -> PolydiscPolynomial {
        let mut map: BTreeMap<MultiIndex, Complex64> = BTreeMap::new();
        for (j, &a) in &self.coeffs {
            for (k, &b) in &other.coeffs {
                *map.entry(j.mul(k)).or_insert(Complex64::new(0.0, 0.0)) += a * b;
            }
        }
        PolydiscPolynomial::new(map)
    }

    pub fn powi(&self, h: u32) -> PolydiscPolynomial {
        let mut out = PolydiscPolynomial::constant(1.0);
        for _ in 0..h {
            out = out.mul(self);
        }
        out
    }

    /// Per-variable dilation `w_j -> r_j w_j`.
    pub fn dilate(&self, r: &[f64]) -> Result<PolydiscPolynomial> {
        if r.len() < self.dimension() {
            return Err(Error::Domain(format!(
                "dilation vector has {} entries, polynomial uses {}",
                r.len(),
                self.dimension()
            )));
        }
        let map = self
            .coeffs
            .iter()
            .map(|(k, &c)| {
                let mut factor = 1.0;
                for (j, &e) in k.exponents().iter().enumerate() {
                    factor *= r[j].powi(e as i32);
                }
                (k.clone(), c * factor)
            })
            .collect();
        Ok(PolydiscPolynomial::new(map))
    }

    /// Coefficient-side `A^2` norm with per-variable weight `alpha`:
    /// `(sum |b_kappa|^2 / prod_j c_alpha(kappa_j))^{1/2}`.
    pub fn norm_a2alpha_coeff(&self, alpha: f64) -> f64 {
        let mut acc = 0.0;
        for (k, &c) in &self.coeffs {
            let mut weight = 1.0;
            for &e in k.exponents() {
                weight *= binom_coeff(alpha, e);
            }
            acc += c.norm_sqr() / weight;
        }
        acc.sqrt()
    }
}

/// Bohr lift: `n^{-s}` with `n = prod p_j^{kappa_j}` becomes the monomial
/// `w^kappa`. Exact on indices; fails if the prime table does not cover
/// the support.
pub fn bohr_lift(f: &DirichletPolynomial, primes: &PrimeTable) -> Result<PolydiscPolynomial> {
    let mut map = BTreeMap::new();
    for (n, c) in f.terms() {
        map.insert(factorize(n, primes)?, c);
    }
    Ok(PolydiscPolynomial::new(map))
}

/// Inverse of [`bohr_lift`]; fails on u64 overflow or an undersized table.
pub fn bohr_unlift(
    big_f: &PolydiscPolynomial,
    primes: &PrimeTable,
) -> Result<DirichletPolynomial> {
    let mut map = BTreeMap::new();
    for (kappa, c) in big_f.terms() {
        map.insert(index_to_integer(kappa, primes)?, c);
    }
    DirichletPolynomial::new(map)
}
