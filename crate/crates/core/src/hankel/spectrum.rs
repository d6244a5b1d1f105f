//! Singular spectra of Hankel truncations.
//!
//! Values are computed by one-sided reduction: the Hermitian Gram matrix is
//! diagonalized and singular values recovered as square roots.  This squares
//! the condition number, so values below ~1e-8·s_0 carry absolute error of
//! order 1e-16·s_0²; every consumer in this crate compares at tolerances
//! above that floor.  For large matrices of certified small rank a seeded
//! randomized range capture reduces the problem to the rank bound.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::par;

use super::matrix::HankelMatrix;

/// Nonincreasing singular values of one truncation.
#[derive(Debug, Clone)]
pub struct SingularSpectrum {
    values: Vec<f64>,
}

impl SingularSpectrum {
    fn from_raw(mut values: Vec<f64>) -> Self {
        for v in &mut values {
            if !v.is_finite() || *v < 0.0 {
                *v = 0.0;
            }
        }
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// s_n, zero beyond the stored length.
    pub fn get(&self, n: usize) -> f64 {
        self.values.get(n).copied().unwrap_or(0.0)
    }

    /// Σ s_n².
    pub fn frobenius_mass(&self) -> f64 {
        self.values.iter().map(|s| s * s).sum()
    }

    /// max_n |s_n − t_n| over the longer index range.
    pub fn max_abs_diff(&self, other: &SingularSpectrum) -> f64 {
        let n = self.len().max(other.len());
        (0..n)
            .map(|i| (self.get(i) - other.get(i)).abs())
            .fold(0.0, f64::max)
    }
}

/// Hermitian Gram matrix AᴴA with parallel column assembly.
fn gram(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.ncols();
    let data = par::map_collect(n * n, |idx| {
        let j = idx / n;
        let k = idx % n;
        // Column-major layout: entry (k, j) of the Gram matrix.
        a.column(k).dotc(&a.column(j))
    });
    DMatrix::from_vec(n, n, data)
}

fn sqrt_eigenvalues(g: DMatrix<Complex64>) -> Vec<f64> {
    let eig = g.symmetric_eigen();
    eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect()
}

/// All singular values of a dense matrix, descending.
pub fn singular_values_dense(a: &DMatrix<Complex64>) -> Vec<f64> {
    if a.ncols() == 0 || a.nrows() == 0 {
        return Vec::new();
    }
    // Reduce on the smaller side.
    let g = if a.ncols() <= a.nrows() { gram(a) } else { gram(&a.adjoint()) };
    let mut v = sqrt_eigenvalues(g);
    v.sort_by(|x, y| y.partial_cmp(x).unwrap());
    v.truncate(a.nrows().min(a.ncols()));
    SingularSpectrum::from_raw(v).values
}

pub fn singular_values(m: &HankelMatrix) -> SingularSpectrum {
    SingularSpectrum::from_raw(singular_values_dense(m.entries()))
}

fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..=1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Singular values of a matrix whose rank is certified ≤ `rank_bound`,
/// via randomized range capture: sketch Y = A·Ω with Ω Gaussian of
/// rank_bound + 8 columns, orthonormalize, and reduce A to the captured
/// range.  Exact (to roundoff) when the rank bound holds.  The returned
/// spectrum is padded with the structural zeros up to min dimension.
pub fn singular_values_lowrank(
    a: &DMatrix<Complex64>,
    rank_bound: usize,
    seed: u64,
) -> SingularSpectrum {
    let (m, n) = (a.nrows(), a.ncols());
    let min_dim = m.min(n);
    let k = (rank_bound + 8).min(min_dim);
    if min_dim == 0 {
        return SingularSpectrum::from_raw(Vec::new());
    }
    if k >= min_dim || min_dim <= 64 {
        let mut v = singular_values_dense(a);
        v.resize(min_dim, 0.0);
        return SingularSpectrum::from_raw(v);
    }

    // Seeded Gaussian test columns, generated per column for determinism.
    let omega_cols: Vec<DVector<Complex64>> = par::map_collect(k, |j| {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ (j as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        DVector::from_fn(n, |_, _| {
            Complex64::new(standard_normal(&mut rng), standard_normal(&mut rng))
        })
    });
    let y_cols: Vec<DVector<Complex64>> = par::map_collect(k, |j| a * &omega_cols[j]);
    let y = DMatrix::from_columns(&y_cols);
    let q = y.qr().q();

    // B = Qᴴ·A, assembled by columns in parallel.
    let b_cols: Vec<DVector<Complex64>> = par::map_collect(n, |j| {
        let col = a.column(j);
        DVector::from_fn(k, |i, _| q.column(i).dotc(&col))
    });
    let b = DMatrix::from_columns(&b_cols);

    // Small Gram on the sketch side: BBᴴ is k×k.
    let bh = b.adjoint();
    let h = gram(&bh);
    let mut vals = sqrt_eigenvalues(h);
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals.resize(min_dim, 0.0);
    SingularSpectrum::from_raw(vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::matrix::build_bergman_hankel;
    use crate::hankel::symbol::HankelSymbol;

    fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DMatrix<Complex64> {
        DMatrix::from_fn(m, n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
        })
    }

    #[test]
    fn golden_swap_matrix() {
        let phi = HankelSymbol::one_variable(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(2.0f64.sqrt(), 0.0),
        ]);
        let m = build_bergman_hankel(&phi, 1).unwrap();
        let s = singular_values(&m);
        assert_eq!(s.len(), 2);
        assert!((s.get(0) - 1.0).abs() < 1e-14);
        assert!((s.get(1) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zero_matrix_spectrum() {
        let a = DMatrix::from_element(5, 5, Complex64::new(0.0, 0.0));
        let s = singular_values_dense(&a);
        assert_eq!(s.len(), 5);
        assert!(s.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn dense_matches_svd_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let a = random_matrix(&mut rng, 8, 8);
            let mine = singular_values_dense(&a);
            let mut oracle: Vec<f64> =
                a.clone().svd(false, false).singular_values.iter().copied().collect();
            oracle.sort_by(|x, y| y.partial_cmp(x).unwrap());
            for (u, v) in mine.iter().zip(oracle.iter()) {
                assert!((u - v).abs() < 1e-10, "dense {u} vs svd {v}");
            }
        }
    }

    #[test]
    fn frobenius_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 12, 12);
        let s = SingularSpectrum::from_raw(singular_values_dense(&a));
        let mass: f64 = a.iter().map(|z| z.norm_sqr()).sum();
        assert!((s.frobenius_mass() - mass).abs() < 1e-10 * mass);
    }

    #[test]
    fn lowrank_matches_dense_on_certified_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let x = random_matrix(&mut rng, 90, 5);
        let y = random_matrix(&mut rng, 5, 90);
        let a = &x * &y;
        let dense = singular_values_dense(&a);
        let low = singular_values_lowrank(&a, 5, 77);
        assert_eq!(low.len(), 90);
        for i in 0..10 {
            assert!(
                (dense[i] - low.get(i)).abs() < 1e-9 * (1.0 + dense[0]),
                "s_{i}: {} vs {}",
                dense[i],
                low.get(i)
            );
        }
        assert!(low.get(5) < 1e-9 * dense[0]);
    }

    #[test]
    fn lowrank_is_seed_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random_matrix(&mut rng, 70, 4);
        let y = random_matrix(&mut rng, 4, 70);
        let a = &x * &y;
        let s1 = singular_values_lowrank(&a, 4, 123);
        let s2 = singular_values_lowrank(&a, 4, 123);
        for (u, v) in s1.values().iter().zip(s2.values()) {
            assert_eq!(u.to_bits(), v.to_bits());
        }
    }

    #[test]
    fn principal_truncation_interlaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let phi = HankelSymbol::random_one_variable(&mut rng, 6);
        let m = build_bergman_hankel(&phi, 10).unwrap();
        let full = singular_values(&m);
        let sub = singular_values(&m.principal_truncation(7));
        for i in 0..sub.len() {
            assert!(sub.get(i) <= full.get(i) + 1e-12, "index {i}");
        }
    }
}
