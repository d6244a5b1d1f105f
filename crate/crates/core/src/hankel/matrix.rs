//! Dense truncations of Hankel forms on three basis schemes:
//! the weighted multiplicative basis, the unweighted multiplicative basis,
//! and the two-variable monomial basis of total degree ≤ D.

use std::fmt::Write as _;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::{par, Error, Result};

use super::hs::divisor_table;
use super::ops::TwoVarPolynomial;
use super::symbol::HankelSymbol;

/// Largest multiplicative basis size; the builder needs divisor counts up to
/// the square of this.
const MAX_INTEGER_BASIS: u64 = 3000;
/// Largest total degree for the two-variable scheme (dimension (D+1)(D+2)/2).
const MAX_PAIR_DEGREE: u32 = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Hardy,
    Bergman,
    TwoVarHardy,
}

impl Scheme {
    pub fn label(self) -> &'static str {
        match self {
            Scheme::Hardy => "hardy",
            Scheme::Bergman => "bergman",
            Scheme::TwoVarHardy => "two-var-hardy",
        }
    }
}

/// Basis labels in matrix order.
#[derive(Debug, Clone)]
pub enum BasisLabels {
    /// Multiplicative bases: the integer labels themselves.
    Integers(Vec<u64>),
    /// One-variable degree basis 0..=max_degree.
    Degrees(u32),
    /// Two-variable monomial exponents (j, k), sorted by (j+k, j).
    DegreePairs(Vec<(u32, u32)>),
}

#[derive(Debug, Clone)]
pub struct HankelMatrix {
    entries: DMatrix<Complex64>,
    scheme: Scheme,
    labels: BasisLabels,
    n_basis: u64,
}

impl HankelMatrix {
    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn labels(&self) -> &BasisLabels {
        &self.labels
    }

    /// Basis parameter: largest integer label, or the degree bound.
    pub fn n_basis(&self) -> u64 {
        self.n_basis
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }

    /// Squared Frobenius mass Σ|entry|².
    pub fn frobenius_mass(&self) -> f64 {
        let s = self.entries.as_slice();
        par::sum_indexed(s.len(), |i| s[i].norm_sqr())
    }

    /// Leading k×k principal submatrix with the same scheme.
    pub fn principal_truncation(&self, k: usize) -> HankelMatrix {
        let k = k.min(self.dim());
        let entries = self.entries.view((0, 0), (k, k)).into_owned();
        let labels = match &self.labels {
            BasisLabels::Integers(v) => BasisLabels::Integers(v[..k].to_vec()),
            BasisLabels::Degrees(_) => BasisLabels::Degrees(k.saturating_sub(1) as u32),
            BasisLabels::DegreePairs(v) => BasisLabels::DegreePairs(v[..k].to_vec()),
        };
        HankelMatrix { entries, scheme: self.scheme, labels, n_basis: self.n_basis }
    }

    /// Text export: `scheme <tag>`, `n_basis <N>`, `rows <r> cols <c>`, then
    /// one line per row of "re im" pairs.
    pub fn to_text_string(&self) -> String {
        let (r, c) = (self.entries.nrows(), self.entries.ncols());
        let mut out = String::new();
        let _ = writeln!(out, "scheme {}", self.scheme.label());
        let _ = writeln!(out, "n_basis {}", self.n_basis);
        let _ = writeln!(out, "rows {r} cols {c}");
        for i in 0..r {
            let mut line = String::new();
            for j in 0..c {
                if j > 0 {
                    line.push(' ');
                }
                let z = self.entries[(i, j)];
                let _ = write!(line, "{} {}", z.re, z.im);
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    pub fn write_text(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text_string())?;
        Ok(())
    }
}

fn assemble<F>(dim: usize, scheme: Scheme, labels: BasisLabels, n_basis: u64, f: F) -> HankelMatrix
where
    F: Fn(usize, usize) -> Complex64 + Sync,
{
    // Column-major fill to match DMatrix::from_vec.
    let data = par::map_collect(dim * dim, |k| {
        let col = k / dim;
        let row = k % dim;
        f(row, col)
    });
    HankelMatrix {
        entries: DMatrix::from_vec(dim, dim, data),
        scheme,
        labels,
        n_basis,
    }
}

/// Hankel form on the Bergman-weighted basis.
///
/// Multiplicative symbols: basis e_n = z^{κ(n)}√d(n) for 1 ≤ n ≤ N, entry
/// (m,n) = ρ_{mn}·√(d(m)d(n))/d(mn); requires the symbol specified through
/// N².  One-variable symbols: `n_basis` is the maximal degree D, basis
/// e_j = w^j√(j+1), entry (j,k) = ρ_{j+k}·√((j+1)(k+1))/(j+k+1); requires
/// the symbol specified through 2D.
pub fn build_bergman_hankel(phi: &HankelSymbol, n_basis: u64) -> Result<HankelMatrix> {
    if phi.is_one_variable() {
        let d = u32::try_from(n_basis)
            .map_err(|_| Error::Domain("degree bound out of range".into()))?;
        phi.require_coverage(2 * u64::from(d))?;
        let dim = d as usize + 1;
        let rho = {
            let mut v = vec![Complex64::new(0.0, 0.0); 2 * dim - 1];
            for (l, c) in phi.support_points() {
                if (l as usize) < v.len() {
                    v[l as usize] = c;
                }
            }
            v
        };
        return Ok(assemble(
            dim,
            Scheme::Bergman,
            BasisLabels::Degrees(d),
            n_basis,
            move |j, k| {
                let l = j + k;
                let w = (((j + 1) * (k + 1)) as f64).sqrt() / (l + 1) as f64;
                rho[l] * w
            },
        ));
    }

    if n_basis == 0 || n_basis > MAX_INTEGER_BASIS {
        return Err(Error::DimensionTooLarge {
            what: "multiplicative basis",
            dim: n_basis as usize,
            max: MAX_INTEGER_BASIS as usize,
        });
    }
    phi.require_coverage(n_basis * n_basis)?;
    let n = n_basis as usize;
    let d = divisor_table(n * n);
    let mut rho = vec![Complex64::new(0.0, 0.0); n * n + 1];
    for (l, c) in phi.support_points() {
        if let Ok(idx) = usize::try_from(l) {
            if idx < rho.len() {
                rho[idx] = c;
            }
        }
    }
    let labels: Vec<u64> = (1..=n_basis).collect();
    Ok(assemble(
        n,
        Scheme::Bergman,
        BasisLabels::Integers(labels),
        n_basis,
        move |i, j| {
            let (m, k) = (i + 1, j + 1);
            let prod = m * k;
            let w = ((d[m] as f64) * (d[k] as f64)).sqrt() / d[prod] as f64;
            rho[prod] * w
        },
    ))
}

/// Hankel form on the unweighted multiplicative basis: entry (m,n) = ρ_{mn}
/// for the basis 1..=N.
pub fn build_hardy_hankel(phi: &HankelSymbol, n_basis: u64) -> Result<HankelMatrix> {
    if n_basis == 0 || n_basis > MAX_INTEGER_BASIS {
        return Err(Error::DimensionTooLarge {
            what: "multiplicative basis",
            dim: n_basis as usize,
            max: MAX_INTEGER_BASIS as usize,
        });
    }
    let basis: Vec<u64> = (1..=n_basis).collect();
    build_hardy_hankel_on_basis(phi, &basis)
}

/// Unweighted multiplicative Hankel form on an explicit basis list.
pub fn build_hardy_hankel_on_basis(
    phi: &HankelSymbol,
    basis: &[u64],
) -> Result<HankelMatrix> {
    if phi.is_one_variable() {
        return Err(Error::Domain(
            "unweighted multiplicative scheme needs a multiplicative symbol".into(),
        ));
    }
    if basis.is_empty() || basis.len() > MAX_INTEGER_BASIS as usize {
        return Err(Error::DimensionTooLarge {
            what: "multiplicative basis",
            dim: basis.len(),
            max: MAX_INTEGER_BASIS as usize,
        });
    }
    if basis.iter().any(|&b| b == 0) {
        return Err(Error::Domain("basis labels start at 1".into()));
    }
    let mut max_prod: u64 = 0;
    for &m in basis {
        for &n in basis {
            let p = m
                .checked_mul(n)
                .ok_or_else(|| Error::Overflow(format!("basis product {m}*{n}")))?;
            max_prod = max_prod.max(p);
        }
    }
    phi.require_coverage(max_prod)?;
    let labels = basis.to_vec();
    let phi = phi.clone();
    let basis: Vec<u64> = labels.clone();
    let n_basis = *labels.iter().max().unwrap();
    Ok(assemble(
        basis.len(),
        Scheme::Hardy,
        BasisLabels::Integers(labels),
        n_basis,
        move |i, j| phi.rho(basis[i] * basis[j]),
    ))
}

/// Monomial basis (j, k) with j+k ≤ D, sorted by (j+k, j).
pub fn pair_basis(max_total_degree: u32) -> Vec<(u32, u32)> {
    let mut basis = Vec::new();
    for l in 0..=max_total_degree {
        for j in 0..=l {
            basis.push((j, l - j));
        }
    }
    basis
}

/// Hankel form on the two-variable monomial basis of total degree ≤ D.
///
/// `r` holds the pairing coefficients: the form's value on the product
/// monomial z₁^a z₂^b is `r.coeff(a, b)`, so the matrix entry at
/// ((j,k),(j',k')) is `r.coeff(j+j', k+k')`.
pub fn build_two_var_hardy(
    r: &TwoVarPolynomial,
    max_total_degree: u32,
) -> Result<HankelMatrix> {
    if max_total_degree > MAX_PAIR_DEGREE {
        return Err(Error::DimensionTooLarge {
            what: "two-variable degree",
            dim: max_total_degree as usize,
            max: MAX_PAIR_DEGREE as usize,
        });
    }
    let basis = pair_basis(max_total_degree);
    let dim = basis.len();
    // Dense lookup for the pairing coefficients up to total degree 2D.
    let side = 2 * max_total_degree as usize + 1;
    let mut table = vec![Complex64::new(0.0, 0.0); side * side];
    for ((a, b), c) in r.terms() {
        let (a, b) = (a as usize, b as usize);
        if a < side && b < side {
            table[a * side + b] = c;
        }
    }
    let labels = BasisLabels::DegreePairs(basis.clone());
    Ok(assemble(
        dim,
        Scheme::TwoVarHardy,
        labels,
        u64::from(max_total_degree),
        move |i, j| {
            let (a1, b1) = basis[i];
            let (a2, b2) = basis[j];
            let a = (a1 + a2) as usize;
            let b = (b1 + b2) as usize;
            table[a * side + b]
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::DiscPolynomial;
    use crate::hankel::ops::extend_e;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn one_variable_golden_two_by_two() {
        // Symbol √2·w on the degree basis {1, w√2}.
        let phi = HankelSymbol::one_variable(&[re(0.0), re(2.0f64.sqrt())]);
        let m = build_bergman_hankel(&phi, 1).unwrap();
        assert_eq!(m.dim(), 2);
        assert!((m.entry(0, 1) - re(1.0)).norm() < 1e-15);
        assert!((m.entry(1, 0) - re(1.0)).norm() < 1e-15);
        assert!(m.entry(0, 0).norm() < 1e-15);
        assert!(m.entry(1, 1).norm() < 1e-15);
    }

    #[test]
    fn point_symbol_is_rank_one_diagonal() {
        let phi = HankelSymbol::multiplicative(&[(1, re(1.0))]).unwrap();
        let m = build_bergman_hankel(&phi, 4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == 0 && j == 0 { 1.0 } else { 0.0 };
                assert!((m.entry(i, j) - re(expect)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn divisor_symbol_is_outer_product() {
        // ρ_l = d(l) makes the weighted entry √(d(m)d(n)).
        let n = 12u64;
        let d = divisor_table((n * n) as usize);
        let pairs: Vec<(u64, Complex64)> = (1..=n * n)
            .map(|l| (l, re(f64::from(d[l as usize]))))
            .collect();
        let phi = HankelSymbol::multiplicative(&pairs).unwrap();
        let m = build_bergman_hankel(&phi, n).unwrap();
        let v: Vec<f64> = (1..=n as usize).map(|k| f64::from(d[k]).sqrt()).collect();
        let mut mass = 0.0;
        for i in 0..n as usize {
            for j in 0..n as usize {
                assert!(
                    (m.entry(i, j).re - v[i] * v[j]).abs() < 1e-12,
                    "entry ({i},{j})"
                );
                mass += (v[i] * v[j]).powi(2);
            }
        }
        assert!((m.frobenius_mass() - mass).abs() < 1e-9 * mass);
    }

    #[test]
    fn hardy_square_free_golden() {
        // (z₁+z₂)/2 on the basis {1, z₁, z₂, z₁z₂}: entries 1/2 at products 2, 3.
        let phi = HankelSymbol::multiplicative(&[(2, re(0.5)), (3, re(0.5))]).unwrap();
        let m = build_hardy_hankel_on_basis(&phi, &[1, 2, 3, 6]).unwrap();
        let expect = [
            [0.0, 0.5, 0.5, 0.0],
            [0.5, 0.0, 0.0, 0.0],
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert!((m.entry(i, j) - re(expect[i][j])).norm() < 1e-15);
            }
        }
        assert_eq!(m.n_basis(), 6);
    }

    #[test]
    fn truncated_symbol_refuses_undersized_support() {
        let phi = HankelSymbol::multiplicative_truncated(&[(2, re(1.0))], 10).unwrap();
        assert!(build_bergman_hankel(&phi, 3).is_ok()); // needs 9 ≤ 10
        let err = build_bergman_hankel(&phi, 4).unwrap_err(); // needs 16 > 10
        assert!(matches!(err, Error::SymbolSupport { needed: 16, declared: 10 }));
        assert!(matches!(
            build_hardy_hankel(&phi, 4).unwrap_err(),
            Error::SymbolSupport { .. }
        ));
    }

    #[test]
    fn two_var_scheme_from_extension() {
        // E carries √2·w to (z₁+z₂)/√2.
        let g = DiscPolynomial::new(vec![re(0.0), re(2.0f64.sqrt())]);
        let r = extend_e(&g);
        let m = build_two_var_hardy(&r, 1).unwrap();
        // Basis (0,0), (0,1), (1,0).
        assert_eq!(m.dim(), 3);
        let h = 0.5f64 * 2.0f64.sqrt();
        let expect = [[0.0, h, h], [h, 0.0, 0.0], [h, 0.0, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((m.entry(i, j) - re(expect[i][j])).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn entries_depend_only_on_products() {
        let pairs: Vec<(u64, Complex64)> = (1..=64)
            .map(|l| (l, Complex64::new((l as f64).sin(), (l as f64).cos())))
            .collect();
        let phi = HankelSymbol::multiplicative(&pairs).unwrap();
        let m = build_hardy_hankel(&phi, 8).unwrap();
        // (2,6) and (3,4) both have product 12; (1,8) and (2,4) both 8.
        assert_eq!(m.entry(1, 5), m.entry(2, 3));
        assert_eq!(m.entry(0, 7), m.entry(1, 3));
        let b = build_bergman_hankel(&phi, 8).unwrap();
        // Weighted entries at equal products differ by the √(d(m)d(n)) factor.
        let d = divisor_table(64);
        let w =
            |m: usize, n: usize| ((d[m] as f64) * (d[n] as f64)).sqrt() / d[m * n] as f64;
        assert!(
            (b.entry(1, 5) / w(2, 6) - b.entry(2, 3) / w(3, 4)).norm() < 1e-14
        );
    }

    #[test]
    fn text_export_golden() {
        let phi = HankelSymbol::one_variable(&[re(0.0), re(2.0f64.sqrt())]);
        let m = build_bergman_hankel(&phi, 1).unwrap();
        let text = m.to_text_string();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("scheme bergman"));
        assert_eq!(lines.next(), Some("n_basis 1"));
        assert_eq!(lines.next(), Some("rows 2 cols 2"));
        let row0 = lines.next().unwrap();
        let vals: Vec<f64> = row0.split(' ').map(|t| t.parse().unwrap()).collect();
        assert_eq!(vals.len(), 4);
        assert!((vals[2] - 1.0).abs() < 1e-15);
    }
}
