//! Symbol data for Hankel forms: a finitely stored coefficient sequence
//! together with a record of how far that sequence is actually specified.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

/// How far the stored coefficients describe the underlying sequence.
///
/// `Complete` means every index beyond the stored support is a true zero
/// (finite polynomial symbols).  `TruncatedAt(n)` means the sequence is only
/// specified through index `n`; builders must refuse products beyond that
/// point instead of silently treating them as zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolSupport {
    Complete,
    TruncatedAt(u64),
}

/// Coefficient data `ρ` of a Hankel form.
///
/// Multiplicative symbols are indexed by integers `n ≥ 1`; one-variable
/// symbols are indexed by monomial degree starting at `0`.  The map stores
/// only nonzero coefficients.
#[derive(Debug, Clone)]
pub struct HankelSymbol {
    rho: BTreeMap<u64, Complex64>,
    support: SymbolSupport,
    one_variable: bool,
}

impl HankelSymbol {
    /// Multiplicative symbol from `(n, ρ_n)` pairs, complete (all other
    /// coefficients are genuine zeros).
    pub fn multiplicative(pairs: &[(u64, Complex64)]) -> Result<Self> {
        let mut rho = BTreeMap::new();
        for &(n, v) in pairs {
            if n == 0 {
                return Err(Error::Domain(
                    "multiplicative symbol indices start at 1".into(),
                ));
            }
            if v != Complex64::new(0.0, 0.0) {
                rho.insert(n, v);
            }
        }
        Ok(Self { rho, support: SymbolSupport::Complete, one_variable: false })
    }

    /// Multiplicative symbol specified only for `n ≤ n_sym`.
    pub fn multiplicative_truncated(
        pairs: &[(u64, Complex64)],
        n_sym: u64,
    ) -> Result<Self> {
        let mut sym = Self::multiplicative(pairs)?;
        if sym.max_stored() > n_sym {
            return Err(Error::Domain(format!(
                "stored index {} exceeds declared truncation {}",
                sym.max_stored(),
                n_sym
            )));
        }
        sym.support = SymbolSupport::TruncatedAt(n_sym);
        Ok(sym)
    }

    /// One-variable symbol with coefficient `coeffs[l]` at degree `l`.
    pub fn one_variable(coeffs: &[Complex64]) -> Self {
        let rho = coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != Complex64::new(0.0, 0.0))
            .map(|(l, v)| (l as u64, *v))
            .collect();
        Self { rho, support: SymbolSupport::Complete, one_variable: true }
    }

    /// Random one-variable symbol of degree ≤ `max_degree`, coefficients
    /// with real and imaginary parts uniform in [-1, 1].
    pub fn random_one_variable<R: Rng>(rng: &mut R, max_degree: u32) -> Self {
        let deg = rng.gen_range(0..=max_degree) as usize;
        let coeffs: Vec<Complex64> = (0..=deg)
            .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
            .collect();
        Self::one_variable(&coeffs)
    }

    pub fn is_one_variable(&self) -> bool {
        self.one_variable
    }

    pub fn support(&self) -> SymbolSupport {
        self.support
    }

    /// Coefficient at `idx`; zero when absent.
    pub fn rho(&self, idx: u64) -> Complex64 {
        self.rho.get(&idx).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Largest stored index (0 for the empty symbol).
    pub fn max_stored(&self) -> u64 {
        self.rho.keys().next_back().copied().unwrap_or(0)
    }

    /// Declared extent of specification: `TruncatedAt(n)` gives `n`,
    /// complete symbols report their stored maximum.
    pub fn declared_extent(&self) -> u64 {
        match self.support {
            SymbolSupport::Complete => self.max_stored(),
            SymbolSupport::TruncatedAt(n) => n,
        }
    }

    /// Whether the symbol is specified (stored or known zero) through `idx`.
    pub fn covers(&self, idx: u64) -> bool {
        match self.support {
            SymbolSupport::Complete => true,
            SymbolSupport::TruncatedAt(n) => idx <= n,
        }
    }

    /// Guard used by matrix builders: every product index up to `needed`
    /// must be covered.
    pub fn require_coverage(&self, needed: u64) -> Result<()> {
        if self.covers(needed) {
            Ok(())
        } else {
            Err(Error::SymbolSupport { needed, declared: self.declared_extent() })
        }
    }

    /// Stored (index, coefficient) pairs in increasing index order.
    pub fn support_points(&self) -> impl Iterator<Item = (u64, Complex64)> + '_ {
        self.rho.iter().map(|(&n, &v)| (n, v))
    }

    pub fn support_len(&self) -> usize {
        self.rho.len()
    }

    /// Dense coefficient vector of a one-variable symbol, indices 0..=degree.
    pub fn one_variable_coeffs(&self) -> Vec<Complex64> {
        let deg = self.max_stored() as usize;
        let mut v = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (l, c) in self.support_points() {
            v[l as usize] = c;
        }
        v
    }
}
