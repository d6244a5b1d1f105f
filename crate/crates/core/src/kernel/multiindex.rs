//! Finitely supported exponent sequences and the integer codec
//! `n = prod_j p_j^{kappa_j}`.

use std::fmt;

use crate::{Error, Result};

use super::primes::PrimeTable;

/// Finitely supported sequence of non-negative exponents.
///
/// Canonical form: no trailing zeros, so equality and ordering are
/// structural. Coordinate `j` pairs with the `j`-th prime (zero-indexed)
/// under the integer codec, but the type itself is just an exponent vector
/// and is also used for plain polydisc monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(mut exps: Vec<u32>) -> MultiIndex {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        MultiIndex(exps)
    }

    /// The empty index (encodes the integer 1).
    pub fn empty() -> MultiIndex {
        MultiIndex(Vec::new())
    }

    /// Exponent in coordinate `j`; zero beyond the stored length.
    pub fn exponent(&self, j: usize) -> u32 {
        self.0.get(j).copied().unwrap_or(0)
    }

    /// Number of stored coordinates (position of the last nonzero, plus one).
    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Number of nonzero coordinates.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// Sum of exponents (total degree of the encoded monomial).
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Coordinate-wise sum; encodes integer multiplication.
    pub fn mul(&self, other: &MultiIndex) -> MultiIndex {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n)
            .map(|j| self.exponent(j) + other.exponent(j))
            .collect();
        MultiIndex::new(exps)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Factors `n >= 1` into its exponent sequence along the table's primes.
///
/// The table must contain every prime factor of `n`; otherwise an error is
/// returned rather than a silently truncated factorisation.
pub fn factorize(n: u64, primes: &PrimeTable) -> Result<MultiIndex> {
    if n == 0 {
        return Err(Error::Domain("factorize(0) is undefined".into()));
    }
    let mut rest = n;
    let mut exps: Vec<u32> = Vec::new();
    for (j, &p) in primes.as_slice().iter().enumerate() {
        if rest == 1 {
            break;
        }
        if p.saturating_mul(p) > rest {
            // The remaining cofactor is prime; locate it in the table.
            if let Some(idx) = primes.index_of(rest) {
                if exps.len() <= idx {
                    exps.resize(idx + 1, 0);
                }
                exps[idx] += 1;
                rest = 1;
            }
            break;
        }
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if exps.len() <= j {
                exps.resize(j + 1, 0);
            }
            exps[j] = e;
        }
    }
    if rest != 1 {
        return Err(Error::Domain(format!(
            "prime table (limit {}) does not cover all factors of {n}",
            primes.limit()
        )));
    }
    Ok(MultiIndex::new(exps))
}

/// Rebuilds the integer `prod_j p_j^{kappa_j}` from an exponent sequence.
pub fn index_to_integer(kappa: &MultiIndex, primes: &PrimeTable) -> Result<u64> {
    let mut n: u64 = 1;
    for (j, &e) in kappa.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let p = primes.get(j)?;
        for _ in 0..e {
            n = n
                .checked_mul(p)
                .ok_or_else(|| Error::Overflow(format!("index_to_integer at prime {p}")))?;
        }
    }
    Ok(n)
}
