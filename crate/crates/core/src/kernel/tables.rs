//! Sieve-backed arithmetic tables: smallest prime factors, Moebius values,
//! prime-divisor counts, and exact integer divisor-power tables.

use std::io::Write;
use std::path::Path;

use crate::{Error, Result};

use super::divisor::binom_coeff;
use super::multiindex::MultiIndex;

const MAX_LIMIT: u64 = 100_000_000;

/// Arithmetic tables for `1..=limit` built by a single linear sieve pass.
#[derive(Debug, Clone)]
pub struct ArithmeticTables {
    limit: u64,
    /// Smallest prime factor; `spf[1] == 1`.
    spf: Vec<u32>,
    mobius: Vec<i8>,
    /// Count of distinct prime factors.
    omega: Vec<u8>,
    /// Count of prime factors with multiplicity.
    big_omega: Vec<u8>,
    primes: Vec<u32>,
}

impl ArithmeticTables {
    pub fn up_to(limit: u64) -> Result<ArithmeticTables> {
        if limit < 2 {
            return Err(Error::Domain("table limit must be at least 2".into()));
        }
        if limit > MAX_LIMIT {
            return Err(Error::DimensionTooLarge {
                what: "arithmetic table limit",
                dim: limit as usize,
                max: MAX_LIMIT as usize,
            });
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut mobius = vec![0i8; n + 1];
        let mut omega = vec![0u8; n + 1];
        let mut big_omega = vec![0u8; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        spf[1] = 1;
        mobius[1] = 1;
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                mobius[i] = -1;
                omega[i] = 1;
                big_omega[i] = 1;
                primes.push(i as u32);
            }
            for &p in &primes {
                let p = p as usize;
                if p > spf[i] as usize || i * p > n {
                    break;
                }
                let m = i * p;
                spf[m] = p as u32;
                if p == spf[i] as usize {
                    mobius[m] = 0;
                    omega[m] = omega[i];
                    big_omega[m] = big_omega[i] + 1;
                    break;
                } else {
                    mobius[m] = -mobius[i];
                    omega[m] = omega[i] + 1;
                    big_omega[m] = big_omega[i] + 1;
                }
            }
        }
        Ok(ArithmeticTables {
            limit,
            spf,
            mobius,
            omega,
            big_omega,
            primes,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn guard(&self, n: u64) -> Result<usize> {
        if n == 0 || n > self.limit {
            return Err(Error::Domain(format!(
                "{n} outside table range 1..={}",
                self.limit
            )));
        }
        Ok(n as usize)
    }

    /// Moebius value of `n`.
    pub fn mobius(&self, n: u64) -> Result<i8> {
        Ok(self.mobius[self.guard(n)?])
    }

    /// Number of distinct prime factors.
    pub fn omega(&self, n: u64) -> Result<u32> {
        Ok(self.omega[self.guard(n)?] as u32)
    }

    /// Number of prime factors with multiplicity.
    pub fn big_omega(&self, n: u64) -> Result<u32> {
        Ok(self.big_omega[self.guard(n)?] as u32)
    }

    pub fn is_squarefree(&self, n: u64) -> Result<bool> {
        Ok(self.mobius(n)? != 0)
    }

    /// `(prime, exponent)` pairs for `n`, primes ascending.
    pub fn factor_pairs(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        let mut m = self.guard(n)?;
        let mut out = Vec::new();
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        Ok(out)
    }

    /// Exponent sequence of `n` along the ascending primes.
    ///
    /// Same codec as [`super::factorize`], but resolved through the sieve.
    pub fn multi_index(&self, n: u64) -> Result<MultiIndex> {
        let pairs = self.factor_pairs(n)?;
        let mut exps: Vec<u32> = Vec::new();
        for (p, e) in pairs {
            let idx = self
                .primes
                .binary_search(&(p as u32))
                .map_err(|_| Error::Domain(format!("prime {p} missing from sieve")))?;
            if exps.len() <= idx {
                exps.resize(idx + 1, 0);
            }
            exps[idx] = e;
        }
        Ok(MultiIndex::new(exps))
    }

    /// Primes up to the table limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// Number of divisors of `n` (exact).
    pub fn divisor_count(&self, n: u64) -> Result<u64> {
        let pairs = self.factor_pairs(n)?;
        Ok(pairs.iter().map(|&(_, e)| (e + 1) as u64).product())
    }

    /// Real divisor power `d_alpha(n) = prod_j c_alpha(kappa_j)`.
    pub fn d_alpha(&self, alpha: f64, n: u64) -> Result<f64> {
        let pairs = self.factor_pairs(n)?;
        Ok(pairs
            .iter()
            .map(|&(_, e)| binom_coeff(alpha, e))
            .product())
    }

    /// Exact integer table of `d_k(n)` for `n <= len`, built by repeated
    /// Dirichlet convolution with the constant function 1.
    ///
    /// Index 0 is unused (set to 0). Values are exact in `u64` for the
    /// supported orders.
    pub fn divisor_power_table(&self, order: u32, len: u64) -> Result<Vec<u64>> {
        if order == 0 || order > 16 {
            return Err(Error::Domain(format!(
                "divisor power order {order} outside 1..=16"
            )));
        }
        let len = self.guard(len)? ;
        let mut cur = vec![1u64; len + 1];
        cur[0] = 0;
        for _ in 1..order {
            let mut next = vec![0u64; len + 1];
            for d in 1..=len {
                let mut m = d;
                while m <= len {
                    next[m] += cur[d];
                    m += d;
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// CSV table `n,d_2,d_4,Omega,omega,mu` for `n <= max_n`.
    pub fn csv_string(&self, max_n: u64) -> Result<String> {
        let max_n = self.guard(max_n.min(self.limit))? as u64;
        let d2 = self.divisor_power_table(2, max_n)?;
        let d4 = self.divisor_power_table(4, max_n)?;
        let mut out = String::from("n,d_2,d_4,Omega,omega,mu\n");
        for n in 1..=max_n {
            let i = n as usize;
            out.push_str(&format!(
                "{n},{},{},{},{},{}\n",
                d2[i], d4[i], self.big_omega[i], self.omega[i], self.mobius[i]
            ));
        }
        Ok(out)
    }

    /// Writes [`csv_string`](Self::csv_string) atomically (temp file + rename).
    pub fn write_csv(&self, path: &Path, max_n: u64) -> Result<()> {
        let body = self.csv_string(max_n)?;
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}
