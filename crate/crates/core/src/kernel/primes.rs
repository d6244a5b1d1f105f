//! Prime tables and 64-bit primality testing.

use crate::{Error, Result};

/// Ascending table of primes produced by a sieve of Eratosthenes.
///
/// The table records the bound it was sieved to, so lookups can tell the
/// difference between "not prime" and "beyond the table".
#[derive(Debug, Clone)]
pub struct PrimeTable {
    primes: Vec<u64>,
    limit: u64,
}

impl PrimeTable {
    /// Table of all primes `<= limit`.
    pub fn sieve_limit(limit: u64) -> PrimeTable {
        let limit = limit.max(2);
        assert!(limit <= 1 << 31, "sieve limit above 2^31 is not supported");
        let n = limit as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        PrimeTable {
            primes,
            limit,
        }
    }

    /// Table containing at least the first `count` primes.
    pub fn first(count: usize) -> PrimeTable {
        let count = count.max(1);
        // p_n < n (ln n + ln ln n) for n >= 6; below that a fixed bound does.
        let mut bound = if count < 6 {
            16.0
        } else {
            let n = count as f64;
            n * (n.ln() + n.ln().ln())
        } as u64
            + 16;
        loop {
            let table = PrimeTable::sieve_limit(bound);
            if table.len() >= count {
                return table;
            }
            bound *= 2;
        }
    }

    /// Number of primes in the table.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The `j`-th prime, zero-indexed (`get(0) == 2`).
    pub fn get(&self, j: usize) -> Result<u64> {
        self.primes
            .get(j)
            .copied()
            .ok_or_else(|| Error::Domain(format!("prime index {j} beyond table of {}", self.len())))
    }

    /// Bound the table was sieved to: every prime `<= limit` is present.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    /// Position of `p` in the table, if `p` is a prime within the sieve bound.
    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }
}

/// Deterministic Miller–Rabin primality test, correct for all `u64`.
///
/// Used as an independent cross-check on sieve output; the witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} decides 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
