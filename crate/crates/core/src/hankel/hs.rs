//! Hilbert–Schmidt masses of multiplicative Hankel forms.
//!
//! On the Bergman-weighted basis the squared HS mass of the form with
//! coefficients ρ is Σ_l |ρ_l|² d₄(l)/d(l)²; on the unweighted Hardy basis it
//! is Σ_n |ρ_n|² d(n).  Both weights are exact integers, so the identities
//! are checked in integer arithmetic wherever possible.

use num_complex::Complex64;

use crate::kernel::{factorize, PrimeTable};
use crate::{Error, Result};

use super::symbol::HankelSymbol;

/// Divisor-count table: `d[n]` for `0 ≤ n ≤ limit` (`d[0] = 0`).
pub fn divisor_table(limit: usize) -> Vec<u32> {
    let mut d = vec![0u32; limit + 1];
    for a in 1..=limit {
        for m in (a..=limit).step_by(a) {
            d[m] += 1;
        }
    }
    d
}

/// Four-fold divisor table via the Dirichlet square of `d`:
/// `d4[n] = Σ_{ab=n} d(a)·d(b)`.
pub fn d4_table(limit: usize) -> Vec<u64> {
    let d = divisor_table(limit);
    let mut d4 = vec![0u64; limit + 1];
    for a in 1..=limit {
        let da = u64::from(d[a]);
        for b in 1..=limit / a {
            d4[a * b] += da * u64::from(d[b]);
        }
    }
    d4
}

/// `(d(n), d₄(n))` from the prime factorization: per prime power p^e the
/// factors are e+1 and (e+1)(e+2)(e+3)/6.
pub fn divisor_pair(n: u64, primes: &PrimeTable) -> Result<(u64, u64)> {
    let idx = factorize(n, primes)?;
    let mut d: u64 = 1;
    let mut d4: u64 = 1;
    for &e in idx.exponents() {
        let e = u64::from(e);
        d = d
            .checked_mul(e + 1)
            .ok_or_else(|| Error::Overflow(format!("d({n})")))?;
        let local = (e + 1) * (e + 2) * (e + 3) / 6;
        d4 = d4
            .checked_mul(local)
            .ok_or_else(|| Error::Overflow(format!("d4({n})")))?;
    }
    Ok((d, d4))
}

/// Verifies Σ_{ab=l} d(a)d(b) = d₄(l) for every l ≤ `l_max` in exact
/// integer arithmetic.
pub fn d4_pair_sum_identity(l_max: usize) -> Result<()> {
    let d = divisor_table(l_max);
    let d4 = d4_table(l_max);
    for l in 1..=l_max {
        let mut sum = 0u64;
        let mut a = 1usize;
        while a * a <= l {
            if l % a == 0 {
                let b = l / a;
                let term = u64::from(d[a]) * u64::from(d[b]);
                sum += if a == b { term } else { 2 * term };
            }
            a += 1;
        }
        if sum != d4[l] {
            return Err(Error::Domain(format!(
                "pair sum {sum} != d4({l}) = {}",
                d4[l]
            )));
        }
    }
    Ok(())
}

fn multiplicative_only(phi: &HankelSymbol) -> Result<()> {
    if phi.is_one_variable() {
        return Err(Error::Domain(
            "Hilbert-Schmidt masses are defined for multiplicative symbols".into(),
        ));
    }
    Ok(())
}

/// HS norm on the Bergman-weighted basis: (Σ_l |ρ_l|² d₄(l)/d(l)²)^{1/2}.
pub fn hs_norm_bergman(phi: &HankelSymbol, primes: &PrimeTable) -> Result<f64> {
    multiplicative_only(phi)?;
    let mut sum = 0.0;
    for (l, rho) in phi.support_points() {
        let (d, d4) = divisor_pair(l, primes)?;
        sum += rho.norm_sqr() * (d4 as f64) / ((d * d) as f64);
    }
    Ok(sum.sqrt())
}

/// HS norm on the unweighted Hardy basis: (Σ_n |ρ_n|² d(n))^{1/2}.
pub fn hs_norm_hardy(phi: &HankelSymbol, primes: &PrimeTable) -> Result<f64> {
    multiplicative_only(phi)?;
    let mut sum = 0.0;
    for (n, rho) in phi.support_points() {
        let (d, _) = divisor_pair(n, primes)?;
        sum += rho.norm_sqr() * d as f64;
    }
    Ok(sum.sqrt())
}

/// Products of consecutive prime blocks of growing length:
/// n_1 = p_1, n_2 = p_2·p_3, n_3 = p_4·p_5·p_6, …
///
/// Each n_j is squarefree with exactly j prime factors, so the Hardy-side HS
/// weight d(n_j) = 2^j while the Bergman-side weight d₄(n_j)/d(n_j)² = 1.
pub fn witness_set(j_max: u32, primes: &PrimeTable) -> Result<Vec<u64>> {
    let needed = (j_max as usize) * (j_max as usize + 1) / 2;
    if primes.len() < needed {
        return Err(Error::Domain(format!(
            "need {needed} primes for {j_max} blocks, table has {}",
            primes.len()
        )));
    }
    let slice = primes.as_slice();
    let mut out = Vec::with_capacity(j_max as usize);
    let mut next = 0usize;
    for j in 1..=j_max {
        let mut prod: u64 = 1;
        for _ in 0..j {
            prod = prod
                .checked_mul(slice[next])
                .ok_or_else(|| Error::Overflow(format!("block product {j}")))?;
            next += 1;
        }
        out.push(prod);
    }
    Ok(out)
}

/// For each block product n_j, the exact integer ratio
/// d(n_j)³ / d₄(n_j) = (Hardy HS mass)/(Bergman HS mass) of the point symbol
/// at n_j; equals 2^j.
pub fn witness_hs_powers(j_max: u32, primes: &PrimeTable) -> Result<Vec<(u64, u64)>> {
    let points = witness_set(j_max, primes)?;
    let mut out = Vec::with_capacity(points.len());
    for &n in &points {
        let (d, d4) = divisor_pair(n, primes)?;
        let d_cubed = d
            .checked_mul(d)
            .and_then(|x| x.checked_mul(d))
            .ok_or_else(|| Error::Overflow(format!("d({n})^3")))?;
        if d_cubed % d4 != 0 {
            return Err(Error::Domain(format!(
                "d({n})^3 = {d_cubed} not divisible by d4 = {d4}"
            )));
        }
        out.push((n, d_cubed / d4));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_tables_match_factorization() {
        let primes = PrimeTable::sieve_limit(1100);
        let d = divisor_table(1000);
        let d4 = d4_table(1000);
        for n in [1u64, 2, 12, 60, 64, 97, 360, 720, 997, 1000] {
            let (dn, d4n) = divisor_pair(n, &primes).unwrap();
            assert_eq!(u64::from(d[n as usize]), dn, "d({n})");
            assert_eq!(d4[n as usize], d4n, "d4({n})");
        }
        assert_eq!(d[12], 6);
        assert_eq!(d4[12], 40);
        assert_eq!(d4[1], 1);
        assert_eq!(d4[2], 4);
    }

    #[test]
    fn pair_sum_identity_small() {
        d4_pair_sum_identity(2000).unwrap();
    }

    #[test]
    fn d4_bounded_by_d_cubed_sample() {
        let d = divisor_table(20_000);
        let d4 = d4_table(20_000);
        for n in 1..=20_000usize {
            let dc = u64::from(d[n]).pow(3);
            assert!(d4[n] <= dc, "d4({n}) = {} > d^3 = {dc}", d4[n]);
        }
    }

    #[test]
    fn point_symbol_masses() {
        let primes = PrimeTable::sieve_limit(100);
        let one = HankelSymbol::multiplicative(&[(1, Complex64::new(1.0, 0.0))]).unwrap();
        assert_eq!(hs_norm_bergman(&one, &primes).unwrap(), 1.0);
        assert_eq!(hs_norm_hardy(&one, &primes).unwrap(), 1.0);

        // ρ = δ_4: d(4) = 3, d4(4) = binom(5,3) = 10.
        let four = HankelSymbol::multiplicative(&[(4, Complex64::new(1.0, 0.0))]).unwrap();
        let b = hs_norm_bergman(&four, &primes).unwrap();
        let h = hs_norm_hardy(&four, &primes).unwrap();
        assert!((b - (10.0f64 / 9.0).sqrt()).abs() < 1e-15);
        assert!((h - 3.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn block_products_and_powers() {
        let primes = PrimeTable::sieve_limit(100);
        let set = witness_set(5, &primes).unwrap();
        assert_eq!(set, vec![2, 15, 1001, 215_441, 95_041_567]);
        let powers = witness_hs_powers(5, &primes).unwrap();
        for (j, &(n, ratio)) in powers.iter().enumerate() {
            assert_eq!(n, set[j]);
            assert_eq!(ratio, 1u64 << (j + 1), "block {}", j + 1);
        }
        // Bergman-side weight is exactly 1 on squarefree block products.
        for &n in &set {
            let (d, d4) = divisor_pair(n, &primes).unwrap();
            assert_eq!(d * d, d4);
        }
    }

    #[test]
    fn hs_rejects_one_variable_symbols() {
        let primes = PrimeTable::sieve_limit(100);
        let sym = HankelSymbol::one_variable(&[Complex64::new(1.0, 0.0)]);
        assert!(hs_norm_bergman(&sym, &primes).is_err());
    }

    #[test]
    fn witness_overflow_is_reported() {
        let primes = PrimeTable::sieve_limit(1000);
        assert!(matches!(
            witness_set(9, &primes),
            Err(Error::Overflow(_))
        ));
    }
}
