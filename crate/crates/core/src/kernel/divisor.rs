//! Binomial-series coefficients `c_alpha(j)`, their multiplicative
//! counterparts `d_alpha(n)`, and convolution residuals.
//!
//! `c_alpha(j)` is the `j`-th Taylor coefficient of `(1-x)^{-alpha}`, so
//! additive convolution of `c_alpha` with `c_beta` gives `c_{alpha+beta}`
//! and Dirichlet convolution of `d_alpha` with `d_beta` gives
//! `d_{alpha+beta}`. Floating-point paths come with exact-rational
//! counterparts used as oracles in tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::Result;

use super::multiindex::MultiIndex;
use super::tables::ArithmeticTables;

/// `c_alpha(j) = prod_{i=1..j} (alpha + i - 1)/i`, the binomial-series
/// coefficient `binom(j + alpha - 1, j)`.
pub fn binom_coeff(alpha: f64, j: u32) -> f64 {
    let mut c = 1.0;
    for i in 1..=j {
        c *= (alpha + (i - 1) as f64) / i as f64;
    }
    c
}

/// Exact rational `c_alpha(j)` for rational `alpha`.
pub fn binom_coeff_exact(alpha: &BigRational, j: u32) -> BigRational {
    let mut c = BigRational::one();
    for i in 1..=j {
        let num = alpha + BigRational::from(BigInt::from(i - 1));
        c *= num / BigRational::from(BigInt::from(i));
    }
    c
}

/// Exact `c_k(j)` for integer `k >= 1` in 128-bit arithmetic.
///
/// Computed as the running binomial `binom(j + k - 1, k - 1)`; every prefix
/// is itself a binomial so the interleaved divisions stay exact.
pub fn binom_coeff_u128(k: u32, j: u64) -> u128 {
    assert!(k >= 1, "integer order must be positive");
    let mut c: u128 = 1;
    for i in 1..=(k - 1) as u128 {
        c = c * (j as u128 + i) / i;
    }
    c
}

/// `d_alpha(n)` as a product of `c_alpha` over the exponent sequence.
pub fn divisor_fn(alpha: f64, n: u64, tables: &ArithmeticTables) -> Result<f64> {
    tables.d_alpha(alpha, n)
}

/// `d_alpha` evaluated directly on an exponent sequence.
pub fn divisor_fn_from_index(alpha: f64, kappa: &MultiIndex) -> f64 {
    kappa
        .exponents()
        .iter()
        .map(|&e| binom_coeff(alpha, e))
        .product()
}

/// Exact rational `d_alpha(n)` for rational `alpha`.
pub fn divisor_fn_exact(
    alpha: &BigRational,
    n: u64,
    tables: &ArithmeticTables,
) -> Result<BigRational> {
    let pairs = tables.factor_pairs(n)?;
    let mut d = BigRational::one();
    for (_, e) in pairs {
        d *= binom_coeff_exact(alpha, e);
    }
    Ok(d)
}

/// Maximum relative convolution residuals over `l <= max_l`.
#[derive(Debug, Clone, Copy)]
pub struct ConvolutionResidual {
    /// max over `l` of the relative error in
    /// `sum_{j+k=l} c_a(j) c_b(k) = c_{a+b}(l)`.
    pub additive: f64,
    /// max over `l` of the relative error in
    /// `sum_{mn=l} d_a(m) d_b(n) = d_{a+b}(l)`.
    pub multiplicative: f64,
}

/// Floating-point residuals of the additive and multiplicative convolution
/// identities up to `max_l`.
pub fn convolution_residual(
    alpha: f64,
    beta: f64,
    max_l: u64,
    tables: &ArithmeticTables,
) -> Result<ConvolutionResidual> {
    let l_cap = max_l.min(tables.limit());
    // Additive side: dense coefficient vectors.
    let ca: Vec<f64> = (0..=l_cap as u32).map(|j| binom_coeff(alpha, j)).collect();
    let cb: Vec<f64> = (0..=l_cap as u32).map(|j| binom_coeff(beta, j)).collect();
    let cab: Vec<f64> = (0..=l_cap as u32)
        .map(|j| binom_coeff(alpha + beta, j))
        .collect();
    let mut additive: f64 = 0.0;
    for l in 0..=l_cap as usize {
        let s: f64 = (0..=l).map(|j| ca[j] * cb[l - j]).sum();
        additive = additive.max((s - cab[l]).abs() / cab[l]);
    }
    // Multiplicative side: divisor-pair sums.
    let da: Vec<f64> = std::iter::once(0.0)
        .chain((1..=l_cap).map(|n| tables.d_alpha(alpha, n).unwrap()))
        .collect();
    let db: Vec<f64> = std::iter::once(0.0)
        .chain((1..=l_cap).map(|n| tables.d_alpha(beta, n).unwrap()))
        .collect();
    let mut conv = vec![0.0f64; l_cap as usize + 1];
    for m in 1..=l_cap as usize {
        let mut l = m;
        let mut n = 1usize;
        while l <= l_cap as usize {
            conv[l] += da[m] * db[n];
            l += m;
            n += 1;
        }
    }
    let mut multiplicative: f64 = 0.0;
    for l in 1..=l_cap {
        let dab = tables.d_alpha(alpha + beta, l)?;
        multiplicative = multiplicative.max((conv[l as usize] - dab).abs() / dab);
    }
    Ok(ConvolutionResidual {
        additive,
        multiplicative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_bigint::BigInt;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn binom_coeff_small_values() {
        // c_{3/2}(2) = (3/2)(5/2)/2 = 15/8.
        assert_relative_eq!(binom_coeff(1.5, 2), 15.0 / 8.0, max_relative = 1e-15);
        assert_eq!(binom_coeff(1.0, 7), 1.0);
        // c_2(j) = j + 1.
        for j in 0..20 {
            assert_relative_eq!(binom_coeff(2.0, j), (j + 1) as f64, max_relative = 1e-14);
        }
        let exact = binom_coeff_exact(&ratio(3, 2), 2);
        assert_eq!(exact, ratio(15, 8));
    }

    #[test]
    fn integer_binom_is_exact() {
        // c_4(j) = (j+1)(j+2)(j+3)/6.
        for j in 0..50u64 {
            let expect = ((j + 1) * (j + 2) * (j + 3) / 6) as u128;
            assert_eq!(binom_coeff_u128(4, j), expect);
        }
        assert_eq!(binom_coeff_u128(1, 12345), 1);
        // Spot check against the multiplicative f64 path.
        for k in 1..=8u32 {
            for j in [0u64, 1, 5, 100, 10_000] {
                let f = binom_coeff(k as f64, j as u32);
                let e = binom_coeff_u128(k, j) as f64;
                assert_relative_eq!(f, e, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn divisor_fn_matches_divisor_count_at_two() {
        let t = ArithmeticTables::up_to(3000).unwrap();
        for n in 1..=3000u64 {
            let d = t.divisor_count(n).unwrap() as f64;
            assert_relative_eq!(divisor_fn(2.0, n, &t).unwrap(), d, max_relative = 1e-12);
        }
    }

    #[test]
    fn toy_convolution_value() {
        // sum_{mn=6} d_{3/2}(m) d_{5/2}(n) = d_4(6) = 16, exactly in rationals.
        let t = ArithmeticTables::up_to(100).unwrap();
        let a = ratio(3, 2);
        let b = ratio(5, 2);
        let mut s = BigRational::from(BigInt::from(0));
        for m in [1u64, 2, 3, 6] {
            s += divisor_fn_exact(&a, m, &t).unwrap() * divisor_fn_exact(&b, 6 / m, &t).unwrap();
        }
        assert_eq!(s, ratio(16, 1));
        assert_eq!(divisor_fn_exact(&ratio(4, 1), 6, &t).unwrap(), ratio(16, 1));
    }

    #[test]
    fn convolution_identity_exact_in_rationals() {
        // The exact-rational oracle: identity holds term-for-term over Q.
        let t = ArithmeticTables::up_to(200).unwrap();
        let a = ratio(3, 2);
        let b = ratio(5, 2);
        let ab = ratio(4, 1);
        for l in 1..=200u64 {
            let mut s = BigRational::from(BigInt::from(0));
            for m in 1..=l {
                if l % m == 0 {
                    s += divisor_fn_exact(&a, m, &t).unwrap()
                        * divisor_fn_exact(&b, l / m, &t).unwrap();
                }
            }
            assert_eq!(s, divisor_fn_exact(&ab, l, &t).unwrap(), "l={l}");
        }
    }

    #[test]
    fn float_residuals_are_tiny() {
        let t = ArithmeticTables::up_to(1000).unwrap();
        let r = convolution_residual(1.5, 2.5, 1000, &t).unwrap();
        assert!(r.additive <= 1e-9, "additive residual {}", r.additive);
        assert!(
            r.multiplicative <= 1e-9,
            "multiplicative residual {}",
            r.multiplicative
        );
    }
}
