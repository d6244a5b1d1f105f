//! Contractive inequalities for Dirichlet polynomials, checked through the
//! Bohr lift onto the polydisc.

use crate::disc::Gap;
use crate::kernel::{zeta_real, ArithmeticTables, PrimeTable};
use crate::{Error, Result};

use super::dirichlet::DirichletPolynomial;
use super::poly::bohr_lift;
use super::quad::polydisc_norm;

/// Translation length at which `T_eps : A^p -> A^q` switches from
/// non-contractive to contractive: `2^{-eps} = sqrt(p/q)`.
pub fn critical_translation(p: f64, q: f64) -> f64 {
    (q / p).ln() / (2.0 * std::f64::consts::LN_2)
}

/// `|| T_eps f ||_{A^q_alpha} - || f ||_{A^p_alpha}` where
/// `(T_eps f)(s) = f(s + eps)`.
///
/// On the polydisc the translation acts as the dilation `w_j -> p_j^{-eps} w_j`,
/// so contractivity is governed by the first prime: it holds exactly when
/// `eps >= critical_translation(p, q)`.
pub fn translation_gap(
    f: &DirichletPolynomial,
    p: f64,
    q: f64,
    eps: f64,
    alpha: f64,
    primes: &PrimeTable,
) -> Result<Gap> {
    if !(eps >= 0.0) {
        return Err(Error::Domain(format!(
            "translation length must be nonnegative, got {eps}"
        )));
    }
    let lifted = bohr_lift(f, primes)?;
    let r: Vec<f64> = (0..lifted.dimension())
        .map(|j| primes.get(j).map(|pj| (pj as f64).powf(-eps)))
        .collect::<Result<_>>()?;
    let left = polydisc_norm(&lifted.dilate(&r)?, q, alpha)?;
    let right = polydisc_norm(&lifted, p, alpha)?;
    Ok(Gap {
        left: left.value,
        right: right.value,
        gap: left.value - right.value,
        error: left.error + right.error,
    })
}

/// `(sum |a_n|^2 / d_4(n))^{1/2} - || f ||_{A^1}`: the Bergman analogue of
/// the classical coefficient bound, with the exact weighted-`l^2` left side.
pub fn helson_gap(
    f: &DirichletPolynomial,
    tables: &ArithmeticTables,
    primes: &PrimeTable,
) -> Result<Gap> {
    let left = f.norm_a2alpha(4.0, tables)?;
    let right = polydisc_norm(&bohr_lift(f, primes)?, 1.0, 2.0)?;
    Ok(Gap {
        left,
        right: right.value,
        gap: left - right.value,
        error: right.error + 1e-14 * left,
    })
}

/// Which certificate produces the coefficient weight in [`coefficient_bound_gap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightRoute {
    /// Tensorised sharp coefficient bound: `1 / d_{4/p}(n)`.
    Direct,
    /// Through the critical dilation into `A^2`: `(p/2)^{Omega(n)} / d(n)`.
    Dilation,
}

/// Coefficient weight of the chosen route; the two agree exactly on
/// squarefree `n`.
pub fn coefficient_weight(
    route: WeightRoute,
    p: f64,
    n: u64,
    tables: &ArithmeticTables,
) -> Result<f64> {
    match route {
        WeightRoute::Direct => Ok(1.0 / tables.d_alpha(4.0 / p, n)?),
        WeightRoute::Dilation => {
            let omega = tables.big_omega(n)?;
            let d = tables.divisor_count(n)? as f64;
            Ok((p / 2.0).powi(omega as i32) / d)
        }
    }
}

/// `(sum |a_n|^2 w_p(n))^{1/2} - || f ||_{A^p}` for `0 < p <= 2`, with the
/// weight from either certificate route. Both must come out nonpositive;
/// at `p = 2` both weights collapse to `1/d(n)` and the gap vanishes.
pub fn coefficient_bound_gap(
    f: &DirichletPolynomial,
    p: f64,
    route: WeightRoute,
    tables: &ArithmeticTables,
    primes: &PrimeTable,
) -> Result<Gap> {
    if !(0.0 < p && p <= 2.0) {
        return Err(Error::Domain(format!(
            "coefficient bound needs 0 < p <= 2, got {p}"
        )));
    }
    let mut acc = 0.0;
    for (n, c) in f.terms() {
        acc += c.norm_sqr() * coefficient_weight(route, p, n, tables)?;
    }
    let left = acc.sqrt();
    let right = polydisc_norm(&bohr_lift(f, primes)?, p, 2.0)?;
    Ok(Gap {
        left,
        right: right.value,
        gap: left - right.value,
        error: right.error + 1e-14 * left,
    })
}

/// `|f(sigma)| - zeta(2 sigma)^{2/p} || f ||_{A^p}` for real `sigma`.
///
/// The constant is the Euler product of the per-variable evaluation bounds
/// at `|w_j| = p_j^{-sigma}`; requires `sigma >= 0.51` so the product
/// converges comfortably.
pub fn pointwise_gap(
    f: &DirichletPolynomial,
    sigma: f64,
    p: f64,
    primes: &PrimeTable,
) -> Result<Gap> {
    if !(sigma >= 0.51) {
        return Err(Error::Domain(format!(
            "evaluation abscissa must be at least 0.51, got {sigma}"
        )));
    }
    let norm = polydisc_norm(&bohr_lift(f, primes)?, p, 2.0)?;
    let constant = zeta_real(2.0 * sigma)?.powf(2.0 / p);
    let left = f.eval_real(sigma).norm();
    let right = constant * norm.value;
    Ok(Gap {
        left,
        right,
        gap: left - right,
        error: constant * norm.error + 1e-14 * left,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn setup() -> (ArithmeticTables, PrimeTable) {
        (
            ArithmeticTables::up_to(1000).unwrap(),
            PrimeTable::first(20),
        )
    }

    #[test]
    fn critical_translation_closed_form() {
        assert_abs_diff_eq!(critical_translation(2.0, 4.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(
            critical_translation(1.0, 2.0),
            0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(critical_translation(2.0, 2.0), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn translation_contracts_at_and_above_critical_length() {
        let (_, primes) = setup();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, 0.7), (3, -0.4), (6, 0.2)])
            .unwrap();
        for &eps in &[0.5, 0.75] {
            let gap = translation_gap(&f, 2.0, 4.0, eps, 2.0, &primes).unwrap();
            assert!(
                gap.gap <= 10.0 * gap.error.max(1e-11),
                "eps={eps}: gap = {}",
                gap.gap
            );
        }
    }

    #[test]
    fn translation_fails_below_critical_length() {
        let (_, primes) = setup();
        // Near-constant family: measured gap tracks (q 4^{-eps} - p) delta^2 / (4 alpha).
        let delta = 0.1;
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, delta)]).unwrap();
        let eps = 0.4;
        let gap = translation_gap(&f, 2.0, 4.0, eps, 2.0, &primes).unwrap();
        let predicted = (4.0 * 4f64.powf(-eps) - 2.0) * delta * delta / 8.0;
        assert!(gap.gap > 0.0);
        assert_relative_eq!(gap.gap, predicted, max_relative = 0.05);
    }

    #[test]
    fn helson_left_side_golden_value() {
        let (tables, primes) = setup();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, 1.0)]).unwrap();
        let gap = helson_gap(&f, &tables, &primes).unwrap();
        assert_relative_eq!(gap.left, 1.25f64.sqrt(), max_relative = 1e-13);
        assert!(
            gap.gap <= 10.0 * gap.error.max(1e-10),
            "gap = {} err = {}",
            gap.gap,
            gap.error
        );
    }

    #[test]
    fn weight_routes_agree_exactly_on_squarefree_indices() {
        let (tables, _) = setup();
        for &p in &[0.5, 1.0, 4.0 / 3.0, 2.0] {
            for n in [1u64, 2, 3, 5, 6, 10, 15, 30, 210] {
                let a = coefficient_weight(WeightRoute::Direct, p, n, &tables).unwrap();
                let b = coefficient_weight(WeightRoute::Dilation, p, n, &tables).unwrap();
                assert_relative_eq!(a, b, max_relative = 1e-13);
            }
            // They split at prime squares unless p = 2.
            let a = coefficient_weight(WeightRoute::Direct, p, 4, &tables).unwrap();
            let b = coefficient_weight(WeightRoute::Dilation, p, 4, &tables).unwrap();
            if p == 2.0 {
                assert_relative_eq!(a, b, max_relative = 1e-13);
            } else {
                assert!((a - b).abs() > 1e-6, "p={p}: weights unexpectedly equal");
            }
        }
    }

    #[test]
    fn both_routes_bound_the_norm() {
        let (tables, primes) = setup();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, -0.5), (3, 0.25), (6, 0.4)])
            .unwrap();
        for route in [WeightRoute::Direct, WeightRoute::Dilation] {
            for &p in &[1.0, 4.0 / 3.0, 2.0] {
                let gap = coefficient_bound_gap(&f, p, route, &tables, &primes).unwrap();
                assert!(
                    gap.gap <= 10.0 * gap.error.max(1e-10),
                    "route={route:?} p={p}: gap = {}",
                    gap.gap
                );
            }
        }
    }

    #[test]
    fn routes_coincide_with_norm_at_p_two() {
        let (tables, primes) = setup();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 0.3), (2, 1.0), (4, -0.7), (9, 0.5)])
            .unwrap();
        for route in [WeightRoute::Direct, WeightRoute::Dilation] {
            let gap = coefficient_bound_gap(&f, 2.0, route, &tables, &primes).unwrap();
            assert_abs_diff_eq!(gap.gap, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pointwise_bound_holds_on_the_real_axis() {
        let (_, primes) = setup();
        let f = DirichletPolynomial::from_real_pairs(&[(1, 1.0), (2, 1.0), (3, 1.0)]).unwrap();
        let gap = pointwise_gap(&f, 1.0, 2.0, &primes).unwrap();
        assert_relative_eq!(gap.left, 11.0 / 6.0, max_relative = 1e-14);
        let expect_right = (std::f64::consts::PI.powi(2) / 6.0) * 2f64.sqrt();
        assert_relative_eq!(gap.right, expect_right, max_relative = 1e-10);
        assert!(gap.gap <= 0.0);
        assert!(pointwise_gap(&f, 0.3, 2.0, &primes).is_err());
    }
}
