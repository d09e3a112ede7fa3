//! The Grothendieck-ring side of the ledger: E-polynomial classes of
//! symmetric powers and configuration spaces via power-structure
//! exponentiation, and stratum classes recovered from exact point-count
//! interpolation. Everything here is a polynomial identity; the consistency
//! module is where these classes get confronted with Hodge tables.

use crate::arith::{self, series::Series, ArithError, Partition};
use crate::hodge::EPoly;
use num::ToPrimitive;

/// Motivic zeta series of a class with E-polynomial `e`:
/// the product over monomials u^p·v^q with coefficient a of
/// (1 - u^p·v^q·t)^{-a}, truncated at t^order. The t^n coefficient is the
/// class of the n-th symmetric power.
pub fn kapranov_zeta(e: &EPoly, order: usize) -> Series<EPoly> {
    let mut z = Series::<EPoly>::one(order);
    for (p, q, coeff) in e.terms() {
        assert!(
            p >= 0 && q >= 0,
            "zeta exponentiation needs nonnegative support, got u^{p}*v^{q}"
        );
        let x = EPoly::monomial(p, q, 1);
        for _ in 0..coeff.unsigned_abs() {
            if coeff > 0 {
                z.div_one_minus(&x, 1);
            } else {
                z.mul_one_minus(&x, 1);
            }
        }
    }
    z
}

/// Class of the n-th unordered configuration space of a class with
/// E-polynomial `e`: the t^n coefficient of Z(t)/Z(t²).
pub fn e_uconf(e: &EPoly, n: usize) -> EPoly {
    let z = kapranov_zeta(e, n);
    let z2 = z.substitute_t_power(2);
    z.div(&z2).coeff(n).clone()
}

/// Point-count class of a multiplicity stratum of the line: the interpolated
/// count polynomial with q read as uv. Always a polynomial in uv; the
/// assertion is a tripwire, not a reachable branch.
pub fn e_wlambda_p1(lambda: &Partition) -> Result<EPoly, ArithError> {
    let poly = arith::interpolate(lambda, &arith::default_primes(lambda))?;
    let mut e = EPoly::zero();
    for (power, coeff) in poly.terms() {
        assert!(power >= 0);
        let coeff = coeff.to_integer().to_i64().expect("small coefficients");
        e.add_term(power as i32, power as i32, coeff);
    }
    assert!(e.is_tate(), "interpolation produced a non-Tate class");
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{census, count_fast, uconf_count, DEFAULT_BUDGET};
    use crate::catalog::{hc_table, SpaceId};

    fn e_point() -> EPoly {
        EPoly::one()
    }

    fn e_p1() -> EPoly {
        let mut e = EPoly::one();
        e.add_term(1, 1, 1);
        e
    }

    fn e_gm() -> EPoly {
        let mut e = EPoly::monomial(1, 1, 1);
        e.add_term(0, 0, -1);
        e
    }

    fn uv_power(k: i32) -> EPoly {
        EPoly::monomial(k, k, 1)
    }

    #[test]
    fn zeta_of_a_point_is_geometric() {
        let z = kapranov_zeta(&e_point(), 5);
        for n in 0..=5 {
            assert_eq!(*z.coeff(n), EPoly::one(), "n = {n}");
        }
    }

    #[test]
    fn zeta_of_the_line_gives_projective_spaces() {
        let z = kapranov_zeta(&e_p1(), 6);
        for n in 0..=6usize {
            let mut expected = EPoly::zero();
            for i in 0..=n as i32 {
                expected.add_term(i, i, 1);
            }
            assert_eq!(*z.coeff(n), expected, "n = {n}");
            assert_eq!(
                *z.coeff(n),
                hc_table(SpaceId::SymP1(n as u32)).unwrap().epoly()
            );
        }
    }

    #[test]
    fn zeta_of_the_punctured_line_telescopes() {
        // (1 - t)/(1 - uv·t): coefficient n is (uv)^n - (uv)^{n-1}.
        let z = kapranov_zeta(&e_gm(), 5);
        assert_eq!(*z.coeff(0), EPoly::one());
        for n in 1..=5 {
            let expected = uv_power(n).sub(&uv_power(n - 1));
            assert_eq!(*z.coeff(n as usize), expected, "n = {n}");
        }
    }

    #[test]
    fn zeta_coefficients_count_divisors() {
        for q in [2u64, 3, 5] {
            let z = kapranov_zeta(&e_p1(), 4);
            for n in 1..=4usize {
                let total: u64 = census(n as u32, q, DEFAULT_BUDGET)
                    .unwrap()
                    .values()
                    .sum();
                assert_eq!(
                    z.coeff(n).eval_uv(q as i64),
                    Some(total as i64),
                    "n = {n}, q = {q}"
                );
            }
        }
    }

    #[test]
    fn zeta_is_multiplicative_on_disjoint_unions() {
        let pairs = [
            (e_p1(), e_gm()),
            (e_p1(), e_p1()),
            (e_gm(), EPoly::monomial(2, 1, 2)),
            (e_point(), EPoly::monomial(0, 1, -1)),
        ];
        for (a, b) in pairs {
            let order = 5;
            let sum_zeta = kapranov_zeta(&a.add(&b), order);
            let product = kapranov_zeta(&a, order).mul(&kapranov_zeta(&b, order));
            for n in 0..=order {
                assert_eq!(sum_zeta.coeff(n), product.coeff(n), "n = {n}");
            }
        }
    }

    #[test]
    fn configuration_classes() {
        assert_eq!(e_uconf(&e_gm(), 2), e_gm().mul(&e_gm()));
        assert_eq!(e_uconf(&e_p1(), 2), uv_power(2));
        assert_eq!(e_uconf(&e_p1(), 0), EPoly::one());
        assert_eq!(e_uconf(&e_gm(), 0), EPoly::one());
        assert_eq!(e_uconf(&e_gm(), 1), e_gm());
    }

    #[test]
    fn configuration_classes_match_stored_tables() {
        assert_eq!(
            e_uconf(&e_p1(), 2),
            hc_table(SpaceId::UConf2P1).unwrap().epoly()
        );
        for n in 1..=8u32 {
            assert_eq!(
                e_uconf(&e_gm(), n as usize),
                hc_table(SpaceId::UConfGm(n)).unwrap().epoly(),
                "n = {n}"
            );
        }
        assert_eq!(hc_table(SpaceId::P1).unwrap().epoly(), e_p1());
        assert_eq!(hc_table(SpaceId::Gm).unwrap().epoly(), e_gm());
        assert_eq!(
            hc_table(SpaceId::P2).unwrap().epoly(),
            kapranov_zeta(&e_p1(), 2).coeff(2).clone()
        );
    }

    #[test]
    fn configuration_classes_specialize_to_counts() {
        for q in [2u64, 3, 5] {
            for n in 0..=4usize {
                assert_eq!(
                    e_uconf(&e_gm(), n).eval_uv(q as i64).unwrap() as u64,
                    uconf_count(&[(1, 2)], n, q).unwrap(),
                    "punctured line, n = {n}, q = {q}"
                );
                assert_eq!(
                    e_uconf(&e_p1(), n).eval_uv(q as i64).unwrap() as u64,
                    uconf_count(&[], n, q).unwrap(),
                    "line, n = {n}, q = {q}"
                );
            }
        }
    }

    #[test]
    fn stratum_classes() {
        let lambda = |parts: &[u32]| Partition::new(parts.iter().copied()).unwrap();
        assert_eq!(e_wlambda_p1(&lambda(&[1])).unwrap(), e_p1());
        assert_eq!(e_wlambda_p1(&lambda(&[1, 1])).unwrap(), uv_power(2));
        let quartic = e_wlambda_p1(&lambda(&[2, 2, 1, 1])).unwrap();
        let mut expected = uv_power(4).sub(&uv_power(3)).sub(&uv_power(2));
        expected.add_term(1, 1, 1);
        assert_eq!(quartic, expected);
    }

    #[test]
    fn stratum_classes_round_trip_through_counts() {
        let strata: [&[u32]; 5] = [&[1], &[1, 1], &[2], &[1, 2], &[2, 2, 1, 1]];
        for parts in strata {
            let lambda = Partition::new(parts.iter().copied()).unwrap();
            let class = e_wlambda_p1(&lambda).unwrap();
            assert!(class.is_tate());
            for q in [2u64, 3, 5, 7] {
                assert_eq!(
                    class.eval_uv(q as i64).unwrap() as u64,
                    count_fast(&lambda, q).unwrap().count,
                    "λ = {lambda}, q = {q}"
                );
            }
        }
    }
}
