//! Bernoulli polynomials with a q parameter, plus the poly-Bernoulli family
//! they specialize.
//!
//! The canonical definition in this crate is the alternating W-sum
//!
//!   B_n^q(r) = sum_{k=0}^{n} (-1)^k k!/(k+1) W(n, k),
//!
//! which is total in q. Two independent routes verify it: coefficient
//! extraction from the closed-form generating function
//! q e^{rt}/(e^{qt}-1) * ln((q-1+e^{qt})/q), and the explicit double sum
//! (defined only for q != 0). The poly-Bernoulli family B_{n,q}^{(k)}(z)
//! follows the e^{-zt} convention of its generating function; the k = 1
//! member recovers B_n^q up to the sign bridge
//! B_n^q(r) = (-1)^n B_{n,q}^{(1)}(z) at z = r, which is kept explicit and
//! test-certified rather than silently normalized.

use crate::error::{Error, Result};
use crate::poly::{EvalPoint, MPoly, Monomial, Var};
use crate::rational::{binomial, factorial, Rational};
use crate::series::TruncSeries;
use crate::whitney::{WhitneyKind, WhitneyTriangle};

/// (-1)^k k!/(k+1), the weight of W(n, k) in the defining sum.
pub(crate) fn wsum_weight(k: usize) -> Rational {
    let magnitude = factorial(k) * Rational::new(1, k as i64 + 1);
    if k.is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    }
}

/// B_n^q(r) by the defining alternating W-sum.
pub fn bernoulli_q_wsum(n: usize) -> MPoly {
    bernoulli_q_wsum_list(n)
        .pop()
        .expect("list has n + 1 entries")
}

/// B_0^q(r) .. B_{n_max}^q(r), sharing one Whitney triangle.
pub fn bernoulli_q_wsum_list(n_max: usize) -> Vec<MPoly> {
    let mut triangle = WhitneyTriangle::new(WhitneyKind::Second);
    triangle.extend_to(n_max);
    (0..=n_max)
        .map(|n| {
            let mut acc = MPoly::zero();
            for k in 0..=n {
                let w = triangle.get(n, k).expect("row computed");
                acc = acc + w.scale(&wsum_weight(k));
            }
            acc
        })
        .collect()
}

/// B_n^q(r) evaluated from the explicit double sum
/// sum_{k} 1/(q^k (k+1)) sum_{j} (-1)^j C(k, j) (r + j q)^n,
/// which requires q != 0.
pub fn bernoulli_q_explicit(n: usize, q_val: &Rational, r_val: &Rational) -> Result<Rational> {
    if q_val.is_zero() {
        return Err(Error::ZeroQParameter);
    }
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = Rational::zero();
        for j in 0..=k {
            let base = r_val + &(q_val * &Rational::from_integer(j as i64));
            let term = binomial(k, j as i64) * base.pow(n as u32);
            inner = if j % 2 == 0 {
                inner + term
            } else {
                inner - term
            };
        }
        let scale = (q_val.pow(k as u32) * Rational::from_integer(k as i64 + 1))
            .recip()
            .expect("q != 0 and k + 1 > 0");
        total = total + inner * scale;
    }
    Ok(total)
}

/// The closed-form generating function q e^{rt}/(e^{qt}-1) * ln((q-1+e^{qt})/q)
/// truncated at `order`; its coefficient of t^n is B_n^q(r)/n!. The t-pole
/// of q/(e^{qt}-1) is handled by building u = (e^{qt}-1)/q as a polynomial
/// series in q, shifting both ln(1+u) and u down by one power of t, and
/// dividing; the series is built with one guard coefficient (order + 1
/// before the shift) so nothing is lost.
pub fn bernoulli_gf_series(order: usize) -> TruncSeries {
    let u = TruncSeries::exp_minus_one_over(&MPoly::var(Var::Q), order + 1);
    let log_part = u.log1p().expect("u has a zero constant term");
    let num = TruncSeries::exp_linear(&MPoly::var(Var::R), order)
        .mul(&log_part.shift_down(1).expect("ln(1+u) has valuation 1"));
    let den = u.shift_down(1).expect("u has valuation 1");
    num.div(&den).expect("shifted u has constant term 1")
}

/// B_0^q(r) .. B_{n_max}^q(r) extracted from the closed-form generating
/// function.
pub fn bernoulli_q_gf(n_max: usize) -> Vec<MPoly> {
    let series = bernoulli_gf_series(n_max);
    (0..=n_max)
        .map(|n| series.extract_egf_coefficient(n).expect("n <= order"))
        .collect()
}

/// Bernoulli numbers with a q parameter, B_n^q = B_n^q(0), as polynomials
/// in q.
pub fn bernoulli_q_numbers(n_max: usize) -> Vec<MPoly> {
    let at_zero = EvalPoint::new().set(Var::R, Rational::zero());
    bernoulli_q_wsum_list(n_max)
        .into_iter()
        .map(|p| p.eval(&at_zero))
        .collect()
}

/// The poly-Bernoulli generating function
/// q e^{-zt}/(1-e^{-qt}) * Li_k((1-e^{-qt})/q) truncated at `order`; its
/// coefficient of t^n is B_{n,q}^{(k)}(z)/n!. Any integer k is allowed.
/// The t-pole is handled exactly as in [`bernoulli_gf_series`], with
/// v = (1-e^{-qt})/q built term-wise.
pub fn poly_bernoulli_series(order: usize, k: i64) -> TruncSeries {
    let v = TruncSeries::exp_minus_one_over(&(-&MPoly::var(Var::Q)), order + 1);
    let li = v.polylog(k).expect("v has a zero constant term");
    let num = li.shift_down(1).expect("Li_k(v) has valuation 1");
    let den = v.shift_down(1).expect("v has valuation 1");
    let core = num.div(&den).expect("shifted v has constant term 1");
    TruncSeries::exp_linear(&(-&MPoly::var(Var::Z)), order).mul(&core)
}

/// Poly-Bernoulli polynomials with a q parameter,
/// B_{0,q}^{(k)}(z) .. B_{n_max,q}^{(k)}(z), as polynomials in q and z.
pub fn poly_bernoulli_q(n_max: usize, k: i64) -> Vec<MPoly> {
    let gf = poly_bernoulli_series(n_max, k);
    (0..=n_max)
        .map(|n| gf.extract_egf_coefficient(n).expect("n <= order"))
        .collect()
}

/// Verify both translation identities for index n, symbolically in q, r, s:
/// B_n^q(r+s) = sum_j C(n, j) r^{n-j} B_j^q(s) and
/// B_n^q(r)   = sum_j C(n, j) r^{n-j} B_j^q.
pub fn translation_check(n: usize) -> bool {
    let values = bernoulli_q_wsum_list(n);
    let r_plus_s = &MPoly::var(Var::R) + &MPoly::var(Var::S);
    let s = MPoly::var(Var::S);
    let at_zero = EvalPoint::new().set(Var::R, Rational::zero());

    let lhs_shifted = values[n].subst(Var::R, &r_plus_s);
    let mut rhs_shifted = MPoly::zero();
    let mut rhs_numbers = MPoly::zero();
    for (j, b) in values.iter().enumerate() {
        let r_power = MPoly::term(
            Monomial::var_pow(Var::R, (n - j) as u32),
            binomial(n, j as i64),
        );
        rhs_shifted = rhs_shifted + &r_power * &b.subst(Var::R, &s);
        rhs_numbers = rhs_numbers + &r_power * &b.eval(&at_zero);
    }
    lhs_shifted == rhs_shifted && values[n] == rhs_numbers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::stirling2;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Build a polynomial in q and r from (num, den, e_q, e_r) terms.
    fn qr_poly(terms: &[(i64, i64, u32, u32)]) -> MPoly {
        let mut p = MPoly::zero();
        for &(num, den, eq, er) in terms {
            p = p + MPoly::term(Monomial([eq, er, 0, 0, 0]), Rational::new(num, den));
        }
        p
    }

    /// The five displayed low-degree polynomials, transcribed term by term.
    pub(crate) fn golden_polynomials() -> Vec<MPoly> {
        vec![
            qr_poly(&[(1, 1, 0, 0)]),
            qr_poly(&[(1, 1, 0, 1), (-1, 2, 0, 0)]),
            qr_poly(&[(1, 1, 0, 2), (-1, 1, 0, 1), (-1, 2, 1, 0), (2, 3, 0, 0)]),
            qr_poly(&[
                (1, 1, 0, 3),
                (-3, 2, 0, 2),
                (2, 1, 0, 1),
                (-3, 2, 1, 1),
                (-1, 2, 2, 0),
                (2, 1, 1, 0),
                (-3, 2, 0, 0),
            ]),
            qr_poly(&[
                (1, 1, 0, 4),
                (-2, 1, 0, 3),
                (4, 1, 0, 2),
                (-3, 1, 1, 2),
                (-2, 1, 2, 1),
                (8, 1, 1, 1),
                (-6, 1, 0, 1),
                (-1, 2, 3, 0),
                (14, 3, 2, 0),
                (-9, 1, 1, 0),
                (24, 5, 0, 0),
            ]),
        ]
    }

    #[test]
    fn wsum_reproduces_golden_polynomials() {
        assert_eq!(bernoulli_q_wsum_list(4), golden_polynomials());
    }

    #[test]
    fn golden_canonical_strings() {
        let strings: Vec<String> = bernoulli_q_wsum_list(2)
            .iter()
            .map(MPoly::to_string)
            .collect();
        assert_eq!(strings, ["1", "r - 1/2", "r^2 - r - 1/2*q + 2/3"]);
    }

    #[test]
    fn gf_route_agrees_with_wsum() {
        assert_eq!(bernoulli_q_gf(10), bernoulli_q_wsum_list(10));
    }

    #[test]
    fn gf_examples() {
        let rows = bernoulli_q_gf(3);
        assert_eq!(rows[0], MPoly::one());
        assert_eq!(rows[1], qr_poly(&[(1, 1, 0, 1), (-1, 2, 0, 0)]));
        assert_eq!(rows[3], golden_polynomials()[3]);
    }

    #[test]
    fn explicit_route_examples() {
        // B_1 = r - 1/2 at r = 2
        assert_eq!(
            bernoulli_q_explicit(1, &rat(3, 1), &rat(2, 1)).unwrap(),
            rat(3, 2)
        );
        assert_eq!(
            bernoulli_q_explicit(0, &rat(5, 7), &rat(-4, 3)).unwrap(),
            Rational::one()
        );
        // classical B_2
        assert_eq!(
            bernoulli_q_explicit(2, &rat(1, 1), &rat(0, 1)).unwrap(),
            rat(1, 6)
        );
        assert_eq!(
            bernoulli_q_explicit(2, &Rational::zero(), &rat(1, 1)),
            Err(Error::ZeroQParameter)
        );
    }

    #[test]
    fn explicit_route_agrees_with_wsum() {
        let points = [
            (rat(1, 1), rat(0, 1)),
            (rat(-2, 3), rat(1, 2)),
            (rat(5, 1), rat(-7, 4)),
        ];
        for n in 0..=8 {
            let symbolic = bernoulli_q_wsum(n);
            for (qv, rv) in &points {
                let expected = symbolic
                    .eval(
                        &EvalPoint::new()
                            .set(Var::Q, qv.clone())
                            .set(Var::R, rv.clone()),
                    )
                    .constant_value()
                    .unwrap();
                assert_eq!(bernoulli_q_explicit(n, qv, rv).unwrap(), expected);
            }
        }
    }

    #[test]
    fn numbers_examples() {
        let numbers = bernoulli_q_numbers(2);
        assert_eq!(numbers[0], MPoly::one());
        assert_eq!(numbers[1], MPoly::constant(rat(-1, 2)));
        assert_eq!(numbers[2], qr_poly(&[(-1, 2, 1, 0), (2, 3, 0, 0)]));
    }

    #[test]
    fn numbers_match_weighted_stirling_sum() {
        // B_n^q = sum_k (-1)^k k!/(k+1) q^{n-k} S(n, k)
        for (n, value) in bernoulli_q_numbers(8).iter().enumerate() {
            let mut expected = MPoly::zero();
            for k in 0..=n {
                let coeff = wsum_weight(k) * Rational::from_bigint(stirling2(n, k));
                expected = expected + MPoly::term(Monomial::var_pow(Var::Q, (n - k) as u32), coeff);
            }
            assert_eq!(value, &expected, "n = {n}");
        }
    }

    #[test]
    fn poly_bernoulli_first_order_example() {
        let rows = poly_bernoulli_q(1, 1);
        assert_eq!(rows[0], MPoly::one());
        assert_eq!(rows[1], MPoly::constant(rat(1, 2)) - MPoly::var(Var::Z));
    }

    #[test]
    fn poly_bernoulli_constant_term_is_one_for_any_order() {
        for k in [-3, -1, 0, 1, 2, 5] {
            assert_eq!(poly_bernoulli_q(0, k)[0], MPoly::one(), "k = {k}");
        }
    }

    #[test]
    fn poly_bernoulli_classical_value() {
        // k=1, q=1, z=0, n=2: the classical value 1/6 via the sign bridge
        let rows = poly_bernoulli_q(2, 1);
        let specialized = rows[2].eval(
            &EvalPoint::new()
                .set(Var::Q, Rational::one())
                .set(Var::Z, Rational::zero()),
        );
        assert_eq!(specialized, MPoly::constant(rat(1, 6)));
    }

    #[test]
    fn sign_bridge_to_wsum() {
        let pb = poly_bernoulli_q(8, 1);
        for (n, b) in bernoulli_q_wsum_list(8).iter().enumerate() {
            let renamed = b.subst(Var::R, &MPoly::var(Var::Z));
            let signed = if n % 2 == 0 { pb[n].clone() } else { -&pb[n] };
            assert_eq!(renamed, signed, "n = {n}");
        }
    }

    #[test]
    fn translation_examples() {
        assert!(translation_check(0));
        assert!(translation_check(1));
        assert!(translation_check(5));
    }

    #[test]
    fn degree_and_leading_structure() {
        for (n, b) in bernoulli_q_wsum_list(10).iter().enumerate() {
            assert_eq!(b.degree_in(Var::R) as usize, n);
            assert_eq!(
                b.coeff(&Monomial::var_pow(Var::R, n as u32)),
                Rational::one()
            );
            if n >= 1 {
                assert_eq!(
                    b.coeff_of_power(Var::R, n as u32 - 1),
                    MPoly::constant(Rational::new(-(n as i64), 2))
                );
            }
        }
    }
}
