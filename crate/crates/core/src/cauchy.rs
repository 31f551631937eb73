//! Cauchy polynomials with a q parameter at the arguments r and -r, as
//! exact polynomials in q and r.
//!
//! The first kind c_n^q(r) and the second kind at the negated argument
//! (written c-hat_n^q(-r)) are unit-interval integrals of q-spaced factorial
//! products:
//!
//!   c_n^q(r)      = integral_0^1 (x - r)(x - r - q) ... (x - r - (n-1)q) dx
//!   c-hat_n^q(-r) = integral_0^1 (-x - r)(-x - r - q) ... dx
//!
//! Both admit w-weighted closed forms, c_n^q(r) = sum_k w(n, k)/(k+1) and
//! c-hat_n^q(-r) = sum_k (-1)^k w(n, k)/(k+1), which this module computes
//! and certifies against the direct integration oracle. Only the arguments
//! r and -r are exposed; that is exactly where the w-sum and convolution
//! identities live.

use crate::poly::{MPoly, Var};
use crate::rational::Rational;
use crate::whitney::{WhitneyKind, WhitneyTriangle};

/// Which integrand family a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CauchyKind {
    /// c_n^q evaluated at r.
    First,
    /// c-hat_n^q evaluated at -r.
    Second,
}

/// c_n^q(r) by the w-weighted sum.
pub fn cauchy_first(n: usize) -> MPoly {
    cauchy_first_list(n).pop().expect("list has n + 1 entries")
}

/// c_0^q(r) .. c_{n_max}^q(r), sharing one Whitney triangle.
pub fn cauchy_first_list(n_max: usize) -> Vec<MPoly> {
    w_weighted_list(n_max, false)
}

/// c-hat_n^q(-r) by the alternating w-weighted sum.
pub fn cauchy_second_neg(n: usize) -> MPoly {
    cauchy_second_neg_list(n)
        .pop()
        .expect("list has n + 1 entries")
}

/// c-hat_0^q(-r) .. c-hat_{n_max}^q(-r), sharing one Whitney triangle.
pub fn cauchy_second_neg_list(n_max: usize) -> Vec<MPoly> {
    w_weighted_list(n_max, true)
}

fn w_weighted_list(n_max: usize, alternating: bool) -> Vec<MPoly> {
    let mut triangle = WhitneyTriangle::new(WhitneyKind::First);
    triangle.extend_to(n_max);
    (0..=n_max)
        .map(|n| {
            let mut acc = MPoly::zero();
            for k in 0..=n {
                let mut weight = Rational::new(1, k as i64 + 1);
                if alternating && k % 2 == 1 {
                    weight = -weight;
                }
                acc = acc + triangle.get(n, k).expect("row computed").scale(&weight);
            }
            acc
        })
        .collect()
}

/// The defining integral, computed exactly: expand the factorial product as
/// a polynomial in x and integrate term-wise over [0, 1]. Independent of
/// the w triangle; used to certify the w-sums.
pub fn integral_oracle(kind: CauchyKind, n: usize) -> MPoly {
    let x = MPoly::var(Var::X);
    let q = MPoly::var(Var::Q);
    let r = MPoly::var(Var::R);
    let signed_x = match kind {
        CauchyKind::First => x,
        CauchyKind::Second => -&x,
    };
    let mut product = MPoly::one();
    for i in 0..n {
        let factor = &signed_x - &r - q.scale(&Rational::from_integer(i as i64));
        product = &product * &factor;
    }
    product.integrate_x_unit()
}

/// Verify the W-convolution identities for index n:
/// sum_k W(n, k) c_k^q(r) = 1/(n+1) and
/// sum_k W(n, k) c-hat_k^q(-r) = (-1)^n/(n+1),
/// as exact constants (every q and r term must cancel).
pub fn w_convolution_check(n: usize) -> bool {
    let mut second = WhitneyTriangle::new(WhitneyKind::Second);
    second.extend_to(n);
    let c = cauchy_first_list(n);
    let c_hat = cauchy_second_neg_list(n);
    let mut conv_first = MPoly::zero();
    let mut conv_second = MPoly::zero();
    for k in 0..=n {
        let w = second.get(n, k).expect("row computed");
        conv_first = conv_first + w * &c[k];
        conv_second = conv_second + w * &c_hat[k];
    }
    let reciprocal = Rational::new(1, n as i64 + 1);
    let signed = if n.is_multiple_of(2) {
        reciprocal.clone()
    } else {
        -&reciprocal
    };
    conv_first == MPoly::constant(reciprocal) && conv_second == MPoly::constant(signed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn r() -> MPoly {
        MPoly::var(Var::R)
    }
    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn w_sums_match_integration_oracle() {
        let c = cauchy_first_list(8);
        let c_hat = cauchy_second_neg_list(8);
        for n in 0..=8 {
            assert_eq!(
                c[n],
                integral_oracle(CauchyKind::First, n),
                "first, n = {n}"
            );
            assert_eq!(
                c_hat[n],
                integral_oracle(CauchyKind::Second, n),
                "second, n = {n}"
            );
        }
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(cauchy_first(0), MPoly::one());
        assert_eq!(cauchy_first(1), MPoly::constant(rat(1, 2)) - r());
        assert_eq!(cauchy_first(2), integral_oracle(CauchyKind::First, 2));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(cauchy_second_neg(0), MPoly::one());
        assert_eq!(cauchy_second_neg(1), -&r() - MPoly::constant(rat(1, 2)));
        assert_eq!(cauchy_second_neg(3), integral_oracle(CauchyKind::Second, 3));
    }

    #[test]
    fn integral_oracle_examples() {
        assert_eq!(integral_oracle(CauchyKind::First, 0), MPoly::one());
        assert_eq!(
            integral_oracle(CauchyKind::First, 1),
            MPoly::constant(rat(1, 2)) - r()
        );
        // integral of (-x-r)(-x-r-q) over [0,1], expanded by hand:
        // r^2 + qr + r + q/2 + 1/3
        let by_hand = MPoly::term(Monomial([0, 2, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([1, 1, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([0, 1, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([1, 0, 0, 0, 0]), rat(1, 2))
            + MPoly::term(Monomial([0, 0, 0, 0, 0]), rat(1, 3));
        assert_eq!(integral_oracle(CauchyKind::Second, 2), by_hand);
    }

    #[test]
    fn convolution_examples() {
        assert!(w_convolution_check(0));
        assert!(w_convolution_check(1));
        assert!(w_convolution_check(6));
        for n in 0..=10 {
            assert!(w_convolution_check(n), "n = {n}");
        }
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for (n, c) in cauchy_first_list(9).iter().enumerate() {
            assert_eq!(c.degree_in(Var::R) as usize, n);
            let lead = c.coeff(&Monomial::var_pow(Var::R, n as u32));
            let expected = if n % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            assert_eq!(lead, expected, "n = {n}");
        }
    }
}
