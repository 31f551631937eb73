//! Truncated formal power series in t with [`MPoly`] coefficients.
//!
//! This is the generating-function engine: exponentials of linear forms,
//! truncated ring arithmetic, division by units, logarithms and
//! polylogarithms of zero-constant-term series, and n!-scaled coefficient
//! extraction. Truncation order is explicit and caller-chosen; binary
//! operations truncate to the smaller operand order and never extend
//! precision.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::rational::{factorial, Rational};

/// Power series truncated at an explicit order N: coefficients of
/// t^0 .. t^N, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    /// Series from explicit coefficients (position i holds the coefficient
    /// of t^i); the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<MPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the t^0 coefficient"
        );
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MPoly::one(), order)
    }

    pub fn constant(c: MPoly, order: usize) -> Self {
        let mut coeffs = vec![MPoly::zero(); order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &MPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MPoly::is_zero)
    }

    /// e^{ct} truncated at `order`: coefficient of t^i is c^i / i!.
    pub fn exp_linear(c: &MPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(MPoly::one());
        let mut term = MPoly::one();
        for i in 1..=order {
            term = (&term * c).scale(&Rational::new(1, i as i64));
            coeffs.push(term.clone());
        }
        TruncSeries { coeffs }
    }

    /// (e^{ct} - 1) / c truncated at `order`: coefficient of t^i is
    /// c^{i-1} / i! for i >= 1 and 0 at i = 0. Constructed term-wise, so it
    /// is defined for any polynomial c, including a bare indeterminate.
    pub fn exp_minus_one_over(c: &MPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(MPoly::zero());
        let mut term = MPoly::one();
        for i in 1..=order {
            if i > 1 {
                term = (&term * c).scale(&Rational::new(1, i as i64));
            }
            coeffs.push(term.clone());
        }
        TruncSeries { coeffs }
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        TruncSeries { coeffs }
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![MPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TruncSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }

    /// Exact truncated quotient. The divisor's constant term must be a
    /// nonzero rational constant; series with a t-pole structure are handled
    /// by first applying [`TruncSeries::shift_down`] to both operands.
    pub fn div(&self, other: &TruncSeries) -> Result<TruncSeries> {
        let unit = other.coeffs[0]
            .constant_value()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NonUnitConstantTerm)?;
        let inv = unit.recip().expect("nonzero by the filter above");
        let order = self.order().min(other.order());
        let mut out: Vec<MPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (i, done) in out.iter().enumerate() {
                if done.is_zero() || other.coeffs[n - i].is_zero() {
                    continue;
                }
                acc = &acc - &(done * &other.coeffs[n - i]);
            }
            out.push(acc.scale(&inv));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Divide by t^m, reducing the order by m. Errors unless the
    /// coefficients of t^0 .. t^{m-1} are all zero.
    pub fn shift_down(&self, m: usize) -> Result<TruncSeries> {
        if m > self.order() {
            return Err(Error::CoefficientBeyondOrder {
                n: m,
                order: self.order(),
            });
        }
        for (index, c) in self.coeffs.iter().enumerate().take(m) {
            if !c.is_zero() {
                return Err(Error::NonzeroLowOrderCoefficient { index });
            }
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// ln(1 + u) = sum_{m>=1} (-1)^{m+1} u^m / m, truncated. The argument
    /// must have a zero constant term.
    pub fn log1p(&self) -> Result<TruncSeries> {
        self.compose_power_sum(|m| {
            let sign = if m % 2 == 0 { -1 } else { 1 };
            Rational::new(sign, m as i64)
        })
    }

    /// Polylogarithm composed with this series:
    /// Li_k(u) = sum_{m>=1} u^m / m^k, truncated. Any integer k is allowed
    /// (negative k multiplies by m^{-k}); the argument must have a zero
    /// constant term.
    pub fn polylog(&self, k: i64) -> Result<TruncSeries> {
        self.compose_power_sum(|m| {
            let m_rat = Rational::from_integer(m as i64);
            if k >= 0 {
                m_rat
                    .pow(u32::try_from(k).expect("non-negative"))
                    .recip()
                    .expect("m >= 1")
            } else {
                m_rat.pow(u32::try_from(-k).expect("positive"))
            }
        })
    }

    /// sum_{m=1}^{N} weight(m) * u^m for a zero-constant-term u.
    fn compose_power_sum(&self, weight: impl Fn(usize) -> Rational) -> Result<TruncSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut acc = TruncSeries::zero(order);
        let mut power = TruncSeries::one(order);
        for m in 1..=order {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power.scale(&weight(m)));
        }
        Ok(acc)
    }

    /// n! times the coefficient of t^n; errors beyond the truncation order.
    pub fn extract_egf_coefficient(&self, n: usize) -> Result<MPoly> {
        if n > self.order() {
            return Err(Error::CoefficientBeyondOrder {
                n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].scale(&factorial(n)))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
