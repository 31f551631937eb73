//! Exact rational scalars in canonical reduced form.
//!
//! [`Rational`] is the scalar type of the whole crate: every triangle entry,
//! polynomial coefficient and series coefficient is built from it. There is
//! no floating point anywhere in a computation path; equality of values is
//! structural equality of canonical forms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
///
/// Canonical form invariants: denominator > 0, gcd(|numerator|, denominator)
/// = 1, and zero is stored as 0/1. All constructors and operations preserve
/// them, so `==` coincides with mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `num/den` reduced to canonical form. Panics if `den == 0`; use
    /// [`Rational::checked_div`] for fallible division.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den` for big integers, reduced. Errors on a zero denominator.
    pub fn ratio(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        Rational(BigRational::new_raw(
            Pow::pow(self.0.numer(), exp),
            Pow::pow(self.0.denom(), exp),
        ))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact quotient; errors instead of panicking when `other` is zero.
    pub fn checked_div(&self, other: &Rational) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }
}

macro_rules! forward_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($Op::$method(self.0, rhs.0))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($Op::$method(self.0, &rhs.0))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($Op::$method(&self.0, rhs.0))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($Op::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Div panics on a zero divisor, like primitive integer division.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    /// Canonical text form: `p/q` with q > 0, or just `p` when q = 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>().map_err(|_| Error::Parse(s.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((num, den)) => {
                let num = parse_int(num)?;
                let den = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// n! as an exact rational (integer-valued).
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_bigint(acc)
}

/// Binomial coefficient C(n, k), zero when k < 0 or k > n.
pub fn binomial(n: usize, k: i64) -> Rational {
    if k < 0 || k as usize > n {
        return Rational::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_bigint(acc)
}
