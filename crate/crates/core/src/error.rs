//! Error type shared across the crate.

use std::fmt;

/// Errors raised by exact-arithmetic operations.
///
/// Every operation in this crate is total on its documented domain; an
/// `Error` marks a call outside that domain, never a numerical problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division of rationals by zero.
    DivisionByZero,
    /// A string did not parse as a rational in `p/q` form.
    Parse(String),
    /// Series division requires the divisor's constant term to be a nonzero
    /// rational constant.
    NonUnitConstantTerm,
    /// `shift_down` found a nonzero coefficient below the requested valuation.
    NonzeroLowOrderCoefficient { index: usize },
    /// The argument of a series logarithm or polylogarithm must have a zero
    /// constant term.
    NonzeroConstantTerm,
    /// A coefficient beyond the truncation order was requested.
    CoefficientBeyondOrder { n: usize, order: usize },
    /// Triangle indices must satisfy `k <= n` (and `n >= shift` where one
    /// applies).
    IndexOutOfRange { n: usize, k: usize },
    /// The explicit summation formulas divide by powers of q and are only
    /// defined for q != 0.
    ZeroQParameter,
    /// Exact monomial division failed: some term lacks the required power of
    /// the divisor variable.
    NotDivisible { var: char, power: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Parse(s) => write!(f, "cannot parse {s:?} as a rational"),
            Error::NonUnitConstantTerm => {
                write!(
                    f,
                    "series divisor must have a nonzero rational constant term"
                )
            }
            Error::NonzeroLowOrderCoefficient { index } => {
                write!(f, "cannot shift down: coefficient of t^{index} is nonzero")
            }
            Error::NonzeroConstantTerm => {
                write!(f, "series argument must have a zero constant term")
            }
            Error::CoefficientBeyondOrder { n, order } => {
                write!(
                    f,
                    "coefficient of t^{n} requested from a series of order {order}"
                )
            }
            Error::IndexOutOfRange { n, k } => {
                write!(f, "triangle index (n={n}, k={k}) out of range")
            }
            Error::ZeroQParameter => {
                write!(
                    f,
                    "q must be nonzero: the explicit formula divides by powers of q"
                )
            }
            Error::NotDivisible { var, power } => {
                write!(f, "polynomial is not divisible by {var}^{power}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
