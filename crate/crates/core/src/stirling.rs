//! Stirling numbers of the second kind, their r-shifted variant, and the
//! classical Bernoulli values built from them.
//!
//! These triangles are the independent classical oracles used to
//! cross-check the Whitney-based computations; nothing here touches the
//! [`crate::whitney`] module.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// Memoized triangle of (r-shifted) Stirling numbers of the second kind.
///
/// With `shift` = 0 this is the plain triangle S(n, k) with
/// S(n, k) = S(n-1, k-1) + k * S(n-1, k) and S(0, 0) = 1. With
/// `shift` = rho it holds the r-Stirling numbers S_rho(n, k), which count
/// partitions of {1..n} into k blocks with 1..rho in distinct blocks:
/// boundary S_rho(rho, rho) = 1 and the same recurrence for n > rho.
#[derive(Clone, Debug)]
pub struct StirlingTriangle {
    shift: usize,
    // rows[m][j] = S_shift(shift + m, shift + j)
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn plain() -> Self {
        Self::r_shifted(0)
    }

    pub fn r_shifted(rho: usize) -> Self {
        StirlingTriangle {
            shift: rho,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    fn extend_to(&mut self, m: usize) {
        while self.rows.len() <= m {
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            for j in 0..=n {
                let from_same = if j < n {
                    &prev[j] * BigInt::from(self.shift + j)
                } else {
                    BigInt::zero()
                };
                let from_prev = if j > 0 {
                    prev[j - 1].clone()
                } else {
                    BigInt::zero()
                };
                row.push(from_same + from_prev);
            }
            self.rows.push(row);
        }
    }

    /// S_shift(n, k) with absolute indices. Errors when n < shift; indices
    /// outside the triangle (k < shift or k > n) yield zero.
    pub fn value(&mut self, n: usize, k: usize) -> Result<BigInt> {
        if n < self.shift {
            return Err(Error::IndexOutOfRange { n, k });
        }
        if k < self.shift || k > n {
            return Ok(BigInt::zero());
        }
        let (m, j) = (n - self.shift, k - self.shift);
        self.extend_to(m);
        Ok(self.rows[m][j].clone())
    }
}

/// Stirling number of the second kind S(n, k); zero outside 0 <= k <= n.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    StirlingTriangle::plain()
        .value(n, k)
        .expect("plain triangle is total")
}

/// r-Stirling number of the second kind S_rho(n, k). Errors when n < rho.
pub fn r_stirling2(rho: usize, n: usize, k: usize) -> Result<BigInt> {
    StirlingTriangle::r_shifted(rho).value(n, k)
}

/// First classical Bernoulli numbers via the alternating Stirling sum
/// B_n = sum_k (-1)^k k!/(k+1) S(n, k).
pub fn bernoulli_numbers_stirling(n_max: usize) -> Vec<Rational> {
    let mut triangle = StirlingTriangle::plain();
    (0..=n_max)
        .map(|n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                let s = Rational::from_bigint(triangle.value(n, k).expect("total"));
                let weight = factorial(k) * Rational::new(1, k as i64 + 1);
                let term = weight * s;
                acc = if k % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        })
        .collect()
}

/// Classical Bernoulli polynomial value B_n(rho) at a non-negative integer
/// argument, via the r-Stirling form
/// B_n(rho) = sum_k (-1)^k k!/(k+1) S_rho(n+rho, k+rho).
pub fn bernoulli_poly_r_stirling(rho: usize, n: usize) -> Rational {
    let mut triangle = StirlingTriangle::r_shifted(rho);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let s = Rational::from_bigint(triangle.value(n + rho, k + rho).expect("n + rho >= rho"));
        let weight = factorial(k) * Rational::new(1, k as i64 + 1);
        let term = weight * s;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}
