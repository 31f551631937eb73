//! r-Whitney numbers of the first and second kind as exact polynomials in
//! q and r.
//!
//! The second kind W(n, k) changes basis from powers of (qx + r) to falling
//! factorials, the first kind w(n, k) the other way around. Triangles are
//! computed symbolically in Q[q, r] by the recurrences
//!
//!   W(n, k) = W(n-1, k-1) + (q k + r) W(n-1, k)
//!   w(n, k) = w(n-1, k-1) - (r + q (n-1)) w(n-1, k)
//!
//! with seeds W(0, 0) = w(0, 0) = 1. The recurrences are certified against
//! [`definitional_row`], which performs the defining change of basis in the
//! polynomial ring without any recurrence; numeric evaluation is always a
//! specialization of the symbolic triangle, never a separate code path.

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial, Var};
use crate::rational::{binomial, factorial, Rational};
use crate::series::TruncSeries;

/// Which change of basis a triangle holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhitneyKind {
    First,
    Second,
}

/// Memoized triangle of r-Whitney numbers, rows grown on demand.
///
/// A completed triangle is immutable through [`WhitneyTriangle::get`] and
/// safe to share; growth via the `&mut` methods is single-writer.
#[derive(Clone, Debug)]
pub struct WhitneyTriangle {
    kind: WhitneyKind,
    rows: Vec<Vec<MPoly>>,
}

impl WhitneyTriangle {
    pub fn new(kind: WhitneyKind) -> Self {
        WhitneyTriangle {
            kind,
            rows: vec![vec![MPoly::one()]],
        }
    }

    pub fn kind(&self) -> WhitneyKind {
        self.kind
    }

    /// Largest row index computed so far.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, n: usize) {
        let q = MPoly::var(Var::Q);
        let r = MPoly::var(Var::R);
        while self.rows.len() <= n {
            let m = self.rows.len(); // row being built
            let prev = &self.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let carried = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    MPoly::zero()
                };
                let weighted = if k < m {
                    let weight = match self.kind {
                        WhitneyKind::Second => q.scale(&Rational::from_integer(k as i64)) + &r,
                        WhitneyKind::First => {
                            -(q.scale(&Rational::from_integer(m as i64 - 1)) + &r)
                        }
                    };
                    &weight * &prev[k]
                } else {
                    MPoly::zero()
                };
                row.push(carried + weighted);
            }
            self.rows.push(row);
        }
    }

    /// Row n, computing it first if needed.
    pub fn row(&mut self, n: usize) -> &[MPoly] {
        self.extend_to(n);
        &self.rows[n]
    }

    /// Entry (n, k), computing the row if needed. Errors when k > n.
    pub fn value(&mut self, n: usize, k: usize) -> Result<MPoly> {
        if k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        self.extend_to(n);
        Ok(self.rows[n][k].clone())
    }

    /// Entry (n, k) of an already-computed row.
    pub fn get(&self, n: usize, k: usize) -> Option<&MPoly> {
        self.rows.get(n).and_then(|row| row.get(k))
    }
}

/// W(n, k) as a polynomial in q and r. Errors when k > n.
pub fn whitney_second(n: usize, k: usize) -> Result<MPoly> {
    WhitneyTriangle::new(WhitneyKind::Second).value(n, k)
}

/// w(n, k) as a polynomial in q and r. Errors when k > n.
pub fn whitney_first(n: usize, k: usize) -> Result<MPoly> {
    WhitneyTriangle::new(WhitneyKind::First).value(n, k)
}

/// W(n, k) evaluated from the explicit alternating sum
/// W(n, k) = 1/(q^k k!) * sum_j (-1)^{k-j} C(k, j) (r + j q)^n,
/// which requires q != 0.
pub fn whitney_second_explicit(
    n: usize,
    k: usize,
    q_val: &Rational,
    r_val: &Rational,
) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if q_val.is_zero() {
        return Err(Error::ZeroQParameter);
    }
    let mut sum = Rational::zero();
    for j in 0..=k {
        let base = r_val + &(q_val * &Rational::from_integer(j as i64));
        let term = binomial(k, j as i64) * base.pow(n as u32);
        sum = if (k - j).is_multiple_of(2) {
            sum + term
        } else {
            sum - term
        };
    }
    sum.checked_div(&(q_val.pow(k as u32) * factorial(k)))
}

/// Row n of either triangle computed straight from the defining change of
/// basis, with no recurrence: expand the left side as a polynomial in x and
/// solve the triangular system against the target basis. This is the
/// independent oracle the recurrences are certified against.
pub fn definitional_row(kind: WhitneyKind, n: usize) -> Vec<MPoly> {
    let x = MPoly::var(Var::X);
    let q = MPoly::var(Var::Q);
    let r = MPoly::var(Var::R);

    // falling factorials (x)_0 .. (x)_n, monic in x
    let mut falling = Vec::with_capacity(n + 1);
    falling.push(MPoly::one());
    for i in 0..n {
        let factor = &x - &MPoly::integer(i as i64);
        falling.push(falling.last().unwrap() * &factor);
    }

    let qx_plus_r = &q * &x + &r;
    let mut out = vec![MPoly::zero(); n + 1];
    match kind {
        WhitneyKind::Second => {
            // (qx + r)^n = sum_k [q^k W(n,k)] (x)_k
            let mut rem = qx_plus_r.pow(n);
            for k in (0..=n).rev() {
                let c = rem.coeff_of_power(Var::X, k as u32);
                rem = rem - &c * &falling[k];
                out[k] = c
                    .div_exact_pow(Var::Q, k as u32)
                    .expect("basis coefficient divisible by q^k");
            }
            assert!(rem.is_zero(), "change of basis must terminate exactly");
        }
        WhitneyKind::First => {
            // q^n (x)_n = sum_k w(n,k) (qx + r)^k
            let mut rem =
                MPoly::term(Monomial::var_pow(Var::Q, n as u32), Rational::one()) * &falling[n];
            for k in (0..=n).rev() {
                let c = rem.coeff_of_power(Var::X, k as u32);
                let w = c
                    .div_exact_pow(Var::Q, k as u32)
                    .expect("leading coefficient divisible by q^k");
                rem = rem - &w * &qx_plus_r.pow(k);
                out[k] = w;
            }
            assert!(rem.is_zero(), "change of basis must terminate exactly");
        }
    }
    out
}

/// Exponential generating function of column k of the second-kind triangle,
/// e^{rt}/k! * ((e^{qt} - 1)/q)^k, truncated at `order`. The inner quotient
/// is constructed term-wise as a polynomial series in q, so no division by
/// the indeterminate q ever happens.
pub fn egf_second_series(k: usize, order: usize) -> TruncSeries {
    let u = TruncSeries::exp_minus_one_over(&MPoly::var(Var::Q), order);
    let mut power = TruncSeries::one(order);
    for _ in 0..k {
        power = power.mul(&u);
    }
    power
        .mul(&TruncSeries::exp_linear(&MPoly::var(Var::R), order))
        .scale(&factorial(k).recip().expect("k! > 0"))
}

/// Compare n! [t^n] of the column-k generating function with the recurrence
/// triangle for every n <= n_max. Errors when k > n_max.
pub fn egf_row_check(k: usize, n_max: usize) -> Result<bool> {
    if k > n_max {
        return Err(Error::IndexOutOfRange { n: n_max, k });
    }
    let series = egf_second_series(k, n_max);
    let mut triangle = WhitneyTriangle::new(WhitneyKind::Second);
    for n in 0..=n_max {
        let expected = if n >= k {
            triangle.value(n, k)?
        } else {
            MPoly::zero()
        };
        if series.extract_egf_coefficient(n)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verify the parameter-translation identity
/// W_{q,r+s}(n, k) = sum_{j=k}^{n} C(n, j) r^{n-j} W_{q,s}(j, k)
/// symbolically, realizing W_{q,s} by renaming r to s and W_{q,r+s} by the
/// substitution r -> r + s.
pub fn translation_check(n: usize, k: usize) -> Result<bool> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let mut triangle = WhitneyTriangle::new(WhitneyKind::Second);
    let r_plus_s = &MPoly::var(Var::R) + &MPoly::var(Var::S);
    let lhs = triangle.value(n, k)?.subst(Var::R, &r_plus_s);
    let mut rhs = MPoly::zero();
    for j in k..=n {
        let shifted = triangle.value(j, k)?.subst(Var::R, &MPoly::var(Var::S));
        let r_power = MPoly::term(
            Monomial::var_pow(Var::R, (n - j) as u32),
            binomial(n, j as i64),
        );
        rhs = rhs + &r_power * &shifted;
    }
    Ok(lhs == rhs)
}
