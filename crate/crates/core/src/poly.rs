//! Sparse multivariate polynomials over [`Rational`] in the fixed
//! indeterminate alphabet {q, r, s, z, x}.
//!
//! The alphabet is closed: q and r are the triangle parameters, s is the
//! shift variable of the translation identities, z is the polynomial
//! argument of the poly-Bernoulli family, and x is the integration variable
//! of the Cauchy integrals. Exponent vectors are therefore fixed-width.
//!
//! Canonical form: no stored coefficient is zero, and terms iterate in
//! graded lexicographic order with q < r < s < z < x. Structural equality
//! coincides with mathematical equality, and [`fmt::Display`] renders a
//! canonical text form (descending term order), e.g.
//! `r^2 - r - 1/2*q + 2/3`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Number of indeterminates in the fixed alphabet.
pub const NUM_VARS: usize = 5;

/// One of the five indeterminates, in the canonical order q < r < s < z < x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    R,
    S,
    Z,
    X,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::Q, Var::R, Var::S, Var::Z, Var::X];

    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::R => 1,
            Var::S => 2,
            Var::Z => 3,
            Var::X => 4,
        }
    }

    pub fn name(self) -> char {
        match self {
            Var::Q => 'q',
            Var::R => 'r',
            Var::S => 's',
            Var::Z => 'z',
            Var::X => 'x',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'q' => Some(Var::Q),
            'r' => Some(Var::R),
            's' => Some(Var::S),
            'z' => Some(Var::Z),
            'x' => Some(Var::X),
            _ => None,
        }
    }
}

/// Exponent vector (e_q, e_r, e_s, e_z, e_x).
///
/// Ordered graded-lexicographically: total degree first, ties broken by the
/// exponent of the largest variable (x) downwards. The map iteration order
/// this induces is the canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; NUM_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NUM_VARS]);

    pub fn var(v: Var) -> Monomial {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn var_pow(v: Var, exp: u32) -> Monomial {
        let mut e = [0; NUM_VARS];
        e[v.index()] = exp;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (exp, add) in e.iter_mut().zip(other.0) {
            *exp += add;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for i in (0..NUM_VARS).rev() {
                    match self.0[i].cmp(&other.0[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Partial assignment of rational values to indeterminates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalPoint {
    assignments: BTreeMap<Var, Rational>,
}

impl EvalPoint {
    pub fn new() -> Self {
        EvalPoint::default()
    }

    /// Builder-style assignment. A later `set` for the same variable
    /// replaces the earlier one, keeping at most one value per variable.
    pub fn set(mut self, v: Var, value: Rational) -> Self {
        self.assignments.insert(v, value);
        self
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.assignments.get(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Rational)> {
        self.assignments.iter()
    }
}

/// Sparse multivariate polynomial over [`Rational`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

/// One term of the JSON form: exponents `[e_q, e_r, e_s, e_z, e_x]` plus the
/// coefficient in canonical `p/q` text.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyTerm {
    pub exponents: [u32; NUM_VARS],
    pub coefficient: Rational,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn integer(n: i64) -> Self {
        MPoly::constant(Rational::from_integer(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Monomial::var(v), Rational::one())
    }

    pub fn term(mono: Monomial, coeff: Rational) -> Self {
        let mut p = MPoly::zero();
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending canonical order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Total degree; 0 for the zero polynomial (check [`MPoly::is_zero`]).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Degree in one variable; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    fn add_assign_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute the assigned indeterminates by their rational values.
    /// Unassigned indeterminates stay symbolic; a full assignment yields a
    /// constant polynomial.
    pub fn eval(&self, point: &EvalPoint) -> MPoly {
        if point.is_empty() {
            return self.clone();
        }
        let mut out = MPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut c = coeff.clone();
            let mut m = *mono;
            for (var, value) in point.iter() {
                let e = m.exponent(*var);
                if e > 0 {
                    c = c * value.pow(e);
                    m.0[var.index()] = 0;
                }
            }
            out.add_assign_term(m, c);
        }
        out
    }

    /// Substitute `expr` for every occurrence of `var`.
    pub fn subst(&self, var: Var, expr: &MPoly) -> MPoly {
        let max_e = self.degree_in(var) as usize;
        let mut powers = Vec::with_capacity(max_e + 1);
        powers.push(MPoly::one());
        for _ in 1..=max_e {
            powers.push(powers.last().unwrap() * expr);
        }
        let mut out = MPoly::zero();
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(var) as usize;
            let mut m = *mono;
            m.0[var.index()] = 0;
            let contribution = MPoly::term(m, coeff.clone()) * &powers[e];
            out = out + contribution;
        }
        out
    }

    /// Definite integral over x in [0, 1], computed term-wise:
    /// x^e contributes 1/(e+1), other variables pass through.
    pub fn integrate_x_unit(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(Var::X);
            let mut m = *mono;
            m.0[Var::X.index()] = 0;
            let c = coeff * &Rational::new(1, (e as i64) + 1);
            out.add_assign_term(m, c);
        }
        out
    }

    /// The polynomial coefficient of `var^exp`, with `var` removed.
    pub fn coeff_of_power(&self, var: Var, exp: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (mono, coeff) in &self.terms {
            if mono.exponent(var) == exp {
                let mut m = *mono;
                m.0[var.index()] = 0;
                out.add_assign_term(m, coeff.clone());
            }
        }
        out
    }

    /// Exact division by `var^power`; errors if any term has a smaller
    /// exponent of `var`.
    pub fn div_exact_pow(&self, var: Var, power: u32) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (mono, coeff) in &self.terms {
            let e = mono.exponent(var);
            if e < power {
                return Err(Error::NotDivisible {
                    var: var.name(),
                    power,
                });
            }
            let mut m = *mono;
            m.0[var.index()] = e - power;
            out.add_assign_term(m, coeff.clone());
        }
        Ok(out)
    }

    /// Terms as JSON-ready records, in descending canonical order.
    pub fn to_records(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| PolyTerm {
                exponents: m.0,
                coefficient: c.clone(),
            })
            .collect()
    }

    pub fn from_records(records: &[PolyTerm]) -> MPoly {
        let mut out = MPoly::zero();
        for rec in records {
            out.add_assign_term(Monomial(rec.exponents), rec.coefficient.clone());
        }
        out
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_assign_term(*m, -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_assign_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $method:ident) => {
        impl $Op for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                $Op::$method(&self, &rhs)
            }
        }
        impl $Op<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                $Op::$method(&self, rhs)
            }
        }
        impl $Op<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                $Op::$method(self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl fmt::Display for MPoly {
    /// Canonical text form. Terms in descending graded-lex order, constants
    /// in `p/q` form, `*` between a non-unit coefficient and its monomial,
    /// variables within a monomial in alphabet order, e.g.
    /// `r^2 - r - 1/2*q + 2/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            if *mono == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                for v in Var::ALL {
                    let e = mono.exponent(v);
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{}", v.name())?;
                    } else {
                        write!(f, "{}^{}", v.name(), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.to_records())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }
    fn r() -> MPoly {
        MPoly::var(Var::R)
    }
    fn s() -> MPoly {
        MPoly::var(Var::S)
    }
    fn x() -> MPoly {
        MPoly::var(Var::X)
    }
    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn addition_cancels() {
        let a = &q() + &r();
        let b = &q() - &r();
        assert_eq!(&a + &b, q().scale(&rat(2, 1)));
    }

    #[test]
    fn monomial_product() {
        let qr = &q() * &r();
        assert_eq!(qr.num_terms(), 1);
        assert_eq!(qr.coeff(&Monomial([1, 1, 0, 0, 0])), Rational::one());
    }

    #[test]
    fn falling_factorial_expansion() {
        // (x - r) * (x - r - q) = x^2 - (2r + q)x + r^2 + qr, expanded by hand
        let f1 = &x() - &r();
        let f2 = &(&x() - &r()) - &q();
        let product = &f1 * &f2;
        let expected = MPoly::term(Monomial([0, 0, 0, 0, 2]), rat(1, 1))
            + MPoly::term(Monomial([0, 1, 0, 0, 1]), rat(-2, 1))
            + MPoly::term(Monomial([1, 0, 0, 0, 1]), rat(-1, 1))
            + MPoly::term(Monomial([0, 2, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([1, 1, 0, 0, 0]), rat(1, 1));
        assert_eq!(product, expected);
    }

    #[test]
    fn eval_specializes() {
        // r^2 - r - q/2 + 2/3 at q=1, r=0 gives 1/6
        let p = r().pow(2) - r() - q().scale(&rat(1, 2)) + MPoly::constant(rat(2, 3));
        let point = EvalPoint::new()
            .set(Var::Q, rat(1, 1))
            .set(Var::R, rat(0, 1));
        assert_eq!(p.eval(&point), MPoly::constant(rat(1, 6)));
    }

    #[test]
    fn eval_identity_and_partial() {
        assert_eq!(q().eval(&EvalPoint::new()), q());
        let qr = &q() * &r();
        let point = EvalPoint::new().set(Var::Q, rat(2, 1));
        assert_eq!(qr.eval(&point), r().scale(&rat(2, 1)));
    }

    #[test]
    fn subst_examples() {
        let r_plus_s = &r() + &s();
        let expected = r().pow(2) + (&r() * &s()).scale(&rat(2, 1)) + s().pow(2);
        assert_eq!(r().pow(2).subst(Var::R, &r_plus_s), expected);
        assert_eq!(q().subst(Var::R, &r_plus_s), q());
        let b1 = &r() - &MPoly::constant(rat(1, 2));
        assert_eq!(
            b1.subst(Var::R, &r_plus_s),
            &r_plus_s - &MPoly::constant(rat(1, 2))
        );
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(x().integrate_x_unit(), MPoly::constant(rat(1, 2)));
        let integrand = &x() - &r();
        assert_eq!(
            integrand.integrate_x_unit(),
            MPoly::constant(rat(1, 2)) - r()
        );
        assert_eq!(MPoly::one().integrate_x_unit(), MPoly::one());
    }

    #[test]
    fn degrees() {
        let p = r().pow(2) - r();
        assert_eq!(p.degree_in(Var::R), 2);
        assert_eq!((&q() * &r()).total_degree(), 2);
        assert_eq!(q().pow(3).degree_in(Var::R), 0);
        assert!(MPoly::zero().is_zero());
        assert_eq!(MPoly::zero().total_degree(), 0);
    }

    #[test]
    fn canonical_display() {
        let b2 = r().pow(2) - r() - q().scale(&rat(1, 2)) + MPoly::constant(rat(2, 3));
        assert_eq!(b2.to_string(), "r^2 - r - 1/2*q + 2/3");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!((-&q()).to_string(), "-q");
        let qr2 = MPoly::term(Monomial([1, 2, 0, 0, 0]), rat(-3, 2));
        assert_eq!(qr2.to_string(), "-3/2*q*r^2");
    }

    #[test]
    fn display_orders_terms_by_grade_then_lex() {
        // all of degree 2: x^2 > r*x > q*x > r^2 > q*r > q^2
        let p = MPoly::term(Monomial([2, 0, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([1, 1, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([0, 2, 0, 0, 0]), rat(1, 1))
            + MPoly::term(Monomial([1, 0, 0, 0, 1]), rat(1, 1))
            + MPoly::term(Monomial([0, 1, 0, 0, 1]), rat(1, 1))
            + MPoly::term(Monomial([0, 0, 0, 0, 2]), rat(1, 1));
        assert_eq!(p.to_string(), "x^2 + r*x + q*x + r^2 + q*r + q^2");
    }

    #[test]
    fn div_exact_pow_examples() {
        let p = (&q() * &r()).scale(&rat(3, 1)) + q().pow(2);
        let divided = p.div_exact_pow(Var::Q, 1).unwrap();
        assert_eq!(divided, r().scale(&rat(3, 1)) + q());
        assert!(p.div_exact_pow(Var::Q, 2).is_err());
    }

    #[test]
    fn records_round_trip() {
        let p = r().pow(2) - q().scale(&rat(1, 2));
        let records = p.to_records();
        assert_eq!(MPoly::from_records(&records), p);
    }

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(
            (proptest::array::uniform5(0u32..3), -6i64..=6, 1i64..=4),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = MPoly::zero();
            for (exps, n, d) in terms {
                p = p + MPoly::term(Monomial(exps), Rational::new(n, d));
            }
            p
        })
    }

    fn arb_point() -> impl Strategy<Value = (Rational, Rational)> {
        ((-5i64..=5, 1i64..=5), (-5i64..=5, 1i64..=5))
            .prop_map(|((a, b), (c, d))| (Rational::new(a, b), Rational::new(c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, MPoly::zero());
        }

        #[test]
        fn subst_then_eval_matches_shifted_eval(a in arb_poly(), (rho, sigma) in arb_point()) {
            // s is the fresh shift variable, so the input must not use it
            let a = a.subst(Var::S, &MPoly::one());
            let shifted = a.subst(Var::R, &(&MPoly::var(Var::R) + &MPoly::var(Var::S)));
            let lhs = shifted.eval(
                &EvalPoint::new().set(Var::R, rho.clone()).set(Var::S, sigma.clone()),
            );
            let rhs = a.eval(&EvalPoint::new().set(Var::R, &rho + &sigma));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integration_is_linear(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(
                (&a + &b).integrate_x_unit(),
                &a.integrate_x_unit() + &b.integrate_x_unit()
            );
        }

        #[test]
        fn display_parse_records_round_trip(a in arb_poly()) {
            prop_assert_eq!(MPoly::from_records(&a.to_records()), a);
        }
    }
}
