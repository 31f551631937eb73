//! Exact computation of r-Whitney numbers of both kinds and of the
//! Bernoulli and Cauchy polynomial families built from them, over
//! arbitrary-precision rationals with q and r kept as indeterminates.
//!
//! The crate is organized as a small tower:
//!
//! - [`rational`]: canonical exact fractions, factorials, binomials
//! - [`poly`]: sparse multivariate polynomials in {q, r, s, z, x}
//! - [`series`]: truncated formal power series in t with polynomial
//!   coefficients (exp, log, polylogarithm, division, EGF extraction)
//! - [`stirling`]: Stirling and r-Stirling triangles, classical Bernoulli
//!   oracles, independent of everything Whitney
//! - [`whitney`]: the r-Whitney triangles w(n, k) and W(n, k), with a
//!   definitional change-of-basis oracle certifying the recurrences
//! - [`bernoulli`]: Bernoulli polynomials with a q parameter by three
//!   routes, and the poly-Bernoulli family
//! - [`cauchy`]: Cauchy polynomials with a q parameter at r and -r, with an
//!   exact integration oracle
//! - [`identities`]: the verification suite tying every family to its
//!   independent cross-checks, producing structured reports
//!
//! Everything is computed exactly; there is no floating point in any
//! computation path, so every comparison in the suite is an equality of
//! canonical forms.
//!
//! ```
//! use rwhitney::bernoulli::bernoulli_q_wsum;
//! use rwhitney::poly::{EvalPoint, Var};
//! use rwhitney::rational::Rational;
//!
//! // B_2 with q and r symbolic, then specialized to the classical value
//! let b2 = bernoulli_q_wsum(2);
//! assert_eq!(b2.to_string(), "r^2 - r - 1/2*q + 2/3");
//! let point = EvalPoint::new()
//!     .set(Var::Q, Rational::one())
//!     .set(Var::R, Rational::zero());
//! assert_eq!(b2.eval(&point).to_string(), "1/6");
//! ```

pub mod bernoulli;
pub mod cauchy;
pub mod error;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod series;
pub mod stirling;
pub mod whitney;

pub use cauchy::CauchyKind;
pub use error::{Error, Result};
pub use identities::{IdentityReport, Instance, Status};
pub use poly::{EvalPoint, MPoly, Monomial, PolyTerm, Var};
pub use rational::{binomial, factorial, Rational};
pub use series::TruncSeries;
pub use stirling::StirlingTriangle;
pub use whitney::{WhitneyKind, WhitneyTriangle};
