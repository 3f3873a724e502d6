//! Exact computer algebra for generalised series fields `ℚ((Γ))`.
//!
//! The monomial group `Γ` is the group of finitely supported formal
//! products over a totally ordered chain of fundamental monomials, ordered
//! anti-lexicographically. Series are finite sums of rational multiples of
//! monomials. A [`DerivationSchema`] prescribes the logarithmic derivative
//! `φ′/φ` of every fundamental monomial; the derivation is extended to
//! monomials by the strong Leibniz rule and to series by linearity.
//!
//! On top of that the crate provides window-based checkers for the
//! summability and Hardy-type criteria, asymptotic integration and a
//! budgeted exact integrator.

pub mod asympint;
pub mod chain;
pub mod config;
pub mod derivation;
mod error;
pub mod hardy;
pub mod monomial;
pub mod sample;
pub mod series;
pub mod text;

pub use asympint::{GlbVerdict, IntegrationResult, ThetaInfo};
pub use chain::{ChainKind, Fundamental, FundamentalChain};
pub use config::{Budgets, Session};
pub use derivation::{
    check_condition, Condition, ConditionReport, DerivationSchema, SchemaKind, Verdict, Witness,
};
pub use error::{Error, ParseError, Result};
pub use hardy::{HFieldVerdict, HardyReport};
pub use monomial::{Monomial, Sign};
pub use series::{Series, SeriesDecomposition, Term};

/// Exact rational numbers, used for coefficients, exponents and chain indices.
pub type Q = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
