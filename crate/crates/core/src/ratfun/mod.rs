//! Exact sparse multivariate polynomials and rational functions over
//! arbitrary-precision rationals (or Gaussian rationals), plus the univariate
//! and Laurent-series arithmetic used by the symbolic WKB layer.
//!
//! Values are immutable after construction and all operations are pure, so
//! everything here is safe to share across threads.

mod coeff;
mod parse;
mod poly;
mod rf;
pub mod series;
pub mod uni;

pub use coeff::GaussRat;
pub use parse::{parse_gauss_function, parse_gauss_rat, parse_rational_function, ParseError};
pub use poly::{Mono, Polynomial};
pub use rf::{rf_equal, rf_substitute, RationalFunction, Rf};

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient field: exact, owned-value arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + num::Zero
    + num::One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact inverse; panics on zero (callers guard).
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Debug
        + num::Zero
        + num::One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Arithmetic errors surfaced by the rational-function layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatFunError {
    DivisionByZero,
    VariableMismatch,
}

impl std::fmt::Display for RatFunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RatFunError::DivisionByZero => write!(f, "division by zero"),
            RatFunError::VariableMismatch => write!(f, "operands have different variable sets"),
        }
    }
}

impl std::error::Error for RatFunError {}

/// Plain arbitrary-precision rational, the default coefficient field.
pub type Rat = num::BigRational;

/// Convenience: rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Convenience: rational n/d.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
