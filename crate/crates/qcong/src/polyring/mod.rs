//! Dense univariate polynomials over `BigInt`, formal rational functions,
//! and congruence testing modulo powers of the cyclotomic q-integer `[p]_q`.
//!
//! The ring is `Z[q]`. Polynomials are stored densely in ascending powers and
//! kept canonical (no trailing zero coefficients). Rational functions are
//! never reduced to lowest terms; equality and congruence are decided by
//! cross-multiplication, so no polynomial gcd is ever computed.

mod congruence;
mod intpoly;
mod ratfunc;

pub use congruence::{coprimality_check, congruence_remainder, is_congruent, Modulus};
pub use intpoly::IntPoly;
pub use ratfunc::{RatFunc, Rational};

use thiserror::Error;

/// Errors from polynomial and rational-function operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// Division asked for a modulus whose leading coefficient is not 1.
    #[error("modulus is not monic")]
    NonMonicModulus,
    /// A rational function was built with, or divided by, the zero polynomial.
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    /// After cancelling all common powers of (q - 1), the denominator still
    /// vanishes at q = 1 while the numerator does not.
    #[error("pole at q = 1")]
    PoleAtOne,
}
