//! Exact rational scalars and the few numeric helpers the rest of the
//! crate leans on.
//!
//! Every coefficient in this crate is a [`Rational`] — an arbitrary-precision
//! fraction that is always kept in lowest terms.  Floating point never
//! appears: equality of computed values is meaningful and exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, the coefficient field ℚ.
pub type Rational = num_rational::BigRational;

/// Error produced when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: &'static str,
}

/// Shorthand for an integer rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optionally signed, surrounding whitespace
/// ignored) into a reduced rational.  A zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        input: s.to_owned(),
        reason,
    };
    let body = s.trim();
    if body.is_empty() {
        return Err(err("empty string"));
    }
    let (numer, denom) = match body.split_once('/') {
        None => (body, None),
        Some((n, d)) => (n, Some(d)),
    };
    let numer: BigInt = numer
        .trim()
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let denom: BigInt = match denom {
        None => BigInt::one(),
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| err("denominator is not an integer"))?,
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Formats a rational as `"p"` when the denominator is one and `"p/q"`
/// otherwise — the inverse of [`parse_rational`] on reduced fractions.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `(-1)^n` as a rational, handling negative parities as well.
pub fn neg_one_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// True if `q` is a (positive or negative) integer.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Absolute value, useful when comparing magnitudes of exact results.
pub fn abs(q: &Rational) -> Rational {
    q.abs()
}
