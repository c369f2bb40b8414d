//! Exact scalars.
//!
//! Every entry, coefficient and eigenvalue in the crate is a
//! [`num_rational::BigRational`], which is always kept in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("invalid rational {text:?}: bad numerator")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("invalid rational {text:?}: bad denominator")))?;
    if den.is_zero() {
        return Err(Error::parse(format!(
            "invalid rational {text:?}: zero denominator"
        )));
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The value as an `i64` if it is an integer that fits.
pub fn as_integer(value: &Rational) -> Option<i64> {
    if value.is_integer() {
        value.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonnegative_integer(value: &Rational) -> bool {
    value.is_integer() && !value.is_negative()
}

pub(crate) fn product(factors: impl IntoIterator<Item = Rational>) -> Rational {
    factors.into_iter().fold(Rational::one(), |acc, f| acc * f)
}
