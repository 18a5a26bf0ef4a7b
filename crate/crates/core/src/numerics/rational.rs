//! Exact rational scalars.
//!
//! `num_rational::BigRational` already maintains the invariants this crate
//! relies on (reduced fraction, positive denominator), so the exact lane is
//! an alias plus construction and parsing helpers.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from machine integers. Panics on a zero denominator; use
/// [`try_rational`] for fallible construction from external input.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Fallible construction, for values originating outside the crate.
pub fn try_rational(num: BigInt, den: BigInt) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Nearest `f64` to the exact value.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational equal to the given float. `None` for NaN/infinite input.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Parses `p/q`, an integer, or a decimal literal, all exactly.
///
/// Decimal input maps to the written decimal fraction (`"0.1"` is 1/10),
/// not to the nearest binary float.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::RationalParse(s.to_string());

    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        return try_rational(num, den);
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rational::new(digits, scale);
        let int = Rational::from_integer(int_part);
        return Ok(if negative { int - frac } else { int + frac });
    }
    let int: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(int))
}

/// Sign of an exact value: −1, 0, or 1.
pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
