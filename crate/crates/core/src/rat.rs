//! Exact rational helpers: the `"a/b"` string codec used by every JSON
//! surface, plus a few conversions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"a"` or `"a/b"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRational, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError::Empty);
    }
    let mut parts = s.splitn(2, '/');
    let num = parts.next().unwrap();
    let num: BigInt = num
        .parse()
        .map_err(|_| RatParseError::Invalid(s.to_string()))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(num)),
        Some(den) => {
            let den: BigInt = den
                .parse()
                .map_err(|_| RatParseError::Invalid(s.to_string()))?;
            if den.is_zero() {
                return Err(RatParseError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Formats in lowest terms; integers print without the `/1`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else if q.denom().is_negative() {
        // num-rational keeps denominators positive, but guard anyway.
        format!("{}/{}", -q.numer(), -q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
