//! The scalar field abstraction.
//!
//! Every algorithm in this crate is written against [`Field`]. Exact work uses
//! [`crate::Q`] (arbitrary precision rationals); the floating point impls exist
//! for quick experiments and compare against a small absolute tolerance.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Zero};

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Num
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// Zero test used by pivoting and by every axiom check.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }
}

impl Field for BigRational {}

impl Field for Ratio<i64> {}

impl Field for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }
}

impl Field for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational, RationalParseError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
    if d.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(BigRational::new(n, d))
}

/// Formats a rational as `p` or `p/q`, never as a decimal.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_int(3));
        assert_eq!(
            parse_rational("-2/4").unwrap(),
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert_eq!(
            parse_rational("1/0"),
            Err(RationalParseError::ZeroDenominator("1/0".into()))
        );
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(format_rational(&parse_rational("8/4").unwrap()), "2");
    }
}
