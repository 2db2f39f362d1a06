//! Exact scalar fields.
//!
//! Everything above this module is written against [`Field`], which is
//! implemented for arbitrary-precision rationals and for the prime fields
//! [`Fp`](crate::fp::Fp). No operation ever rounds.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed number literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("modulus {0} is not an odd prime")]
    BadModulus(u64),
    #[error("literal {0:?} is not valid in a prime field (integers only)")]
    FractionInPrimeField(String),
}

/// Which field a configuration lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    Prime(u64),
}

impl FieldTag {
    pub fn validate(self) -> Result<Self, ScalarError> {
        match self {
            FieldTag::Prime(p) if !is_odd_prime(p) => Err(ScalarError::BadModulus(p)),
            tag => Ok(tag),
        }
    }
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "rational"),
            FieldTag::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub const fn is_odd_prime(n: u64) -> bool {
    if n < 3 || n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field of characteristic other than two.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Zero for the rationals.
    const CHARACTERISTIC: u64;

    fn tag() -> FieldTag;

    fn from_i64(n: i64) -> Self;

    fn inverse(&self) -> Option<Self>;

    /// A square root in this field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// Parses a literal of the grammar `integer | integer/natural`.
    fn parse_literal(text: &str) -> Result<Self, ScalarError>;

    /// The value as a fraction string `n/d`, with `d` shown even when it is 1.
    fn fraction_string(&self) -> String;

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A field with finitely many elements that can be listed.
pub trait FiniteField: Field {
    fn elements() -> Vec<Self>;
}

pub fn parse_scalar<T: Field>(text: &str) -> Result<T, ScalarError> {
    T::parse_literal(text)
}

/// Splits `text` into an integer numerator and an optional natural denominator.
pub(crate) fn split_literal(text: &str) -> Result<(BigInt, Option<BigInt>), ScalarError> {
    let malformed = || ScalarError::Malformed(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (trimmed, None),
    };
    let num = parse_integer(num, true).ok_or_else(malformed)?;
    let den = match den {
        Some(d) => {
            let d = parse_integer(d, false).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(ScalarError::ZeroDenominator(text.to_string()));
            }
            Some(d)
        }
        None => None,
    };
    Ok((num, den))
}

fn parse_integer(text: &str, signed: bool) -> Option<BigInt> {
    let digits = match text.strip_prefix(['-', '+']) {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => text,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn tag() -> FieldTag {
        FieldTag::Rational
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // Lowest terms, so the square root is exact iff both parts are squares.
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| BigRational::new(n, d))
    }

    fn parse_literal(text: &str) -> Result<Self, ScalarError> {
        let (num, den) = split_literal(text)?;
        Ok(BigRational::new(num, den.unwrap_or_else(BigInt::one)))
    }

    fn fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Lossy conversion used only for drawing.
pub fn rational_to_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_scalar::<BigRational>("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_scalar::<BigRational>("0").unwrap(), q(0, 1));
        assert_eq!(parse_scalar::<BigRational>("-6/4").unwrap(), q(-3, 2));
        assert_eq!(parse_scalar::<BigRational>(" 12 ").unwrap(), q(12, 1));
    }

    #[test]
    fn parse_rejects() {
        assert!(matches!(
            parse_scalar::<BigRational>("1/0"),
            Err(ScalarError::ZeroDenominator(_))
        ));
        for bad in ["", "x", "1/", "/2", "1/-2", "1.5", "--1", "1/2/3"] {
            assert!(
                matches!(parse_scalar::<BigRational>(bad), Err(ScalarError::Malformed(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(52, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
        assert_eq!(q(0, 1).sqrt(), Some(q(0, 1)));
    }

    #[test]
    fn modulus_validation() {
        assert!(FieldTag::Prime(11).validate().is_ok());
        assert!(FieldTag::Prime(2).validate().is_err());
        assert!(FieldTag::Prime(9).validate().is_err());
        assert!(FieldTag::Prime(1).validate().is_err());
        assert!(FieldTag::Rational.validate().is_ok());
    }

    #[test]
    fn print_round_trip() {
        for text in ["3/2", "-7/9", "0", "123456789012345678901234567890"] {
            let v: BigRational = parse_scalar(text).unwrap();
            assert_eq!(v.to_string(), text);
        }
    }
}
