//! Points of the projective line, used for slopes and aspect ratios.

use std::fmt;

use thiserror::Error;

use crate::scalar::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatioError {
    #[error("0/0 is not a point of the projective line")]
    BothZero,
    #[error("malformed ratio {0:?}; expected s/t")]
    Malformed(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `[numer : denom]`, scaled so the last nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ratio<T> {
    numer: T,
    denom: T,
}

impl<T: Field> Ratio<T> {
    pub fn new(numer: T, denom: T) -> Result<Self, RatioError> {
        if denom.is_zero() {
            if numer.is_zero() {
                return Err(RatioError::BothZero);
            }
            return Ok(Ratio { numer: T::one(), denom: T::zero() });
        }
        Ok(Ratio { numer: numer / denom, denom: T::one() })
    }

    pub fn from_ints(numer: i64, denom: i64) -> Result<Self, RatioError> {
        Self::new(T::from_i64(numer), T::from_i64(denom))
    }

    pub fn finite(value: T) -> Self {
        Ratio { numer: value, denom: T::one() }
    }

    pub fn infinity() -> Self {
        Ratio { numer: T::one(), denom: T::zero() }
    }

    pub fn numer(&self) -> &T {
        &self.numer
    }

    pub fn denom(&self) -> &T {
        &self.denom
    }

    pub fn parts(&self) -> (T, T) {
        (self.numer.clone(), self.denom.clone())
    }

    pub fn is_infinite(&self) -> bool {
        self.denom.is_zero()
    }

    /// The value `numer / denom` when it is finite.
    pub fn value(&self) -> Option<T> {
        (!self.is_infinite()).then(|| self.numer.clone())
    }

    /// `s/t ↦ -t/s`, the orthogonal slope.
    pub fn orthogonal(&self) -> Self {
        Ratio::new(-self.denom.clone(), self.numer.clone()).expect("nonzero")
    }

    /// `u/v ↦ -u/v`.
    pub fn negated(&self) -> Self {
        Ratio::new(-self.numer.clone(), self.denom.clone()).expect("nonzero")
    }

    /// `u/v ↦ v/u`.
    pub fn reciprocal(&self) -> Self {
        Ratio::new(self.denom.clone(), self.numer.clone()).expect("nonzero")
    }

    /// Parses `s/t` where both sides are integer literals of the field.
    pub fn parse(text: &str) -> Result<Self, RatioError> {
        let (s, t) = text
            .trim()
            .split_once('/')
            .ok_or_else(|| RatioError::Malformed(text.to_string()))?;
        let s = T::parse_literal(s).map_err(|_| RatioError::Malformed(text.to_string()))?;
        // The grammar allows a sign on the denominator, as in `1/-1`.
        let t = T::parse_literal(t).map_err(|_| RatioError::Malformed(text.to_string()))?;
        Ratio::new(s, t)
    }
}

impl<T: Field> fmt::Display for Ratio<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "1/0")
        } else {
            write!(f, "{}", self.numer.fraction_string())
        }
    }
}

/// Slope or aspect ratio of a rectangle; `Indeterminate` when every ratio fits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Measure<T> {
    Ratio(Ratio<T>),
    Indeterminate,
}

impl<T: Field> Measure<T> {
    pub fn ratio(&self) -> Option<&Ratio<T>> {
        match self {
            Measure::Ratio(r) => Some(r),
            Measure::Indeterminate => None,
        }
    }
}

impl<T: Field> fmt::Display for Measure<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Ratio(r) => r.fmt(f),
            Measure::Indeterminate => write!(f, "indeterminate"),
        }
    }
}

/// The ratio sequence `0/1, 1/0, 1/1, 1/-1, 2/1, 2/-1, 1/2, 1/-2, 3/1, ...`.
///
/// Positive reduced fractions are visited by height `max(a, b)`, numerator
/// descending, each followed by its negative. Over a finite field the images
/// repeat; duplicates are skipped and the sequence stops after all `p + 1`
/// points of the projective line have appeared.
pub fn sample_ratios<T: Field>(count: usize) -> Vec<Ratio<T>> {
    let cap = match T::CHARACTERISTIC {
        0 => usize::MAX,
        p => (p + 1) as usize,
    };
    let target = count.min(cap);
    let mut out: Vec<Ratio<T>> = Vec::with_capacity(target.min(1 << 16));
    let push = |r: Ratio<T>, out: &mut Vec<Ratio<T>>| {
        if out.len() < target && !out.contains(&r) {
            out.push(r);
        }
    };
    push(Ratio::finite(T::zero()), &mut out);
    push(Ratio::infinity(), &mut out);
    let mut height: i64 = 1;
    while out.len() < target {
        for (a, b) in height_fractions(height) {
            for r in [Ratio::from_ints(a, b), Ratio::from_ints(a, -b)].into_iter().flatten() {
                push(r, &mut out);
            }
        }
        height += 1;
        if T::CHARACTERISTIC != 0 && height as u64 > 2 * T::CHARACTERISTIC + 2 {
            // Every residue has appeared already.
            break;
        }
    }
    out
}

fn height_fractions(height: i64) -> Vec<(i64, i64)> {
    if height == 1 {
        return vec![(1, 1)];
    }
    let mut out = Vec::new();
    for other in 1..height {
        if num_integer::gcd(height, other) == 1 {
            out.push((height, other));
            out.push((other, height));
        }
    }
    out
}
