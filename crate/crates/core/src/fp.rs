//! Prime fields `F_p` for odd primes `p < 2^32`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::scalar::{is_odd_prime, split_literal, FieldTag, FiniteField, ScalarError, Field};

/// A canonical residue in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECKED: () = assert!(
        is_odd_prime(P) && P < (1 << 32),
        "Fp modulus must be an odd prime below 2^32"
    );

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECKED;
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Euler's criterion.
    pub fn is_square(self) -> bool {
        self.0 == 0 || self.pow((P - 1) / 2) == Self::one()
    }

    /// Tonelli-Shanks; the non-residue is found by a deterministic scan.
    fn tonelli_shanks(self) -> Option<Self> {
        if self.0 == 0 {
            return Some(self);
        }
        if !self.is_square() {
            return None;
        }
        let mut q = P - 1;
        let mut s = 0;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..P).map(Fp::<P>).find(|z| !z.is_square())?;
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t != Self::one() {
            let mut i = 0;
            let mut probe = t;
            while probe != Self::one() {
                probe = probe * probe;
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in F_p")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn tag() -> FieldTag {
        FieldTag::Prime(P)
    }

    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Extended Euclid on signed 128-bit integers.
        let (mut a, mut b) = (self.0 as i128, P as i128);
        let (mut x0, mut x1) = (1i128, 0i128);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(Fp(x0.rem_euclid(P as i128) as u64))
    }

    fn sqrt(&self) -> Option<Self> {
        self.tonelli_shanks()
    }

    fn parse_literal(text: &str) -> Result<Self, ScalarError> {
        let (num, den) = split_literal(text)?;
        if den.is_some() {
            return Err(ScalarError::FractionInPrimeField(text.to_string()));
        }
        let reduced = num.mod_floor(&BigInt::from(P));
        Ok(Fp(reduced.to_u64().expect("residue fits")))
    }

    fn fraction_string(&self) -> String {
        format!("{}/1", self.0)
    }
}

impl<const P: u64> FiniteField for Fp<P> {
    fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }
}
