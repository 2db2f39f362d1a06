//! Homogeneous polynomials in two variables.

use std::ops::{Add, Mul, Neg, Sub};

use crate::ratio::Ratio;
use crate::scalar::Field;

/// A binary form of fixed degree `d`, stored densely: `coeffs[i]` multiplies
/// `S^(d-i) T^i`. The zero form still carries a degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm<T> {
    coeffs: Vec<T>,
}

impl<T: Field> BinaryForm<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn constant(c: T) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `a S + b T`.
    pub fn linear(a: T, b: T) -> Self {
        BinaryForm { coeffs: vec![a, b] }
    }

    pub fn s() -> Self {
        Self::linear(T::one(), T::zero())
    }

    pub fn t() -> Self {
        Self::linear(T::zero(), T::one())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn eval(&self, s: &T, t: &T) -> T {
        let d = self.degree();
        // Horner in the ratio, homogenized.
        let mut acc = T::zero();
        let mut t_pow = T::one();
        let mut terms = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            terms.push(t_pow.clone());
            t_pow = t_pow * t.clone();
        }
        let mut s_pow = T::one();
        for i in (0..=d).rev() {
            acc = acc + self.coeffs[i].clone() * s_pow.clone() * terms[i].clone();
            s_pow = s_pow * s.clone();
        }
        acc
    }

    pub fn eval_ratio(&self, r: &Ratio<T>) -> T {
        self.eval(r.numer(), r.denom())
    }

    /// Coefficients of `f(1, y)` in increasing powers of `y`, trimmed.
    fn dehomogenized(&self) -> Vec<T> {
        let mut v = self.coeffs.clone();
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    /// Exponent of the factor `S` (its multiplicity as a linear factor).
    fn s_multiplicity(&self) -> usize {
        self.degree() + 1 - self.dehomogenized().len()
    }

    /// True when `self` divides `other` in `k[S, T]`.
    pub fn divides(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() || self.degree() > other.degree() {
            return false;
        }
        if self.s_multiplicity() > other.s_multiplicity() {
            return false;
        }
        poly_rem(&other.dehomogenized(), &self.dehomogenized()).iter().all(|c| c.is_zero())
    }

    /// True when `other = λ · self` for some nonzero scalar `λ`.
    pub fn is_associate_of(&self, other: &Self) -> bool {
        if self.degree() != other.degree() || self.is_zero() != other.is_zero() {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let i = self.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
        if other.coeffs[i].is_zero() {
            return false;
        }
        let lambda = other.coeffs[i].clone() / self.coeffs[i].clone();
        self.scale(&lambda) == *other
    }
}

impl<T: Field> BinaryForm<T> {
    /// True when the forms share a zero on the projective line over the
    /// algebraic closure, i.e. have a nonconstant common factor. Zero forms
    /// are ignored; if every form is zero the answer is true.
    pub fn have_common_zero(forms: &[Self]) -> bool {
        let nonzero: Vec<&Self> = forms.iter().filter(|f| !f.is_zero()).collect();
        if nonzero.is_empty() {
            return true;
        }
        if nonzero.iter().all(|f| f.s_multiplicity() > 0) {
            return true;
        }
        let mut g = nonzero[0].dehomogenized();
        for f in &nonzero[1..] {
            g = poly_gcd(&g, &f.dehomogenized());
        }
        g.len() > 1
    }
}

fn poly_gcd<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    let trim = |v: Vec<T>| {
        let mut v = v;
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = if b.len() == 1 { vec![T::zero()] } else { trim(poly_rem(&a, &b)) };
        let r = if r.is_empty() { vec![T::zero()] } else { r };
        a = b;
        b = r;
    }
    a
}

/// Remainder of univariate division, coefficients in increasing degree.
fn poly_rem<T: Field>(num: &[T], den: &[T]) -> Vec<T> {
    let lead = den.last().expect("nonempty").clone();
    let mut rem = num.to_vec();
    while rem.len() >= den.len() {
        let top = rem.last().expect("nonempty").clone();
        if !top.is_zero() {
            let factor = top / lead.clone();
            let shift = rem.len() - den.len();
            for (i, d) in den.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - factor.clone() * d.clone();
            }
        }
        rem.pop();
        if rem.is_empty() {
            break;
        }
    }
    rem
}

impl<T: Field> Add for BinaryForm<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "adding forms of different degree");
        BinaryForm {
            coeffs: self.coeffs.into_iter().zip(rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Field> Sub for BinaryForm<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Field> Neg for BinaryForm<T> {
    type Output = Self;
    fn neg(self) -> Self {
        BinaryForm { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Field> Mul for BinaryForm<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { coeffs }
    }
}
