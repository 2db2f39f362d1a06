//! Exact roots of quadratics, affine and projective.

use thiserror::Error;

use crate::ratio::Ratio;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadraticError {
    #[error("all coefficients are zero")]
    AllZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root<T> {
    pub value: T,
    pub multiplicity: u8,
}

/// Roots of `a X^2 + b X + c` lying in the field.
///
/// A double root is reported once with multiplicity 2. When `a = 0` the
/// linear root (if any) is returned. An empty list means the discriminant
/// is not a square here.
pub fn solve_quadratic<T: Field>(a: &T, b: &T, c: &T) -> Result<Vec<Root<T>>, QuadraticError> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() { Err(QuadraticError::AllZero) } else { Ok(vec![]) };
        }
        return Ok(vec![Root { value: -c.clone() / b.clone(), multiplicity: 1 }]);
    }
    let two_a = T::from_i64(2) * a.clone();
    let disc = b.square() - T::from_i64(4) * a.clone() * c.clone();
    if disc.is_zero() {
        return Ok(vec![Root { value: -b.clone() / two_a, multiplicity: 2 }]);
    }
    let Some(root) = disc.sqrt() else {
        return Ok(vec![]);
    };
    Ok(vec![
        Root { value: (-b.clone() + root.clone()) / two_a.clone(), multiplicity: 1 },
        Root { value: (-b.clone() - root) / two_a, multiplicity: 1 },
    ])
}

/// Zeros of a binary quadratic form on the projective line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectiveRoots<T> {
    /// The form vanishes identically.
    Everything,
    Points(Vec<Ratio<T>>),
}

impl<T: Field> ProjectiveRoots<T> {
    pub fn points(&self) -> Option<&[Ratio<T>]> {
        match self {
            ProjectiveRoots::Everything => None,
            ProjectiveRoots::Points(p) => Some(p),
        }
    }

    pub fn contains(&self, r: &Ratio<T>) -> bool {
        match self {
            ProjectiveRoots::Everything => true,
            ProjectiveRoots::Points(p) => p.contains(r),
        }
    }
}

/// Projective zeros `[s:t]` of `a S^2 + b S T + c T^2`, each listed once.
pub fn binary_quadratic_roots<T: Field>(a: &T, b: &T, c: &T) -> ProjectiveRoots<T> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return ProjectiveRoots::Everything;
    }
    let mut out = Vec::new();
    if a.is_zero() {
        // T divides the form: [1:0] is a zero, the other factor is b S + c T.
        out.push(Ratio::infinity());
        if !b.is_zero() {
            let r = Ratio::new(-c.clone(), b.clone()).expect("b nonzero");
            if !out.contains(&r) {
                out.push(r);
            }
        }
        return ProjectiveRoots::Points(out);
    }
    let roots = solve_quadratic(a, b, c).expect("a nonzero");
    ProjectiveRoots::Points(roots.into_iter().map(|r| Ratio::finite(r.value)).collect())
}
