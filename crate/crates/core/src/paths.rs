//! The slope path `π` and the aspect path `φ`.
//!
//! Each path is given by nine binary forms of degree at most two: the
//! coordinates `[X_A : Y_A : X_B : Y_B : X_C : Y_C : X_D : Y_D : X]` of a
//! rectangle as a function of its slope `S/T` (respectively
//! `[P_A : Q_A : … : P]` as a function of its aspect ratio `U/V`). They are
//! assembled from two auxiliary forms, `(ℰ, ℱ)` for the slope path and
//! `(ℳ, 𝒩)` for the aspect path.

use std::fmt;

use thiserror::Error;

use crate::configuration::{NormalizedConfig, Role};
use crate::form::BinaryForm;
use crate::ratio::Ratio;
use crate::rectangle::{alpha, sigma, ProjectiveRectangle};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("the configuration is degenerate (e1 f1 + e2 f2 = 0), so the paths are not related by a homography")]
    DegenerateConfiguration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathKind {
    Slope,
    Aspect,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Slope => "slope",
            PathKind::Aspect => "aspect",
        })
    }
}

/// Which branch defined the auxiliary forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathCase {
    /// `ℰ = 0, ℱ = 1` (or `ℳ = 0, 𝒩 = 1`).
    BothZero,
    /// Non-degenerate: linear auxiliary forms.
    Generic,
    /// Degenerate with constant auxiliary forms.
    Orthogonal,
}

impl fmt::Display for PathCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathCase::BothZero => "both-zero",
            PathCase::Generic => "generic",
            PathCase::Orthogonal => "orthogonal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPolynomials<T> {
    pub kind: PathKind,
    pub case: PathCase,
    /// `ℰ` or `ℳ`.
    pub first: BinaryForm<T>,
    /// `ℱ` or `𝒩`.
    pub second: BinaryForm<T>,
    /// `[X_A, Y_A, X_B, Y_B, X_C, Y_C, X_D, Y_D, X]` (or the `P, Q` analogues).
    pub coords: [BinaryForm<T>; 9],
}

impl<T: Field> PathPolynomials<T> {
    /// The `x`-coordinate form of the vertex on `role`.
    pub fn x(&self, role: Role) -> &BinaryForm<T> {
        &self.coords[2 * role.index()]
    }

    pub fn y(&self, role: Role) -> &BinaryForm<T> {
        &self.coords[2 * role.index() + 1]
    }

    /// The scale form `X` (or `P`).
    pub fn scale(&self) -> &BinaryForm<T> {
        &self.coords[8]
    }

    pub fn eval(&self, r: &Ratio<T>) -> ProjectiveRectangle<T> {
        let (s, t) = r.parts();
        let coords = std::array::from_fn(|i| self.coords[i].eval(&s, &t));
        ProjectiveRectangle::new(coords).expect("the coordinate forms have no common zero")
    }

    /// The ratio of the other kind carried by `π(r)` or `φ(r)`: the aspect
    /// `m_CD ℰ/ℱ` on the slope path, the slope `ℳ/𝒩` on the aspect path.
    pub fn companion_ratio(&self, cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> Ratio<T> {
        let (a, b) = (self.first.eval_ratio(r), self.second.eval_ratio(r));
        let a = match self.kind {
            PathKind::Slope => cfg.md(Role::C, Role::D) * a,
            PathKind::Aspect => a,
        };
        Ratio::new(a, b).expect("ℰ, ℱ (ℳ, 𝒩) have no common zero")
    }

    pub fn max_degree(&self) -> usize {
        self.coords.iter().map(|f| f.degree()).max().unwrap_or(0)
    }

    /// The path sends every ratio to a rectangle at infinity.
    pub fn is_at_infinity(&self) -> bool {
        self.scale().is_zero()
    }
}

fn lin<T: Field>(a: T, b: T) -> BinaryForm<T> {
    BinaryForm::linear(a, b)
}

fn konst<T: Field>(c: T) -> BinaryForm<T> {
    BinaryForm::constant(c)
}

fn fill_y<T: Field>(cfg: &NormalizedConfig<T>, xs: [BinaryForm<T>; 4], scale: BinaryForm<T>) -> [BinaryForm<T>; 9] {
    let [xa, xb, xc, xd] = xs;
    let y = |role: Role, x: &BinaryForm<T>| x.scale(cfg.slope(role)) + scale.scale(&cfg.intercept(role));
    [
        xa.clone(),
        y(Role::A, &xa),
        xb.clone(),
        y(Role::B, &xb),
        xc.clone(),
        y(Role::C, &xc),
        xd.clone(),
        y(Role::D, &xd),
        scale.clone(),
    ]
}

/// `π`: slope `S/T` ↦ a rectangle with that slope.
pub fn slope_path_polys<T: Field>(cfg: &NormalizedConfig<T>) -> PathPolynomials<T> {
    use Role::*;
    let (e1, e2, f1, f2) = (cfg.e1.clone(), cfg.e2.clone(), cfg.f1.clone(), cfg.f2.clone());
    let (case, ee, ff) = if e1.is_zero() && e2.is_zero() {
        (PathCase::BothZero, konst(T::zero()), konst(T::one()))
    } else if !cfg.is_degenerate() {
        (PathCase::Generic, lin(e1, e2), lin(f2, -f1))
    } else {
        let c = if !e1.is_zero() { f2 / e1 } else { -f1 / e2 };
        (PathCase::Orthogonal, konst(T::one()), konst(c))
    };
    let one = T::one();
    let s = || BinaryForm::<T>::s();
    // m_L T - S
    let lt_s = |m: &T| lin(-one.clone(), m.clone());
    let xa = lt_s(&cfg.m_c) * ee.clone() + s() * ff.clone();
    let xb = lt_s(&cfg.m_d) * ee.clone() + s() * ff.clone();
    let xc = lt_s(&cfg.m_d) * ee.clone();
    let xd = lt_s(&cfg.m_c) * ee.clone();
    let x = (lin(one.clone(), -cfg.m_d.clone()) * ee.clone()).scale(&cfg.md(B, C))
        - lin(cfg.m_b.clone(), one.clone()) * ff.clone();
    let coords = fill_y(cfg, [xa, xb, xc, xd], x);
    PathPolynomials { kind: PathKind::Slope, case, first: ee, second: ff, coords }
}

/// `φ`: aspect ratio `U/V` ↦ a rectangle with that aspect ratio.
pub fn aspect_path_polys<T: Field>(cfg: &NormalizedConfig<T>) -> PathPolynomials<T> {
    use Role::*;
    let (e1, e2, f1, f2) = (cfg.e1.clone(), cfg.e2.clone(), cfg.f1.clone(), cfg.f2.clone());
    let cd = cfg.md(C, D);
    let (case, mm, nn) = if f1.is_zero() && e2.is_zero() {
        (PathCase::BothZero, konst(T::zero()), konst(T::one()))
    } else if !cfg.is_degenerate() {
        (
            PathCase::Generic,
            lin(f1 / cd.clone(), e2),
            lin(f2 / cd.clone(), -e1),
        )
    } else {
        let c = if !e2.is_zero() { -e1 / e2 } else { f2 / f1 };
        (PathCase::Orthogonal, konst(T::one()), konst(c))
    };
    let one = T::one;
    let u = || BinaryForm::<T>::s();
    // U - m_CD V
    let u_cd = lin(one(), -cd.clone());
    let pa = u_cd.clone() * mm.clone() - (u() * nn.clone()).scale(&cfg.m_c);
    let pb = u_cd * mm.clone() - (u() * nn.clone()).scale(&cfg.m_d);
    let pc = u() * mm.clone() - (u() * nn.clone()).scale(&cfg.m_d);
    let pd = u() * mm.clone() - (u() * nn.clone()).scale(&cfg.m_c);
    let bc = cfg.md(B, C);
    let p = lin(-bc.clone(), cd.clone() * cfg.m_b.clone()) * mm.clone()
        + lin(bc * cfg.m_d.clone(), cd) * nn.clone();
    let coords = fill_y(cfg, [pa, pb, pc, pd], p);
    PathPolynomials { kind: PathKind::Aspect, case, first: mm, second: nn, coords }
}

pub fn path_polys<T: Field>(cfg: &NormalizedConfig<T>, kind: PathKind) -> PathPolynomials<T> {
    match kind {
        PathKind::Slope => slope_path_polys(cfg),
        PathKind::Aspect => aspect_path_polys(cfg),
    }
}

pub fn slope_path_eval<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> ProjectiveRectangle<T> {
    slope_path_polys(cfg).eval(r)
}

pub fn aspect_path_eval<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> ProjectiveRectangle<T> {
    aspect_path_polys(cfg).eval(r)
}

/// Where a path rectangle sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathPoint<T> {
    /// Affine vertices on `A, B, C, D`.
    FourPoints([(T, T); 4]),
    AtInfinity(ProjectiveRectangle<T>),
}

/// The affine rectangle `π(r)` when `X(s, t) != 0`.
pub fn affine_vertices_for_slope<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> PathPoint<T> {
    to_path_point(cfg, slope_path_eval(cfg, r))
}

pub fn affine_vertices_for_aspect<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> PathPoint<T> {
    to_path_point(cfg, aspect_path_eval(cfg, r))
}

fn to_path_point<T: Field>(cfg: &NormalizedConfig<T>, p: ProjectiveRectangle<T>) -> PathPoint<T> {
    match p.affine_vertices() {
        Some(v) => {
            for (role, (x, y)) in Role::ALL.iter().zip(&v) {
                assert!(cfg.line(*role).contains(x, y), "vertex off line {role}");
            }
            PathPoint::FourPoints(v)
        }
        None => PathPoint::AtInfinity(p),
    }
}

/// `Ψ(s/t) = m_CD ℰ(s,t)/ℱ(s,t)` and its inverse `Φ(u/v) = ℳ(u,v)/𝒩(u,v)`,
/// as 2×2 matrices acting on `(s, t)` and `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathHomography<T> {
    pub psi: [[T; 2]; 2],
    pub phi: [[T; 2]; 2],
}

fn apply<T: Field>(m: &[[T; 2]; 2], r: &Ratio<T>) -> Ratio<T> {
    let (s, t) = r.parts();
    Ratio::new(
        m[0][0].clone() * s.clone() + m[0][1].clone() * t.clone(),
        m[1][0].clone() * s + m[1][1].clone() * t,
    )
    .expect("invertible matrix")
}

impl<T: Field> PathHomography<T> {
    /// Slope ↦ aspect ratio of `π(slope)`.
    pub fn psi(&self, r: &Ratio<T>) -> Ratio<T> {
        apply(&self.psi, r)
    }

    /// Aspect ratio ↦ slope of `φ(aspect)`.
    pub fn phi(&self, r: &Ratio<T>) -> Ratio<T> {
        apply(&self.phi, r)
    }
}

pub fn homography<T: Field>(cfg: &NormalizedConfig<T>) -> Result<PathHomography<T>, PathError> {
    if cfg.is_degenerate() {
        return Err(PathError::DegenerateConfiguration);
    }
    let cd = cfg.md(Role::C, Role::D);
    let (e1, e2, f1, f2) = (cfg.e1.clone(), cfg.e2.clone(), cfg.f1.clone(), cfg.f2.clone());
    Ok(PathHomography {
        psi: [[cd.clone() * e1.clone(), cd.clone() * e2.clone()], [f2.clone(), -f1.clone()]],
        phi: [[f1 / cd.clone(), e2], [f2 / cd, -e1]],
    })
}

/// Outcome of the polynomial identity checks for one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// `(S^2 + T^2) σ` equals the difference of the two quartic products.
    pub factorization: bool,
    /// The four slope-side side identities.
    pub slope_sides: bool,
    /// The four aspect-side side identities.
    pub aspect_sides: bool,
    /// `X_A + X_C = X_B + X_D` and the `Y`, `P`, `Q` analogues.
    pub parallelogram: bool,
    /// `(X_A - X_B)(X_B - X_C) = -(Y_A - Y_B)(Y_B - Y_C)` and the aspect analogue.
    pub rectangle: bool,
    /// `X | σ` and `P | m_CD α`.
    pub divisibility: bool,
    /// Equality up to a nonzero scalar holds exactly when non-degenerate.
    pub equality_iff_nondegenerate: bool,
    /// The nine forms of each path have no common zero.
    pub well_defined: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.factorization
            && self.slope_sides
            && self.aspect_sides
            && self.parallelogram
            && self.rectangle
            && self.divisibility
            && self.equality_iff_nondegenerate
            && self.well_defined
    }
}

/// Checks every coefficientwise identity relating `σ`, `α` and the two paths.
pub fn check_identities<T: Field>(cfg: &NormalizedConfig<T>) -> IdentityReport {
    use Role::*;
    let pi = slope_path_polys(cfg);
    let phi = aspect_path_polys(cfg);
    let sig = sigma(cfg);
    let cd = cfg.md(C, D);
    let dc = cfg.md(D, C);
    let alpha_cd = alpha(cfg).scale(&cd);
    let (s, t) = (BinaryForm::<T>::s(), BinaryForm::<T>::t());

    let one = T::one();
    let m = |r: Role| cfg.slope(r).clone();
    // T + m S and S - m T
    let tp = |r: Role| BinaryForm::linear(m(r), one.clone());
    let sm = |r: Role| BinaryForm::linear(one.clone(), -m(r));
    let lhs = (s.clone() * s.clone() + t.clone() * t.clone()) * sig.clone();
    let rhs = tp(A) * sm(B) * tp(C) * sm(D) - sm(A) * tp(B) * sm(C) * tp(D);
    let factorization = lhs == rhs;

    let (ee, ff) = (&pi.first, &pi.second);
    let slope_sides = pi.y(A).clone() - pi.y(B).clone() == (s.clone() * ee.clone()).scale(&cd)
        && pi.x(A).clone() - pi.x(B).clone() == (t.clone() * ee.clone()).scale(&cd)
        && pi.y(B).clone() - pi.y(C).clone() == -(t.clone() * ff.clone())
        && pi.x(B).clone() - pi.x(C).clone() == s.clone() * ff.clone();

    let (mm, nn) = (&phi.first, &phi.second);
    let (u, v) = (s.clone(), t.clone());
    let aspect_sides = phi.x(A).clone() - phi.x(B).clone() == (u.clone() * nn.clone()).scale(&dc)
        && phi.y(A).clone() - phi.y(B).clone() == (u.clone() * mm.clone()).scale(&dc)
        && phi.y(B).clone() - phi.y(C).clone() == (v.clone() * nn.clone()).scale(&cd)
        && phi.x(B).clone() - phi.x(C).clone() == (v.clone() * mm.clone()).scale(&dc);

    let closes = |p: &PathPolynomials<T>| {
        p.x(A).clone() + p.x(C).clone() == p.x(B).clone() + p.x(D).clone()
            && p.y(A).clone() + p.y(C).clone() == p.y(B).clone() + p.y(D).clone()
    };
    let parallelogram = closes(&pi) && closes(&phi);

    let right_angle = |p: &PathPolynomials<T>| {
        (p.x(A).clone() - p.x(B).clone()) * (p.x(B).clone() - p.x(C).clone())
            == -((p.y(A).clone() - p.y(B).clone()) * (p.y(B).clone() - p.y(C).clone()))
    };
    let rectangle = right_angle(&pi) && right_angle(&phi);

    let divisibility = pi.scale().divides(&sig) && phi.scale().divides(&alpha_cd);

    let generic = !cfg.is_degenerate();
    let equality_iff_nondegenerate = pi.scale().is_associate_of(&sig) == generic
        && phi.scale().is_associate_of(&alpha_cd) == generic
        && (!generic || (*pi.scale() == sig && *phi.scale() == alpha(cfg)));

    let well_defined =
        !BinaryForm::have_common_zero(&pi.coords) && !BinaryForm::have_common_zero(&phi.coords);

    IdentityReport {
        factorization,
        slope_sides,
        aspect_sides,
        parallelogram,
        rectangle,
        divisibility,
        equality_iff_nondegenerate,
        well_defined,
    }
}
