//! Points of `PC`, the parallelogram plane, the rectangle quadric, and the
//! slope and aspect ratio of a rectangle.
//!
//! A point of `PC` is `[x_A : y_A : x_B : y_B : x_C : y_C : x_D : y_D : w]`
//! with `y_L = m_L x_L + b_L w`. Parallelograms form the plane parameterized
//! by `(x_A : x_B : w)`; rectangles are the zeros of a quadric `h` on it.

use std::fmt;

use crate::configuration::{NormalizedConfig, PlaneMap, Role};
use crate::form::BinaryForm;
use crate::linalg::{det2, kernel2, nullspace};
use crate::quadratic::{binary_quadratic_roots, ProjectiveRoots};
use crate::ratio::{Measure, Ratio};
use crate::scalar::Field;

/// A nonzero point of `P^8`, scaled so its last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveRectangle<T> {
    coords: [T; 9],
}

impl<T: Field> ProjectiveRectangle<T> {
    pub fn new(coords: [T; 9]) -> Option<Self> {
        let last = coords.iter().rposition(|c| !c.is_zero())?;
        let inv = coords[last].inverse().expect("nonzero");
        Some(ProjectiveRectangle { coords: coords.map(|c| c * inv.clone()) })
    }

    /// From affine vertices `A, B, C, D` (`w = 1`).
    pub fn from_affine(v: [(T, T); 4]) -> Self {
        let [a, b, c, d] = v;
        Self::new([a.0, a.1, b.0, b.1, c.0, c.1, d.0, d.1, T::one()]).expect("w = 1")
    }

    pub fn coords(&self) -> &[T; 9] {
        &self.coords
    }

    pub fn w(&self) -> &T {
        &self.coords[8]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.w().is_zero()
    }

    /// Homogeneous `(x, y)` of the vertex on `role`.
    pub fn vertex(&self, role: Role) -> (T, T) {
        let i = 2 * role.index();
        (self.coords[i].clone(), self.coords[i + 1].clone())
    }

    pub fn affine_vertices(&self) -> Option<[(T, T); 4]> {
        let w = self.w().inverse()?;
        Some(Role::ALL.map(|r| {
            let (x, y) = self.vertex(r);
            (x * w.clone(), y * w.clone())
        }))
    }

    /// Membership in `PC`: each vertex on its (scaled) line.
    pub fn lies_in(&self, cfg: &NormalizedConfig<T>) -> bool {
        Role::ALL.iter().all(|&r| {
            let (x, y) = self.vertex(r);
            y == cfg.slope(r).clone() * x + cfg.intercept(r) * self.w().clone()
        })
    }

    pub fn is_parallelogram(&self) -> bool {
        let c = &self.coords;
        c[0].clone() - c[2].clone() == c[6].clone() - c[4].clone()
            && c[1].clone() - c[3].clone() == c[7].clone() - c[5].clone()
    }

    /// The orthogonality form `(x_C - x_B)(x_B - x_A) + (y_C - y_B)(y_B - y_A)`.
    pub fn orthogonality(&self) -> T {
        let (a, b, c) = (self.vertex(Role::A), self.vertex(Role::B), self.vertex(Role::C));
        (c.0 - b.0.clone()) * (b.0 - a.0) + (c.1 - b.1.clone()) * (b.1 - a.1)
    }

    pub fn is_rectangle(&self) -> bool {
        self.is_parallelogram() && self.orthogonality().is_zero()
    }

    fn slope_matrix(&self) -> [[T; 2]; 2] {
        let (a, b, c) = (self.vertex(Role::A), self.vertex(Role::B), self.vertex(Role::C));
        [
            [b.0.clone() - a.0, -(b.1.clone() - a.1)],
            [c.1 - b.1, c.0 - b.0],
        ]
    }

    fn aspect_matrix(&self) -> [[T; 2]; 2] {
        let (a, b, c) = (self.vertex(Role::A), self.vertex(Role::B), self.vertex(Role::C));
        [
            [b.0.clone() - c.0, -(a.1.clone() - b.1.clone())],
            [b.1 - c.1, a.0 - b.0],
        ]
    }

    /// Slope `s/t` with `(x_B - x_A) s = (y_B - y_A) t` and
    /// `(y_C - y_B) s + (x_C - x_B) t = 0`. `None` if no ratio solves both,
    /// which happens exactly when the point is not a rectangle.
    pub fn slope_of(&self) -> Option<Measure<T>> {
        measure_from(&self.slope_matrix())
    }

    /// Aspect ratio `u/v` with `(x_B - x_C) u = (y_A - y_B) v` and
    /// `(y_B - y_C) u + (x_A - x_B) v = 0`.
    pub fn aspect_of(&self) -> Option<Measure<T>> {
        measure_from(&self.aspect_matrix())
    }

    pub fn has_slope(&self, r: &Ratio<T>) -> bool {
        annihilates(&self.slope_matrix(), r)
    }

    pub fn has_aspect(&self, r: &Ratio<T>) -> bool {
        annihilates(&self.aspect_matrix(), r)
    }

    /// The same rectangle in the input frame and labeling of `map`, vertices
    /// ordered as the input pairs: first of pair one, first of pair two,
    /// second of pair one, second of pair two.
    pub fn to_input_frame(&self, map: &PlaneMap<T>) -> Self {
        // Flat input index [A, C, B, D] ↦ position in the output.
        const POSITION: [usize; 4] = [0, 2, 1, 3];
        let assignment = map.labeling.assignment();
        let w = self.w().clone();
        let mut coords: [T; 9] = std::array::from_fn(|_| T::zero());
        for role in Role::ALL {
            let (x, y) = self.vertex(role);
            let (x, y) = map.invert_projective(&x, &y, &w);
            let pos = POSITION[assignment[role.index()]];
            coords[2 * pos] = x;
            coords[2 * pos + 1] = y;
        }
        coords[8] = w;
        Self::new(coords).expect("invertible map")
    }
}

fn measure_from<T: Field>(m: &[[T; 2]; 2]) -> Option<Measure<T>> {
    match kernel2(m)? {
        None => Some(Measure::Indeterminate),
        Some([s, t]) => Some(Measure::Ratio(Ratio::new(s, t).expect("nonzero kernel vector"))),
    }
}

fn annihilates<T: Field>(m: &[[T; 2]; 2], r: &Ratio<T>) -> bool {
    let (s, t) = r.parts();
    m.iter().all(|row| (row[0].clone() * s.clone() + row[1].clone() * t.clone()).is_zero())
}

impl<T: Field> fmt::Display for ProjectiveRectangle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c.fraction_string())?;
        }
        write!(f, "]")
    }
}

/// Completes `(x_A : x_B : w)` to the parallelogram of `PC` it determines.
pub fn complete_parallelogram<T: Field>(cfg: &NormalizedConfig<T>, x_a: &T, x_b: &T, w: &T) -> ProjectiveRectangle<T> {
    let [xa, xb, xc, xd] = parallelogram_xs(cfg, x_a, x_b, w);
    let y = |role: Role, x: &T| cfg.slope(role).clone() * x.clone() + cfg.intercept(role) * w.clone();
    ProjectiveRectangle::new([
        xa.clone(),
        y(Role::A, &xa),
        xb.clone(),
        y(Role::B, &xb),
        xc.clone(),
        y(Role::C, &xc),
        xd.clone(),
        y(Role::D, &xd),
        w.clone(),
    ])
    .expect("(x_A, x_B, w) != 0 gives a nonzero point")
}

fn parallelogram_xs<T: Field>(cfg: &NormalizedConfig<T>, x_a: &T, x_b: &T, w: &T) -> [T; 4] {
    use Role::*;
    let x_c = (cfg.md(A, D) * x_a.clone() + cfg.md(D, B) * x_b.clone() + cfg.e2.clone() * w.clone()) / cfg.md(D, C);
    let x_d = x_a.clone() - x_b.clone() + x_c.clone();
    [x_a.clone(), x_b.clone(), x_c, x_d]
}

/// A linear form `c0 X_A + c1 X_B + c2 X`.
type Linear3<T> = [T; 3];

/// The quadric `h(X_A, X_B, X)` cutting the rectangles out of the
/// parallelogram plane. Coefficients in the order
/// `X_A^2, X_A X_B, X_A X, X_B^2, X_B X, X^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricH<T> {
    pub coeffs: [T; 6],
}

impl<T: Field> QuadricH<T> {
    pub fn eval(&self, x_a: &T, x_b: &T, w: &T) -> T {
        let v = [x_a, x_b, w];
        let mut acc = T::zero();
        let mut k = 0;
        for i in 0..3 {
            for j in i..3 {
                acc = acc + self.coeffs[k].clone() * v[i].clone() * v[j].clone();
                k += 1;
            }
        }
        acc
    }

    /// `h(X_A, X_B, 0)` as a binary form in `(X_A, X_B)`.
    pub fn at_infinity(&self) -> BinaryForm<T> {
        BinaryForm::new(vec![self.coeffs[0].clone(), self.coeffs[1].clone(), self.coeffs[3].clone()])
    }
}

pub fn quadric_h<T: Field>(cfg: &NormalizedConfig<T>) -> QuadricH<T> {
    use Role::*;
    let zero = T::zero;
    let one = T::one;
    // x_C as a linear form.
    let inv = cfg.md(D, C).inverse().expect("m_C != m_D");
    let xa: Linear3<T> = [one(), zero(), zero()];
    let xb: Linear3<T> = [zero(), one(), zero()];
    let xc: Linear3<T> = [cfg.md(A, D) * inv.clone(), cfg.md(D, B) * inv.clone(), cfg.e2.clone() * inv];
    let y = |role: Role, x: &Linear3<T>| -> Linear3<T> {
        [
            cfg.slope(role).clone() * x[0].clone(),
            cfg.slope(role).clone() * x[1].clone(),
            cfg.slope(role).clone() * x[2].clone() + cfg.intercept(role),
        ]
    };
    let (ya, yb, yc) = (y(A, &xa), y(B, &xb), y(C, &xc));
    let sub = |p: &Linear3<T>, q: &Linear3<T>| -> Linear3<T> { std::array::from_fn(|i| p[i].clone() - q[i].clone()) };
    let mut coeffs: [T; 6] = std::array::from_fn(|_| T::zero());
    for (p, q) in [(sub(&yb, &ya), sub(&yc, &yb)), (sub(&xb, &xa), sub(&xc, &xb))] {
        let mut k = 0;
        for i in 0..3 {
            for j in i..3 {
                let term = if i == j {
                    p[i].clone() * q[i].clone()
                } else {
                    p[i].clone() * q[j].clone() + p[j].clone() * q[i].clone()
                };
                coeffs[k] = coeffs[k].clone() + term;
                k += 1;
            }
        }
    }
    QuadricH { coeffs }
}

/// `β = (m_A m_C + 1)(m_B + m_D) - (m_B m_D + 1)(m_A + m_C)`.
pub fn beta<T: Field>(cfg: &NormalizedConfig<T>) -> T {
    let one = T::one();
    (cfg.m_a.clone() * cfg.m_c.clone() + one.clone()) * (cfg.m_b.clone() + cfg.m_d.clone())
        - (cfg.m_b.clone() * cfg.m_d.clone() + one) * (cfg.m_a.clone() + cfg.m_c.clone())
}

/// `γ = (m_A m_C - 1)(m_B + m_D) - (m_B m_D - 1)(m_A + m_C)`.
pub fn gamma<T: Field>(cfg: &NormalizedConfig<T>) -> T {
    let one = T::one();
    (cfg.m_a.clone() * cfg.m_c.clone() - one.clone()) * (cfg.m_b.clone() + cfg.m_d.clone())
        - (cfg.m_b.clone() * cfg.m_d.clone() - one) * (cfg.m_a.clone() + cfg.m_c.clone())
}

/// `σ(S, T) = k S^2 - β S T - k T^2` with `k = m_A m_C - m_B m_D`.
pub fn sigma<T: Field>(cfg: &NormalizedConfig<T>) -> BinaryForm<T> {
    let k = cfg.m_a.clone() * cfg.m_c.clone() - cfg.m_b.clone() * cfg.m_d.clone();
    BinaryForm::new(vec![k.clone(), -beta(cfg), -k])
}

/// `α(U, V) = m_BC m_AD U^2 - γ U V + m_AB m_CD V^2`.
pub fn alpha<T: Field>(cfg: &NormalizedConfig<T>) -> BinaryForm<T> {
    use Role::*;
    BinaryForm::new(vec![
        cfg.md(B, C) * cfg.md(A, D),
        -gamma(cfg),
        cfg.md(A, B) * cfg.md(C, D),
    ])
}

/// Slopes of rectangles at infinity: the zeros of `σ`.
pub fn slopes_at_infinity<T: Field>(cfg: &NormalizedConfig<T>) -> ProjectiveRoots<T> {
    let c = sigma(cfg).coeffs().to_vec();
    binary_quadratic_roots(&c[0], &c[1], &c[2])
}

/// Aspect ratios of rectangles at infinity: the zeros of `α`.
pub fn aspects_at_infinity<T: Field>(cfg: &NormalizedConfig<T>) -> ProjectiveRoots<T> {
    let c = alpha(cfg).coeffs().to_vec();
    binary_quadratic_roots(&c[0], &c[1], &c[2])
}

/// A linear system `M (x_A, x_B) = w U` whose solutions are the rectangles
/// with a prescribed slope or aspect ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSystem<T> {
    pub m: [[T; 2]; 2],
    pub u: [T; 2],
}

impl<T: Field> RatioSystem<T> {
    pub fn det(&self) -> T {
        det2(&self.m)
    }
}

/// The system for slope `s/t`; its determinant is `σ(s, t)`.
pub fn slope_system<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> RatioSystem<T> {
    use Role::*;
    let (s, t) = r.parts();
    let cs_t = cfg.m_c.clone() * s.clone() + t.clone();
    let ds_t = cfg.m_d.clone() * s.clone() + t.clone();
    RatioSystem {
        m: [
            [s.clone() - cfg.m_a.clone() * t.clone(), cfg.m_b.clone() * t.clone() - s],
            [cfg.md(A, D) * cs_t.clone(), cfg.md(C, B) * ds_t.clone()],
        ],
        u: [cfg.e2.clone() * t, ds_t - cfg.b_a.clone() * cs_t],
    }
}

/// The system for aspect ratio `u/v`; its determinant is `m_CD α(u, v)`.
/// The right-hand side is `((b_A - 1)(u - m_CD v), (b_A m_C - m_D) u)`.
pub fn aspect_system<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>) -> RatioSystem<T> {
    use Role::*;
    let (u, v) = r.parts();
    let (cd, dc) = (cfg.md(C, D), cfg.md(D, C));
    let (da, bc) = (cfg.md(D, A), cfg.md(B, C));
    RatioSystem {
        m: [
            [
                da.clone() * u.clone() + cfg.m_a.clone() * cd.clone() * v.clone(),
                bc.clone() * u.clone() + cfg.m_b.clone() * dc.clone() * v.clone(),
            ],
            [
                cfg.m_c.clone() * da * u.clone() + dc * v.clone(),
                cfg.m_d.clone() * bc * u.clone() + cd.clone() * v.clone(),
            ],
        ],
        u: [
            cfg.e2.clone() * (u.clone() - v * cd),
            (cfg.b_a.clone() * cfg.m_c.clone() - cfg.m_d.clone()) * u,
        ],
    }
}

/// The rectangles of `PC` with a given ratio, as a projective subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RectangleSet<T> {
    /// Finitely many rectangles (possibly none).
    Points(Vec<ProjectiveRectangle<T>>),
    /// Every point of the projective span of these rectangles qualifies.
    Span(Vec<ProjectiveRectangle<T>>),
}

impl<T: Field> RectangleSet<T> {
    pub fn is_empty(&self) -> bool {
        matches!(self, RectangleSet::Points(p) if p.is_empty())
    }

    /// The listed rectangles (for a span, its spanning set).
    pub fn generators(&self) -> &[ProjectiveRectangle<T>] {
        match self {
            RectangleSet::Points(p) | RectangleSet::Span(p) => p,
        }
    }
}

/// Every rectangle of `PC` whose parameters solve `system`, affine or not,
/// as the basis of the solution space of `M x - w U = 0`.
pub fn solution_space<T: Field>(cfg: &NormalizedConfig<T>, system: &RatioSystem<T>) -> Vec<ProjectiveRectangle<T>> {
    let rows: Vec<Vec<T>> = (0..2)
        .map(|i| vec![system.m[i][0].clone(), system.m[i][1].clone(), -system.u[i].clone()])
        .collect();
    nullspace(&rows, 3)
        .into_iter()
        .map(|v| complete_parallelogram(cfg, &v[0], &v[1], &v[2]))
        .collect()
}

fn solve_at_scale<T: Field>(cfg: &NormalizedConfig<T>, system: &RatioSystem<T>, w: &T) -> RectangleSet<T> {
    use crate::linalg::{solve2, Solution2};
    let rhs = [system.u[0].clone() * w.clone(), system.u[1].clone() * w.clone()];
    let build = |x: &[T; 2], w: &T| complete_parallelogram(cfg, &x[0], &x[1], w);
    let zero = T::zero();
    if w.is_zero() {
        return match kernel2(&system.m) {
            None => RectangleSet::Points(vec![]),
            Some(Some(k)) => RectangleSet::Points(vec![build(&k, &zero)]),
            Some(None) => RectangleSet::Span(vec![
                build(&[T::one(), T::zero()], &zero),
                build(&[T::zero(), T::one()], &zero),
            ]),
        };
    }
    match solve2(&system.m, &rhs) {
        Solution2::Inconsistent => RectangleSet::Points(vec![]),
        Solution2::Unique(x) => RectangleSet::Points(vec![build(&x, w)]),
        Solution2::Line { point, direction } => RectangleSet::Span(vec![build(&point, w), build(&direction, &zero)]),
        Solution2::Everything => RectangleSet::Span(vec![
            build(&[T::zero(), T::zero()], w),
            build(&[T::one(), T::zero()], &zero),
            build(&[T::zero(), T::one()], &zero),
        ]),
    }
}

/// Rectangles of slope `r` in the copy of the configuration scaled by `w`.
///
/// For `w != 0` a span always contains one point at infinity; its affine
/// points are the rectangles of this slope.
pub fn rectangle_from_slope<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>, w: &T) -> RectangleSet<T> {
    solve_at_scale(cfg, &slope_system(cfg, r), w)
}

/// Rectangles of aspect ratio `r` in the copy scaled by `w`.
pub fn rectangle_from_aspect<T: Field>(cfg: &NormalizedConfig<T>, r: &Ratio<T>, w: &T) -> RectangleSet<T> {
    solve_at_scale(cfg, &aspect_system(cfg, r), w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Fp;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;
    type Cfg = NormalizedConfig<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn ratio(n: i64, d: i64) -> Ratio<Q> {
        Ratio::from_ints(n, d).unwrap()
    }

    fn cfg1() -> Cfg {
        Cfg::from_ints(2, 3, 0, 1, 1).unwrap()
    }

    fn worked() -> ProjectiveRectangle<Q> {
        ProjectiveRectangle::from_affine([
            (qr(-1, 3), qr(1, 3)),
            (qr(-1, 3), q(0)),
            (qr(1, 3), q(0)),
            (qr(1, 3), qr(1, 3)),
        ])
    }

    #[test]
    fn canonical_scaling() {
        let p = ProjectiveRectangle::new([1, -1, 1, 0, -1, 0, -1, -1, -3].map(q)).unwrap();
        assert_eq!(p, worked());
        assert_eq!(p.w(), &q(1));
        let p = ProjectiveRectangle::new([1, 2, 1, 3, -1, 0, -1, -1, 0].map(q)).unwrap();
        assert_eq!(p.coords()[7], q(1));
        assert!(ProjectiveRectangle::new([0; 9].map(q)).is_none());
    }

    #[test]
    fn parallelogram_completion() {
        let c = cfg1();
        let p = complete_parallelogram(&c, &q(0), &q(0), &q(1));
        assert_eq!(p.affine_vertices().unwrap(), [(q(0), q(1)), (q(0), q(1)), (q(0), q(0)), (q(0), q(0))]);
        let p = complete_parallelogram(&c, &q(1), &q(1), &q(0));
        assert_eq!(p, ProjectiveRectangle::new([1, 2, 1, 3, -1, 0, -1, -1, 0].map(q)).unwrap());
        for (a, b, w) in [(1, 1, 0), (3, -2, 5), (0, 7, 1), (2, 2, 0)] {
            let p = complete_parallelogram(&c, &q(a), &q(b), &q(w));
            assert!(p.is_parallelogram() && p.lies_in(&c));
        }
    }

    #[test]
    fn rectangle_predicate() {
        let c = cfg1();
        assert!(worked().lies_in(&c) && worked().is_rectangle());
        let h = quadric_h(&c);
        let p = complete_parallelogram(&c, &q(1), &q(0), &q(1));
        assert_eq!(p.is_rectangle(), h.eval(&q(1), &q(0), &q(1)).is_zero());
        assert!(h.eval(&q(-1), &q(-1), &q(3)).is_zero());
        // Point pair at p_AB and p_CD.
        let pair = complete_parallelogram(&c, &q(0), &q(0), &q(1));
        assert!(pair.is_rectangle());
    }

    #[test]
    fn quadric_matches_predicate() {
        for (ma, mb, mc, md, ba) in [(2, 3, 0, 1, 1), (-4, -1, 0, 2, 3), (1, 0, 0, 1, 1), (5, -2, 7, 3, -4)] {
            let c = Cfg::from_ints(ma, mb, mc, md, ba).unwrap();
            let h = quadric_h(&c);
            for a in -3..=3 {
                for b in -3..=3 {
                    for w in [0, 1, 2] {
                        if (a, b, w) == (0, 0, 0) {
                            continue;
                        }
                        let p = complete_parallelogram(&c, &q(a), &q(b), &q(w));
                        assert_eq!(h.eval(&q(a), &q(b), &q(w)).is_zero(), p.is_rectangle());
                    }
                }
            }
        }
    }

    #[test]
    fn quadric_at_infinity_twin_pairs() {
        let c = Cfg::from_ints(1, 0, 0, 1, 1).unwrap();
        assert!(quadric_h(&c).at_infinity().is_zero());
    }

    #[test]
    fn quadric_at_infinity_closed_form() {
        // h(X_A, X_B, 0) ∝ m_AD (m_A m_C + 1) X_A^2 - δ X_A X_B + m_BC (m_B m_D + 1) X_B^2.
        let c = cfg1();
        let expected = BinaryForm::new(vec![q(1), q(-10), q(12)]);
        assert!(expected.is_associate_of(&quadric_h(&c).at_infinity()));
    }

    #[test]
    fn worked_measures() {
        assert_eq!(worked().slope_of(), Some(Measure::Ratio(Ratio::infinity())));
        assert_eq!(worked().aspect_of(), Some(Measure::Ratio(ratio(-1, 2))));
        let on_e = complete_parallelogram(&cfg1(), &q(0), &q(0), &q(1));
        assert_eq!(on_e.slope_of(), Some(Measure::Ratio(ratio(0, 1))));
        assert_eq!(on_e.aspect_of(), Some(Measure::Ratio(ratio(0, 1))));
        let square = ProjectiveRectangle::from_affine([(q(0), q(1)), (q(0), q(0)), (q(1), q(0)), (q(1), q(1))]);
        assert_eq!(square.slope_of(), Some(Measure::Ratio(Ratio::infinity())));
        let not_rect = ProjectiveRectangle::from_affine([(q(0), q(1)), (q(0), q(0)), (q(1), q(1)), (q(1), q(2))]);
        assert_eq!(not_rect.slope_of(), None);
        let point = ProjectiveRectangle::from_affine(std::array::from_fn(|_| (q(1), q(1))));
        assert_eq!(point.slope_of(), Some(Measure::Indeterminate));
    }

    #[test]
    fn aspect_on_f() {
        // p_AD = (-1, -1), p_BC = (-1/3, 0) in CFG1.
        let p = ProjectiveRectangle::from_affine([(q(-1), q(-1)), (qr(-1, 3), q(0)), (qr(-1, 3), q(0)), (q(-1), q(-1))]);
        assert!(p.lies_in(&cfg1()) && p.is_rectangle());
        assert_eq!(p.aspect_of(), Some(Measure::Ratio(Ratio::infinity())));
    }

    #[test]
    fn sigma_and_alpha() {
        assert_eq!(sigma(&cfg1()).coeffs(), &[q(-3), q(4), q(3)]);
        assert_eq!(slopes_at_infinity(&cfg1()), ProjectiveRoots::Points(vec![]));
        let twin = Cfg::from_ints(1, 0, 0, 1, 1).unwrap();
        assert!(sigma(&twin).is_zero());
        assert_eq!(slopes_at_infinity(&twin), ProjectiveRoots::Everything);
        // Three parallel lines: α has no square terms.
        let three = Cfg::from_ints(2, 2, 2, 0, 5).unwrap();
        assert_eq!(
            aspects_at_infinity(&three),
            ProjectiveRoots::Points(vec![Ratio::infinity(), ratio(0, 1)])
        );
    }

    #[test]
    fn sigma_over_f13() {
        type F = Fp<13>;
        let c = NormalizedConfig::<F>::from_ints(2, 3, 0, 1, 1).unwrap();
        let roots = slopes_at_infinity(&c);
        let brute: Vec<Ratio<F>> = crate::ratio::sample_ratios::<F>(14)
            .into_iter()
            .filter(|r| sigma(&c).eval_ratio(r).is_zero())
            .collect();
        assert_eq!(roots.points().unwrap(), brute.as_slice());
    }

    #[test]
    fn aspect_roots_pair_up() {
        let c = cfg1();
        use Role::*;
        if let ProjectiveRoots::Points(roots) = aspects_at_infinity(&c) {
            for r in &roots {
                let (u, v) = r.parts();
                let partner = Ratio::new(c.md(A, B) * c.md(C, D) * v, c.md(B, C) * c.md(A, D) * u).unwrap();
                assert!(roots.contains(&partner));
            }
        }
    }

    #[test]
    fn slope_system_worked() {
        let c = cfg1();
        let set = rectangle_from_slope(&c, &Ratio::infinity(), &q(3));
        assert_eq!(set, RectangleSet::Points(vec![worked()]));
        let set = rectangle_from_slope(&c, &ratio(0, 1), &q(1));
        let pair = complete_parallelogram(&c, &q(0), &q(0), &q(1));
        assert_eq!(set, RectangleSet::Points(vec![pair]));
        let set = rectangle_from_aspect(&c, &ratio(-1, 2), &q(5));
        assert_eq!(set, RectangleSet::Points(vec![worked()]));
        let on_e = rectangle_from_aspect(&c, &ratio(0, 1), &q(1));
        assert_eq!(on_e.generators()[0].affine_vertices().unwrap()[0], (q(0), q(1)));
        let on_f = rectangle_from_aspect(&c, &Ratio::infinity(), &q(1));
        assert_eq!(on_f.generators()[0].affine_vertices().unwrap()[1], (qr(-1, 3), q(0)));
    }

    #[test]
    fn twin_pairs_every_slope_at_infinity() {
        let c = Cfg::from_ints(1, 0, 0, 1, 1).unwrap();
        for r in crate::ratio::sample_ratios::<Q>(12) {
            let set = rectangle_from_slope(&c, &r, &q(0));
            assert!(!set.is_empty());
            for p in set.generators() {
                assert!(p.is_at_infinity() && p.is_rectangle() && p.has_slope(&r));
            }
        }
    }

    #[test]
    fn determinants() {
        for (ma, mb, mc, md, ba) in [(2, 3, 0, 1, 1), (-4, -1, 0, 2, 3), (5, -2, 7, 3, -4), (1, 6, -2, -5, 9)] {
            let c = Cfg::from_ints(ma, mb, mc, md, ba).unwrap();
            for r in crate::ratio::sample_ratios::<Q>(15) {
                assert_eq!(slope_system(&c, &r).det(), sigma(&c).eval_ratio(&r));
                assert_eq!(aspect_system(&c, &r).det(), c.md(Role::C, Role::D) * alpha(&c).eval_ratio(&r));
                for set in [rectangle_from_slope(&c, &r, &q(1)), rectangle_from_slope(&c, &r, &q(0))] {
                    for p in set.generators() {
                        assert!(p.lies_in(&c) && p.is_rectangle() && p.has_slope(&r), "{r}: {p}");
                    }
                }
                for set in [rectangle_from_aspect(&c, &r, &q(1)), rectangle_from_aspect(&c, &r, &q(0))] {
                    for p in set.generators() {
                        assert!(p.lies_in(&c) && p.is_rectangle() && p.has_aspect(&r), "{r}: {p}");
                    }
                }
            }
        }
    }
}
