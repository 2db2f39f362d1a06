//! Centers of inscribed rectangles.
//!
//! Taking the center is linear on `PC`, so each path of rectangles maps to a
//! line, a point or (for a non-degenerate configuration) a conic of centers.
//! For a degenerate configuration the aspect-path centers lie on the
//! Gauss-Newton line of the complete quadrilateral and the slope-path
//! centers on a line parallel to the diagonal `G` through `A∩C` and `B∩D`.

use std::fmt;

use thiserror::Error;

use crate::configuration::{ConfigClass, ConfigurationInput, InputLine, NormalizedConfig, Role};
use crate::form::BinaryForm;
use crate::linalg::nullspace;
use crate::paths::{aspect_path_polys, slope_path_polys, PathPolynomials};
use crate::ratio::{sample_ratios, Measure, Ratio};
use crate::rectangle::ProjectiveRectangle;
use crate::scalar::Field;

/// Ratios sampled when fitting a center locus.
pub const LOCUS_SAMPLES: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocusError {
    #[error("the rectangle is at infinity and has no center")]
    AtInfinityRectangle,
    #[error("lines {0} and {1} are parallel, so their intersection is at infinity")]
    ParallelPair(Role, Role),
    #[error("the configuration is not degenerate")]
    NotDegenerate,
    #[error("both pairs are orthogonal (m_A m_C = m_B m_D = -1)")]
    BothPairsOrthogonal,
    #[error("the lines are not all parallel")]
    NotAllParallel,
    #[error("the three diagonal midpoints coincide, so they do not determine a line")]
    CoincidentMidpoints,
    #[error("internal check failed: {0}")]
    Violation(String),
}

type Point<T> = (T, T);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineTag {
    GaussNewton,
    SlopeCenters,
    AspectCenters,
    DiagonalG,
}

impl fmt::Display for LineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineTag::GaussNewton => "gauss-newton",
            LineTag::SlopeCenters => "slope-centers",
            LineTag::AspectCenters => "aspect-centers",
            LineTag::DiagonalG => "diagonal-g",
        })
    }
}

/// `a x + b y = c`, scaled so that `b = 1` when `b != 0` and `a = 1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLine<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub tag: LineTag,
}

impl<T: Field> AffineLine<T> {
    pub fn new(a: T, b: T, c: T, tag: LineTag) -> Option<Self> {
        let k = if !b.is_zero() { b.clone() } else { a.clone() };
        let k = k.inverse()?;
        Some(AffineLine { a: a * k.clone(), b: b * k.clone(), c: c * k, tag })
    }

    /// The line through two distinct points.
    pub fn through(p: &Point<T>, q: &Point<T>, tag: LineTag) -> Option<Self> {
        let a = q.1.clone() - p.1.clone();
        let b = p.0.clone() - q.0.clone();
        let c = a.clone() * p.0.clone() + b.clone() * p.1.clone();
        Self::new(a, b, c, tag)
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.a.clone() * p.0.clone() + self.b.clone() * p.1.clone() == self.c
    }

    pub fn slope(&self) -> Ratio<T> {
        Ratio::new(-self.a.clone(), self.b.clone()).expect("(a, b) != 0")
    }

    /// Same point set, ignoring the tag.
    pub fn same_as(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }

    pub fn intersection(&self, other: &Self) -> Option<Point<T>> {
        let l = |m: &Self| InputLine { a: m.a.clone(), b: m.b.clone(), c: m.c.clone() };
        l(self).intersection(&l(other))
    }

    pub fn with_tag(mut self, tag: LineTag) -> Self {
        self.tag = tag;
        self
    }
}

/// Center of an affine rectangle: the midpoint of its `A` and `C` vertices.
pub fn center_of<T: Field>(p: &ProjectiveRectangle<T>) -> Result<Point<T>, LocusError> {
    if p.is_at_infinity() {
        return Err(LocusError::AtInfinityRectangle);
    }
    let two_w = T::from_i64(2) * p.w().clone();
    let (a, c) = (p.vertex(Role::A), p.vertex(Role::C));
    Ok(((a.0 + c.0) / two_w.clone(), (a.1 + c.1) / two_w))
}

/// The midpoint of the `B` and `D` vertices; equal to [`center_of`] for a parallelogram.
pub fn center_of_bd<T: Field>(p: &ProjectiveRectangle<T>) -> Result<Point<T>, LocusError> {
    if p.is_at_infinity() {
        return Err(LocusError::AtInfinityRectangle);
    }
    let two_w = T::from_i64(2) * p.w().clone();
    let (b, d) = (p.vertex(Role::B), p.vertex(Role::D));
    Ok(((b.0 + d.0) / two_w.clone(), (b.1 + d.1) / two_w))
}

fn meet<T: Field>(cfg: &NormalizedConfig<T>, x: Role, y: Role) -> Result<Point<T>, LocusError> {
    cfg.meet(x, y).ok_or(LocusError::ParallelPair(x, y))
}

fn midpoint<T: Field>(p: &Point<T>, q: &Point<T>) -> Point<T> {
    let two = T::from_i64(2);
    ((p.0.clone() + q.0.clone()) / two.clone(), (p.1.clone() + q.1.clone()) / two)
}

/// The midpoints of the three diagonals `p_AB p_CD`, `p_AD p_BC`, `p_AC p_BD`.
pub fn diagonal_midpoints<T: Field>(cfg: &NormalizedConfig<T>) -> Result<[Point<T>; 3], LocusError> {
    use Role::*;
    Ok([
        midpoint(&meet(cfg, A, B)?, &meet(cfg, C, D)?),
        midpoint(&meet(cfg, A, D)?, &meet(cfg, B, C)?),
        midpoint(&meet(cfg, A, C)?, &meet(cfg, B, D)?),
    ])
}

pub fn gauss_newton_line<T: Field>(cfg: &NormalizedConfig<T>) -> Result<AffineLine<T>, LocusError> {
    let mids = diagonal_midpoints(cfg)?;
    let line = match fit_line(&mids, LineTag::GaussNewton)? {
        CenterImage::Line(l) => l,
        _ => return Err(LocusError::CoincidentMidpoints),
    };
    Ok(line)
}

/// The line through `A∩C` and `B∩D`.
pub fn diagonal_g<T: Field>(cfg: &NormalizedConfig<T>) -> Result<AffineLine<T>, LocusError> {
    use Role::*;
    let (p, q) = (meet(cfg, A, C)?, meet(cfg, B, D)?);
    AffineLine::through(&p, &q, LineTag::DiagonalG).ok_or(LocusError::CoincidentMidpoints)
}

/// The set of centers of the affine rectangles on one path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterImage<T> {
    /// Every rectangle of the path is at infinity.
    Empty,
    Point(Point<T>),
    Line(AffineLine<T>),
    /// `c0 x^2 + c1 x y + c2 y^2 + c3 x + c4 y + c5 = 0`, first nonzero coefficient 1.
    Conic([T; 6]),
    /// Too few points (tiny fields) to pin down a curve; the centers themselves.
    Points(Vec<Point<T>>),
}

impl<T: Field> CenterImage<T> {
    pub fn contains(&self, p: &Point<T>) -> bool {
        match self {
            CenterImage::Empty => false,
            CenterImage::Point(q) => p == q,
            CenterImage::Line(l) => l.contains(p),
            CenterImage::Conic(c) => conic_eval(c, p).is_zero(),
            CenterImage::Points(ps) => ps.contains(p),
        }
    }
}

fn conic_row<T: Field>(p: &Point<T>) -> Vec<T> {
    let (x, y) = p.clone();
    vec![x.square(), x.clone() * y.clone(), y.square(), x, y, T::one()]
}

fn conic_eval<T: Field>(c: &[T; 6], p: &Point<T>) -> T {
    conic_row(p)
        .into_iter()
        .zip(c.iter())
        .fold(T::zero(), |acc, (m, k)| acc + m * k.clone())
}

/// Exact line through the points, or a point if they all coincide.
fn fit_line<T: Field>(points: &[Point<T>], tag: LineTag) -> Result<CenterImage<T>, LocusError> {
    let Some(first) = points.first() else {
        return Ok(CenterImage::Empty);
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return Ok(CenterImage::Point(first.clone()));
    };
    let line = AffineLine::through(first, second, tag).expect("distinct points");
    if let Some(off) = points.iter().find(|p| !line.contains(p)) {
        return Err(LocusError::Violation(format!(
            "center ({}, {}) is off the fitted line",
            off.0.fraction_string(),
            off.1.fraction_string()
        )));
    }
    Ok(CenterImage::Line(line))
}

/// Exact conic (or line, or point) through the points.
fn fit_curve<T: Field>(points: &[Point<T>], tag: LineTag) -> Result<CenterImage<T>, LocusError> {
    if let Ok(image) = fit_line(points, tag) {
        return Ok(image);
    }
    let mut rows = Vec::new();
    for (i, p) in points.iter().enumerate() {
        rows.push(conic_row(p));
        if rows.len() < 5 {
            continue;
        }
        let ns = nullspace(&rows, 6);
        if ns.len() == 1 {
            let v = &ns[0];
            let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero").inverse().expect("nonzero");
            let coeffs: [T; 6] = std::array::from_fn(|k| v[k].clone() * lead.clone());
            if let Some(off) = points[i + 1..].iter().find(|p| !conic_eval(&coeffs, p).is_zero()) {
                return Err(LocusError::Violation(format!(
                    "center ({}, {}) is off the fitted conic",
                    off.0.fraction_string(),
                    off.1.fraction_string()
                )));
            }
            return Ok(CenterImage::Conic(coeffs));
        }
    }
    Ok(CenterImage::Points(points.to_vec()))
}

fn sampled_centers<T: Field>(path: &PathPolynomials<T>, count: usize) -> Result<Vec<Point<T>>, LocusError> {
    let mut out = Vec::new();
    for r in sample_ratios::<T>(count) {
        let p = path.eval(&r);
        if p.is_at_infinity() {
            continue;
        }
        let c = center_of(&p)?;
        if c != center_of_bd(&p)? {
            return Err(LocusError::Violation("A-C and B-D midpoints differ".into()));
        }
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusReport<T> {
    pub class: ConfigClass,
    pub slope_centers: CenterImage<T>,
    pub aspect_centers: CenterImage<T>,
    /// Homogeneous center of `π(S/T)`: `[X_A + X_C : Y_A + Y_C : 2X]`.
    pub center_map: [BinaryForm<T>; 3],
    pub gauss_newton: Option<AffineLine<T>>,
    pub diagonal_g: Option<AffineLine<T>>,
    /// Aspect-path centers lie on the Gauss-Newton line (when both exist).
    pub aspect_on_gauss_newton: Option<bool>,
    /// The slope-path center line is parallel to `G` (when both exist).
    pub slope_parallel_to_g: Option<bool>,
    pub samples: usize,
}

/// Describes the centers of both paths, checked exactly on every sample.
pub fn centers_paths<T: Field>(cfg: &NormalizedConfig<T>) -> Result<LocusReport<T>, LocusError> {
    let class = cfg.classify();
    let pi = slope_path_polys(cfg);
    let phi = aspect_path_polys(cfg);
    let slope_pts = sampled_centers(&pi, LOCUS_SAMPLES)?;
    let aspect_pts = sampled_centers(&phi, LOCUS_SAMPLES)?;
    let (slope_centers, aspect_centers) = if class.degenerate {
        (fit_line(&slope_pts, LineTag::SlopeCenters)?, fit_line(&aspect_pts, LineTag::AspectCenters)?)
    } else {
        (fit_curve(&slope_pts, LineTag::SlopeCenters)?, fit_curve(&aspect_pts, LineTag::AspectCenters)?)
    };

    let gauss_newton = gauss_newton_line(cfg).ok();
    let g = diagonal_g(cfg).ok();
    let (mut aspect_on_gn, mut slope_par_g) = (None, None);
    if class.degenerate {
        if let Some(gn) = &gauss_newton {
            let ok = aspect_pts.iter().all(|p| gn.contains(p));
            if !ok {
                return Err(LocusError::Violation("aspect-path centers leave the Gauss-Newton line".into()));
            }
            aspect_on_gn = Some(ok);
        }
        if let (Some(g), CenterImage::Line(l)) = (&g, &slope_centers) {
            let ok = l.slope() == g.slope();
            if !ok {
                return Err(LocusError::Violation("slope-path center line is not parallel to G".into()));
            }
            slope_par_g = Some(ok);
        }
    }

    let two = T::from_i64(2);
    let center_map = [
        pi.x(Role::A).clone() + pi.x(Role::C).clone(),
        pi.y(Role::A).clone() + pi.y(Role::C).clone(),
        pi.scale().scale(&two),
    ];
    Ok(LocusReport {
        class,
        slope_centers,
        aspect_centers,
        center_map,
        gauss_newton,
        diagonal_g: g,
        aspect_on_gauss_newton: aspect_on_gn,
        slope_parallel_to_g: slope_par_g,
        samples: LOCUS_SAMPLES,
    })
}

/// The distinguished rectangles of a degenerate configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialRectangles<T> {
    /// The rectangle on both paths; its center is where the center lines meet.
    pub center: ProjectiveRectangle<T>,
    pub center_point: Point<T>,
    /// The aspect-path rectangle centered at the centroid of `p_AB, p_BC, p_CD, p_AD`.
    pub centroid: ProjectiveRectangle<T>,
    pub centroid_point: Point<T>,
    /// `π(e1/e2)`, the slope-path rectangle at infinity.
    pub slope_at_infinity: ProjectiveRectangle<T>,
    /// The aspect-path rectangle at infinity.
    pub aspect_at_infinity: ProjectiveRectangle<T>,
    /// `slope_at_infinity` has the aspect of `center` and the orthogonal slope.
    pub slope_at_infinity_ok: bool,
    /// `aspect_at_infinity` has the slope of `centroid` and the negated aspect.
    pub aspect_at_infinity_ok: bool,
}

/// Common projective zero of two forms of degree at most one.
fn common_root<T: Field>(f: &BinaryForm<T>, g: &BinaryForm<T>) -> Option<Ratio<T>> {
    let root = |h: &BinaryForm<T>| -> Option<Ratio<T>> {
        match h.coeffs() {
            [a, b] => Ratio::new(-b.clone(), a.clone()).ok(),
            _ => None,
        }
    };
    let candidate = if f.is_zero() { root(g) } else { root(f) }?;
    (f.eval_ratio(&candidate).is_zero() && g.eval_ratio(&candidate).is_zero()).then_some(candidate)
}

pub fn special_rectangles<T: Field>(cfg: &NormalizedConfig<T>) -> Result<SpecialRectangles<T>, LocusError> {
    use Role::*;
    if !cfg.is_degenerate() {
        return Err(LocusError::NotDegenerate);
    }
    let roles = Role::ALL;
    for i in 0..4 {
        for j in i + 1..4 {
            if cfg.slope(roles[i]) == cfg.slope(roles[j]) {
                return Err(LocusError::ParallelPair(roles[i], roles[j]));
            }
        }
    }
    let minus_one = -T::one();
    if cfg.m_a.clone() * cfg.m_c.clone() == minus_one && cfg.m_b.clone() * cfg.m_d.clone() == minus_one {
        return Err(LocusError::BothPairsOrthogonal);
    }
    let report = centers_paths(cfg)?;
    let (CenterImage::Line(slope_line), CenterImage::Line(aspect_line)) = (&report.slope_centers, &report.aspect_centers)
    else {
        return Err(LocusError::Violation("degenerate centers are not two lines".into()));
    };
    let center_point = slope_line
        .intersection(aspect_line)
        .ok_or_else(|| LocusError::Violation("center lines are parallel".into()))?;

    let pi = slope_path_polys(cfg);
    let phi = aspect_path_polys(cfg);
    let f_slope = cfg.f_slope();
    let center = pi.eval(&f_slope);
    if center_of(&center)? != center_point {
        return Err(LocusError::Violation("center rectangle is not at the meeting point".into()));
    }

    let centroid_point = {
        let pts = [meet(cfg, A, B)?, meet(cfg, B, C)?, meet(cfg, C, D)?, meet(cfg, A, D)?];
        let four = T::from_i64(4);
        let sx = pts.iter().fold(T::zero(), |acc, p| acc + p.0.clone());
        let sy = pts.iter().fold(T::zero(), |acc, p| acc + p.1.clone());
        (sx / four.clone(), sy / four)
    };
    let two = T::from_i64(2);
    let fx = phi.x(A).clone() + phi.x(C).clone() - phi.scale().scale(&(two.clone() * centroid_point.0.clone()));
    let fy = phi.y(A).clone() + phi.y(C).clone() - phi.scale().scale(&(two * centroid_point.1.clone()));
    let centroid_ratio =
        common_root(&fx, &fy).ok_or_else(|| LocusError::Violation("no aspect-path rectangle at the centroid".into()))?;
    let centroid = phi.eval(&centroid_ratio);
    if center_of(&centroid)? != centroid_point {
        return Err(LocusError::Violation("centroid rectangle is not centered at the centroid".into()));
    }

    let e_slope = Ratio::new(cfg.e1.clone(), cfg.e2.clone()).expect("no parallel lines, so A != B");
    let slope_at_infinity = pi.eval(&e_slope);
    let p_zero = match phi.scale().coeffs() {
        [a, b] => Ratio::new(-b.clone(), a.clone()).ok(),
        _ => None,
    }
    .ok_or_else(|| LocusError::Violation("aspect path has no rectangle at infinity".into()))?;
    let aspect_at_infinity = phi.eval(&p_zero);

    let center_aspect = center.aspect_of();
    let slope_at_infinity_ok = slope_at_infinity.is_at_infinity()
        && slope_at_infinity.aspect_of() == center_aspect
        && matches!(center.slope_of(), Some(Measure::Ratio(r)) if slope_at_infinity.has_slope(&r.orthogonal()));
    let aspect_at_infinity_ok = aspect_at_infinity.is_at_infinity()
        && matches!(centroid.slope_of(), Some(Measure::Ratio(r)) if aspect_at_infinity.has_slope(&r))
        && matches!(centroid.aspect_of(), Some(Measure::Ratio(r)) if aspect_at_infinity.has_aspect(&r.negated()));

    Ok(SpecialRectangles {
        center,
        center_point,
        centroid,
        centroid_point,
        slope_at_infinity,
        aspect_at_infinity,
        slope_at_infinity_ok,
        aspect_at_infinity_ok,
    })
}

/// Four parallel lines: rectangles exist iff the pairs share a midline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllParallelReport<T> {
    pub midline_shared: bool,
    /// The common midline, which is then the locus of centers.
    pub midline: Option<InputLine<T>>,
    pub description: String,
}

pub fn all_parallel_analysis<T: Field>(input: &ConfigurationInput<T>) -> Result<AllParallelReport<T>, LocusError> {
    if !input.all_parallel() {
        return Err(LocusError::NotAllParallel);
    }
    let reference = &input.first.0;
    // Rewrite each line with the normal of the reference line.
    let offset = |l: &InputLine<T>| -> T {
        let k = if !reference.a.is_zero() {
            l.a.clone() / reference.a.clone()
        } else {
            l.b.clone() / reference.b.clone()
        };
        l.c.clone() / k
    };
    let two = T::from_i64(2);
    let mid_ac = (offset(&input.first.0) + offset(&input.first.1)) / two.clone();
    let mid_bd = (offset(&input.second.0) + offset(&input.second.1)) / two;
    if mid_ac == mid_bd {
        let midline = InputLine { a: reference.a.clone(), b: reference.b.clone(), c: mid_ac };
        let description = format!(
            "the pairs share the midline {midline}; it is the locus of centers, and the rectangles form a \
             two-parameter family (one for each choice of x_A != x_B)"
        );
        Ok(AllParallelReport { midline_shared: true, midline: Some(midline), description })
    } else {
        Ok(AllParallelReport {
            midline_shared: false,
            midline: None,
            description: "the pairs have different midlines; there are no inscribed rectangles".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Fp;
    use crate::paths::slope_path_eval;
    use num_traits::Zero;
    use num_rational::BigRational;

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

    fn cfg2() -> Cfg {
        Cfg::from_ints(-4, -1, 0, 2, 3).unwrap()
    }

    fn cfg3() -> Cfg {
        Cfg::from_ints(1, 0, 0, 1, 1).unwrap()
    }

    #[test]
    fn centers() {
        let c = cfg1();
        assert_eq!(center_of(&slope_path_eval(&c, &Ratio::infinity())), Ok((q(0), qr(1, 6))));
        assert_eq!(center_of(&slope_path_eval(&c, &ratio(0, 1))), Ok((q(0), qr(1, 2))));
        let at_inf = crate::rectangle::complete_parallelogram(&c, &q(1), &q(1), &q(0));
        assert_eq!(center_of(&at_inf), Err(LocusError::AtInfinityRectangle));
    }

    #[test]
    fn gauss_newton_cfg2() {
        let c = cfg2();
        let mids = diagonal_midpoints(&c).unwrap();
        assert_eq!(mids, [(qr(1, 3), qr(1, 6)), (qr(3, 4), qr(1, 2)), (qr(13, 24), qr(1, 3))]);
        let gn = gauss_newton_line(&c).unwrap();
        assert_eq!(gn.slope(), ratio(4, 5));
        assert!(gauss_newton_line(&cfg1()).is_ok());
        assert_eq!(gauss_newton_line(&cfg3()), Err(LocusError::ParallelPair(Role::A, Role::D)));
    }

    #[test]
    fn diagonal_g_examples() {
        let g = diagonal_g(&cfg2()).unwrap();
        assert!(g.contains(&(qr(3, 4), q(0))) && g.contains(&(qr(1, 3), qr(2, 3))));
        assert_eq!(g.slope(), ratio(-8, 5));
        // Closed form from the configuration constants.
        let c = cfg2();
        use Role::*;
        let num = c.m_c.clone() * c.md(D, B) * c.b_a.clone() + c.m_d.clone() * c.md(A, C);
        let den = c.md(D, B) * c.b_a.clone() + c.md(A, C);
        assert_eq!(g.slope(), Ratio::new(num, den).unwrap());
        let g = diagonal_g(&cfg1()).unwrap();
        assert_eq!(g.slope(), Ratio::infinity());
        let parallel = Cfg::from_ints(2, 3, 2, 1, 1).unwrap();
        assert_eq!(diagonal_g(&parallel), Err(LocusError::ParallelPair(Role::A, Role::C)));
    }

    #[test]
    fn degenerate_locus_cfg2() {
        let r = centers_paths(&cfg2()).unwrap();
        let CenterImage::Line(a) = &r.aspect_centers else { panic!("{r:?}") };
        let CenterImage::Line(s) = &r.slope_centers else { panic!("{r:?}") };
        assert_eq!(a.slope(), ratio(4, 5));
        assert!(a.same_as(r.gauss_newton.as_ref().unwrap()));
        assert_eq!(s.slope(), ratio(-8, 5));
        assert_eq!(r.aspect_on_gauss_newton, Some(true));
        assert_eq!(r.slope_parallel_to_g, Some(true));
    }

    #[test]
    fn conic_locus_cfg1() {
        let r = centers_paths(&cfg1()).unwrap();
        let CenterImage::Conic(c) = &r.slope_centers else { panic!("{r:?}") };
        for ratio in sample_ratios::<Q>(60) {
            let p = slope_path_eval(&cfg1(), &ratio);
            if let Ok(center) = center_of(&p) {
                assert!(conic_eval(c, &center).is_zero());
            }
        }
        assert_eq!(r.aspect_centers, r.slope_centers);
    }

    #[test]
    fn twin_locus_is_one_line() {
        let r = centers_paths(&cfg3()).unwrap();
        assert_eq!(r.slope_centers, CenterImage::Empty);
        assert!(matches!(r.aspect_centers, CenterImage::Line(_)));
    }

    #[test]
    fn special_rectangles_cfg2() {
        let s = special_rectangles(&cfg2()).unwrap();
        let report = centers_paths(&cfg2()).unwrap();
        assert!(report.slope_centers.contains(&s.center_point));
        assert!(report.aspect_centers.contains(&s.center_point));
        assert!(report.aspect_centers.contains(&s.centroid_point));
        assert!(s.slope_at_infinity_ok && s.aspect_at_infinity_ok);
        assert!(s.center.has_slope(&ratio(-2, 1)) && s.centroid.has_slope(&ratio(-2, 1)));
        assert_eq!(special_rectangles(&cfg3()), Err(LocusError::ParallelPair(Role::A, Role::D)));
        assert_eq!(special_rectangles(&cfg1()), Err(LocusError::NotDegenerate));
    }

    fn horizontal<T: Field>(k: i64) -> InputLine<T> {
        InputLine::from_slope_intercept(T::zero(), T::from_i64(k))
    }

    #[test]
    fn all_parallel() {
        let shared = ConfigurationInput::new((horizontal::<Q>(1), horizontal(-1)), (horizontal(2), horizontal(-2)));
        let r = all_parallel_analysis(&shared).unwrap();
        assert!(r.midline_shared);
        assert!(r.midline.unwrap().same_as(&horizontal(0)));
        let apart = ConfigurationInput::new((horizontal::<Q>(1), horizontal(-1)), (horizontal(3), horizontal(0)));
        assert!(!all_parallel_analysis(&apart).unwrap().midline_shared);
        type F = Fp<7>;
        let f7 = ConfigurationInput::new((horizontal::<F>(1), horizontal(6)), (horizontal(2), horizontal(5)));
        let r = all_parallel_analysis(&f7).unwrap();
        assert!(r.midline_shared && r.midline.unwrap().same_as(&horizontal(0)));
        // Scaled equations still compare correctly.
        let scaled = ConfigurationInput::new(
            (InputLine::new(q(0), q(2), q(2)).unwrap(), horizontal(-1)),
            (InputLine::new(q(0), q(-3), q(-6)).unwrap(), horizontal(-2)),
        );
        assert!(all_parallel_analysis(&scaled).unwrap().midline_shared);
        let not = ConfigurationInput::new((horizontal::<Q>(1), horizontal(-1)), (horizontal(2), InputLine::from_slope_intercept(q(1), q(0))));
        assert_eq!(all_parallel_analysis(&not), Err(LocusError::NotAllParallel));
    }
}
