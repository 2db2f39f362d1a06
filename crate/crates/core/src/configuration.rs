//! Four lines in two ordered pairs `(A, C)` and `(B, D)`, and their reduction
//! to the normalized form
//!
//! ```text
//! A: y = m_A x + b_A    B: y = m_B x + 1    C: y = m_C x    D: y = m_D x
//! ```
//!
//! with `m_C != m_D`. Normalization composes a relabeling within and between
//! the pairs, an optional reflection about `y = t x` (to remove vertical
//! lines), a translation taking `C ∩ D` to the origin and a uniform scaling.
//! Each step preserves parallelograms and the orthogonality condition, so the
//! inscribed rectangles of the two configurations correspond exactly.

use std::fmt;

use thiserror::Error;

use crate::quadratic::{solve_quadratic, QuadraticError};
use crate::ratio::Ratio;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {0} has a = b = 0")]
    DegenerateLine(usize),
    #[error("all four lines are parallel")]
    AllParallel,
    #[error("all four lines pass through one point")]
    AllConcurrent,
    #[error("no reflection y = t x removes every vertical line in this field")]
    NoReflection,
    #[error("C and D are parallel (m_C = m_D)")]
    ParallelCD,
    #[error("no labeling of the pairs satisfies the normalized form")]
    NoLabeling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    A,
    B,
    C,
    D,
}

impl Role {
    pub const ALL: [Role; 4] = [Role::A, Role::B, Role::C, Role::D];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Role::A => 'A',
            Role::B => 'B',
            Role::C => 'C',
            Role::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// The line `a x + b y = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputLine<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Field> InputLine<T> {
    pub fn new(a: T, b: T, c: T) -> Option<Self> {
        (!(a.is_zero() && b.is_zero())).then_some(InputLine { a, b, c })
    }

    /// `y = m x + k`.
    pub fn from_slope_intercept(m: T, k: T) -> Self {
        InputLine { a: -m, b: T::one(), c: k }
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_parallel_to(&self, other: &Self) -> bool {
        (self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone()).is_zero()
    }

    /// Same set of points (proportional equations).
    pub fn same_as(&self, other: &Self) -> bool {
        self.is_parallel_to(other)
            && (self.a.clone() * other.c.clone() - self.c.clone() * other.a.clone()).is_zero()
            && (self.b.clone() * other.c.clone() - self.c.clone() * other.b.clone()).is_zero()
    }

    pub fn contains(&self, x: &T, y: &T) -> bool {
        self.a.clone() * x.clone() + self.b.clone() * y.clone() == self.c
    }

    /// Projective incidence with `[x : y : w]`.
    pub fn contains_projective(&self, x: &T, y: &T, w: &T) -> bool {
        self.a.clone() * x.clone() + self.b.clone() * y.clone() == self.c.clone() * w.clone()
    }

    pub fn intersection(&self, other: &Self) -> Option<(T, T)> {
        let det = self.a.clone() * other.b.clone() - self.b.clone() * other.a.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.c.clone() * other.b.clone() - self.b.clone() * other.c.clone()) / det.clone();
        let y = (self.a.clone() * other.c.clone() - self.c.clone() * other.a.clone()) / det;
        Some((x, y))
    }

    /// `(m, k)` with `y = m x + k`, unless the line is vertical.
    pub fn slope_intercept(&self) -> Option<(T, T)> {
        (!self.is_vertical()).then(|| (-self.a.clone() / self.b.clone(), self.c.clone() / self.b.clone()))
    }

    /// The direction of the line as a slope `dy/dx`.
    pub fn slope_ratio(&self) -> Ratio<T> {
        Ratio::new(-self.a.clone(), self.b.clone()).expect("(a, b) != 0")
    }
}

impl<T: Field> fmt::Display for InputLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x + {} y = {}", self.a, self.b, self.c)
    }
}

/// Two ordered pairs of lines, `(A, C)` and `(B, D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationInput<T> {
    pub first: (InputLine<T>, InputLine<T>),
    pub second: (InputLine<T>, InputLine<T>),
}

impl<T: Field> ConfigurationInput<T> {
    pub fn new(first: (InputLine<T>, InputLine<T>), second: (InputLine<T>, InputLine<T>)) -> Self {
        ConfigurationInput { first, second }
    }

    /// Lines in the order `[A, C, B, D]` as given.
    pub fn flat(&self) -> [&InputLine<T>; 4] {
        [&self.first.0, &self.first.1, &self.second.0, &self.second.1]
    }

    /// The line playing role `role` before any relabeling.
    pub fn line(&self, role: Role) -> &InputLine<T> {
        match role {
            Role::A => &self.first.0,
            Role::B => &self.second.0,
            Role::C => &self.first.1,
            Role::D => &self.second.1,
        }
    }

    pub fn all_parallel(&self) -> bool {
        let l = self.flat();
        l.iter().all(|x| x.is_parallel_to(l[0]))
    }

    /// A point common to all four lines, if any.
    pub fn common_point(&self) -> Option<(T, T)> {
        let l = self.flat();
        for i in 0..4 {
            for j in i + 1..4 {
                if let Some((x, y)) = l[i].intersection(l[j]) {
                    return l.iter().all(|line| line.contains(&x, &y)).then_some((x, y));
                }
            }
        }
        None
    }
}

/// One of the eight relabelings that keep the pair structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Labeling {
    /// Swap `A` and `C` within the first pair.
    pub swap_first: bool,
    /// Swap `B` and `D` within the second pair.
    pub swap_second: bool,
    /// Exchange the roles of the two pairs.
    pub swap_roles: bool,
}

impl Labeling {
    /// All eight labelings; bit 0 swaps within the first pair, bit 1 within
    /// the second, bit 2 exchanges the pairs. Tried in this order.
    pub fn all() -> [Labeling; 8] {
        std::array::from_fn(|i| Labeling {
            swap_first: i & 1 != 0,
            swap_second: i & 2 != 0,
            swap_roles: i & 4 != 0,
        })
    }

    /// Index into [`ConfigurationInput::flat`] of the line taking each role.
    pub fn assignment(self) -> [usize; 4] {
        let (a, c) = if self.swap_first { (1, 0) } else { (0, 1) };
        let (b, d) = if self.swap_second { (3, 2) } else { (2, 3) };
        if self.swap_roles {
            [b, a, d, c]
        } else {
            [a, b, c, d]
        }
    }

    /// True when the new `A`-`B` side is parallel to the old `B`-`C` side.
    fn rotates_sides(self) -> bool {
        self.swap_first != self.swap_second
    }

    /// Aspect ratio of a rectangle after relabeling, from the one before.
    fn map_aspect<T: Field>(self, r: &Ratio<T>) -> Ratio<T> {
        let mut r = r.clone();
        if self.rotates_sides() {
            // u/v ↦ -v/u
            r = r.reciprocal().negated();
        }
        if self.swap_roles {
            r = r.negated();
        }
        r
    }
}

/// Reflection about the line `y = t x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection<T> {
    pub t: T,
}

impl<T: Field> Reflection<T> {
    fn matrix(&self) -> [[T; 2]; 2] {
        let t = self.t.clone();
        let n = T::one() + t.square();
        let c = (T::one() - t.square()) / n.clone();
        let s = T::from_i64(2) * t / n;
        [[c.clone(), s.clone()], [s, -c]]
    }

    /// The reflection is its own inverse.
    pub fn apply(&self, v: (T, T)) -> (T, T) {
        let m = self.matrix();
        (
            m[0][0].clone() * v.0.clone() + m[0][1].clone() * v.1.clone(),
            m[1][0].clone() * v.0 + m[1][1].clone() * v.1,
        )
    }

    fn admissible(t: &T, lines: &[&InputLine<T>]) -> bool {
        if (T::one() + t.square()).is_zero() {
            return false;
        }
        // The image of the normal (a, b) has second coordinate ∝ 2 t a + (t^2 - 1) b.
        lines.iter().all(|l| {
            !(T::from_i64(2) * t.clone() * l.a.clone() + (t.square() - T::one()) * l.b.clone()).is_zero()
        })
    }
}

/// The invertible similarity taking the input configuration to normalized form:
/// `P ↦ (R(P) - translation) / scale`, with roles reassigned by `labeling`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMap<T> {
    pub labeling: Labeling,
    pub reflection: Option<Reflection<T>>,
    pub translation: (T, T),
    pub scale: T,
}

impl<T: Field> PlaneMap<T> {
    pub fn identity() -> Self {
        PlaneMap {
            labeling: Labeling::default(),
            reflection: None,
            translation: (T::zero(), T::zero()),
            scale: T::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    fn reflect(&self, v: (T, T)) -> (T, T) {
        match &self.reflection {
            Some(r) => r.apply(v),
            None => v,
        }
    }

    pub fn apply_point(&self, p: (T, T)) -> (T, T) {
        let (x, y) = self.reflect(p);
        (
            (x - self.translation.0.clone()) / self.scale.clone(),
            (y - self.translation.1.clone()) / self.scale.clone(),
        )
    }

    pub fn invert_point(&self, p: (T, T)) -> (T, T) {
        self.invert_projective(&p.0, &p.1, &T::one())
    }

    /// Inverse map on homogeneous coordinates `[x : y : w]`; `w` is unchanged.
    pub fn invert_projective(&self, x: &T, y: &T, w: &T) -> (T, T) {
        let v = (
            self.scale.clone() * x.clone() + self.translation.0.clone() * w.clone(),
            self.scale.clone() * y.clone() + self.translation.1.clone() * w.clone(),
        );
        self.reflect(v)
    }

    /// Image of a line under the forward map.
    pub fn apply_line(&self, line: &InputLine<T>) -> InputLine<T> {
        let (a, b) = self.reflect((line.a.clone(), line.b.clone()));
        let c = (line.c.clone() - a.clone() * self.translation.0.clone() - b.clone() * self.translation.1.clone())
            / self.scale.clone();
        InputLine { a, b, c }
    }

    /// Image of a line under the inverse map.
    pub fn invert_line(&self, line: &InputLine<T>) -> InputLine<T> {
        // Forward map as P' = (R P - q) / k, so n·P' = c  ⇔  (R n)·P = k c + n·q.
        let c = self.scale.clone() * line.c.clone()
            + line.a.clone() * self.translation.0.clone()
            + line.b.clone() * self.translation.1.clone();
        let (a, b) = self.reflect((line.a.clone(), line.b.clone()));
        InputLine { a, b, c }
    }

    /// A slope in the input frame, expressed for the normalized labeling.
    ///
    /// Relabeling and reflection are commuting involutions on slopes, so the
    /// same map also converts normalized slopes back.
    pub fn map_slope(&self, r: &Ratio<T>) -> Ratio<T> {
        let (s, t) = r.parts();
        // Direction of the A-B side.
        let dir = if self.labeling.rotates_sides() { (s, -t) } else { (t, s) };
        let (dx, dy) = self.reflect(dir);
        Ratio::new(dy, dx).expect("nonzero direction")
    }

    /// Aspect ratios transform by relabeling and change sign under reflection.
    pub fn map_aspect(&self, r: &Ratio<T>) -> Ratio<T> {
        let r = self.labeling.map_aspect(r);
        if self.reflection.is_some() {
            r.negated()
        } else {
            r
        }
    }
}

/// The normalized configuration with its derived constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedConfig<T> {
    pub m_a: T,
    pub m_b: T,
    pub m_c: T,
    pub m_d: T,
    pub b_a: T,
    pub e1: T,
    pub e2: T,
    pub f1: T,
    pub f2: T,
}

impl<T: Field> NormalizedConfig<T> {
    pub fn new(m_a: T, m_b: T, m_c: T, m_d: T, b_a: T) -> Result<Self, ConfigError> {
        if m_c == m_d {
            return Err(ConfigError::ParallelCD);
        }
        let e1 = b_a.clone() * m_b.clone() - m_a.clone();
        let e2 = b_a.clone() - T::one();
        let f1 = b_a.clone() * (m_b.clone() - m_c.clone()) * m_d.clone() + (m_d.clone() - m_a.clone()) * m_c.clone();
        let f2 = (m_d.clone() - m_a.clone()) + b_a.clone() * (m_b.clone() - m_c.clone());
        debug_assert!(!(e1.is_zero() && e2.is_zero() && f1.is_zero() && f2.is_zero()));
        Ok(NormalizedConfig { m_a, m_b, m_c, m_d, b_a, e1, e2, f1, f2 })
    }

    pub fn from_ints(m_a: i64, m_b: i64, m_c: i64, m_d: i64, b_a: i64) -> Result<Self, ConfigError> {
        Self::new(T::from_i64(m_a), T::from_i64(m_b), T::from_i64(m_c), T::from_i64(m_d), T::from_i64(b_a))
    }

    pub fn slope(&self, role: Role) -> &T {
        match role {
            Role::A => &self.m_a,
            Role::B => &self.m_b,
            Role::C => &self.m_c,
            Role::D => &self.m_d,
        }
    }

    pub fn intercept(&self, role: Role) -> T {
        match role {
            Role::A => self.b_a.clone(),
            Role::B => T::one(),
            Role::C | Role::D => T::zero(),
        }
    }

    /// `m_X - m_Y`.
    pub fn md(&self, x: Role, y: Role) -> T {
        self.slope(x).clone() - self.slope(y).clone()
    }

    pub fn line(&self, role: Role) -> InputLine<T> {
        InputLine::from_slope_intercept(self.slope(role).clone(), self.intercept(role))
    }

    pub fn meet(&self, x: Role, y: Role) -> Option<(T, T)> {
        self.line(x).intersection(&self.line(y))
    }

    /// `e1 f1 + e2 f2`; zero exactly when the configuration is degenerate.
    pub fn degeneracy(&self) -> T {
        self.e1.clone() * self.f1.clone() + self.e2.clone() * self.f2.clone()
    }

    pub fn is_degenerate(&self) -> bool {
        self.degeneracy().is_zero()
    }

    pub fn has_twin_pairs(&self) -> bool {
        let minus_one = -T::one();
        (self.m_a == self.m_d && self.m_b == self.m_c)
            || (self.m_a.clone() * self.m_c.clone() == minus_one && self.m_b.clone() * self.m_d.clone() == minus_one)
    }

    pub fn has_dual_pairs(&self) -> bool {
        (self.m_a.square() + T::one()).is_zero()
            && self.m_a == self.m_b
            && (self.m_a == self.m_c || self.m_a == self.m_d)
    }

    pub fn diagonal_slopes(&self) -> DiagonalSlopes<T> {
        let e = match Ratio::new(self.e1.clone(), self.e2.clone()) {
            Ok(r) => DiagonalE::Slope(r),
            Err(_) => DiagonalE::AEqualsB,
        };
        let f = match Ratio::new(self.f1.clone(), self.f2.clone()) {
            Ok(r) => DiagonalF::Slope(r),
            Err(_) if self.b_a.is_zero() => DiagonalF::AEqualsD,
            Err(_) => DiagonalF::AtInfinity,
        };
        DiagonalSlopes { e, f }
    }

    pub fn classify(&self) -> ConfigClass {
        let degenerate = self.is_degenerate();
        let twin_pairs = self.has_twin_pairs();
        let dual_pairs = self.has_dual_pairs();
        let locus_shape = if twin_pairs || dual_pairs {
            LocusShape::LinePlusInfinity
        } else if degenerate {
            LocusShape::TwoLines
        } else {
            LocusShape::NonDegenerateConic
        };
        ConfigClass {
            degenerate,
            twin_pairs,
            dual_pairs,
            slope_path_at_infinity: twin_pairs,
            aspect_path_at_infinity: dual_pairs,
            locus_shape,
        }
    }

    /// True when no two of the four lines are parallel.
    pub fn no_parallel_lines(&self) -> bool {
        let m = [&self.m_a, &self.m_b, &self.m_c, &self.m_d];
        (0..4).all(|i| (i + 1..4).all(|j| m[i] != m[j]))
    }

    /// The slope shared by every rectangle on the aspect path of a degenerate
    /// configuration: that of `F` when defined, else the slope orthogonal to `E`.
    pub fn f_slope(&self) -> Ratio<T> {
        Ratio::new(self.f1.clone(), self.f2.clone())
            .unwrap_or_else(|_| Ratio::new(-self.e2.clone(), self.e1.clone()).expect("e and f not both zero"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagonalE<T> {
    Slope(Ratio<T>),
    AEqualsB,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagonalF<T> {
    Slope(Ratio<T>),
    AEqualsD,
    AtInfinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalSlopes<T> {
    pub e: DiagonalE<T>,
    pub f: DiagonalF<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusShape {
    NonDegenerateConic,
    TwoLines,
    LinePlusInfinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigClass {
    pub degenerate: bool,
    pub twin_pairs: bool,
    pub dual_pairs: bool,
    pub slope_path_at_infinity: bool,
    pub aspect_path_at_infinity: bool,
    pub locus_shape: LocusShape,
}

/// Reduces `input` to normalized form.
pub fn normalize<T: Field>(input: &ConfigurationInput<T>) -> Result<(NormalizedConfig<T>, PlaneMap<T>), ConfigError> {
    for (i, l) in input.flat().iter().enumerate() {
        if l.a.is_zero() && l.b.is_zero() {
            return Err(ConfigError::DegenerateLine(i));
        }
    }
    if input.all_parallel() {
        return Err(ConfigError::AllParallel);
    }
    if input.common_point().is_some() {
        return Err(ConfigError::AllConcurrent);
    }

    let flat = input.flat();
    let reflection = if flat.iter().any(|l| l.is_vertical()) {
        Some(find_reflection(&flat)?)
    } else {
        None
    };
    let reflected: Vec<InputLine<T>> = flat
        .iter()
        .map(|l| {
            let (a, b) = match &reflection {
                Some(r) => r.apply((l.a.clone(), l.b.clone())),
                None => (l.a.clone(), l.b.clone()),
            };
            InputLine { a, b, c: l.c.clone() }
        })
        .collect();

    for labeling in Labeling::all() {
        let [ia, ib, ic, id] = labeling.assignment();
        let (line_a, line_b, line_c, line_d) = (&reflected[ia], &reflected[ib], &reflected[ic], &reflected[id]);
        let Some(origin) = line_c.intersection(line_d) else {
            continue;
        };
        if line_b.contains(&origin.0, &origin.1) {
            continue;
        }
        let (m_b, k_b) = line_b.slope_intercept().expect("no vertical lines remain");
        let k_b = k_b - (origin.1.clone() - m_b.clone() * origin.0.clone());
        let (m_a, k_a) = line_a.slope_intercept().expect("no vertical lines remain");
        let k_a = k_a - (origin.1.clone() - m_a.clone() * origin.0.clone());
        let (m_c, _) = line_c.slope_intercept().expect("no vertical lines remain");
        let (m_d, _) = line_d.slope_intercept().expect("no vertical lines remain");
        let b_a = k_a / k_b.clone();
        let cfg = NormalizedConfig::new(m_a, m_b, m_c, m_d, b_a)?;
        let map = PlaneMap { labeling, reflection, translation: origin, scale: k_b };
        return Ok((cfg, map));
    }
    Err(ConfigError::NoLabeling)
}

fn find_reflection<T: Field>(lines: &[&InputLine<T>]) -> Result<Reflection<T>, ConfigError> {
    let limit: i64 = match T::CHARACTERISTIC {
        0 => 64,
        p => (p - 1) as i64,
    };
    (1..=limit)
        .map(T::from_i64)
        .find(|t| Reflection::admissible(t, lines))
        .map(|t| Reflection { t })
        .ok_or(ConfigError::NoReflection)
}

/// Values of `b_A` that make the configuration degenerate for fixed slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegeneratingIntercepts<T> {
    /// Every `b_A` works (the quadratic vanishes identically).
    All,
    Roots(Vec<T>),
}

/// Roots of `m_BC (m_B m_D + 1) X^2 - δ X + m_AD (m_A m_C + 1)`.
pub fn degenerating_intercepts<T: Field>(m_a: &T, m_b: &T, m_c: &T, m_d: &T) -> DegeneratingIntercepts<T> {
    let one = T::one();
    let ac1 = m_a.clone() * m_c.clone() + one.clone();
    let bd1 = m_b.clone() * m_d.clone() + one;
    let delta = ac1.clone() * (m_b.clone() - m_d.clone()) + bd1.clone() * (m_a.clone() - m_c.clone());
    let quad = (m_b.clone() - m_c.clone()) * bd1;
    let constant = (m_a.clone() - m_d.clone()) * ac1;
    match solve_quadratic(&quad, &-delta, &constant) {
        Err(QuadraticError::AllZero) => DegeneratingIntercepts::All,
        Ok(roots) => DegeneratingIntercepts::Roots(roots.into_iter().map(|r| r.value).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type Cfg = NormalizedConfig<Q>;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn line(a: i64, b: i64, c: i64) -> InputLine<Q> {
        InputLine::new(q(a), q(b), q(c)).unwrap()
    }

    /// `y = m x + k`
    fn yl(m: i64, k: i64) -> InputLine<Q> {
        InputLine::from_slope_intercept(q(m), q(k))
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
    fn constants() {
        let c = cfg1();
        assert_eq!((c.e1.clone(), c.e2.clone(), c.f1.clone(), c.f2.clone()), (q(1), q(0), q(3), q(2)));
        assert_eq!(c.degeneracy(), q(3));
        let c = cfg2();
        assert_eq!((c.e1.clone(), c.e2.clone(), c.f1.clone(), c.f2.clone()), (q(1), q(2), q(-6), q(3)));
        assert!(c.is_degenerate());
    }

    #[test]
    fn normalize_identity() {
        let input = ConfigurationInput::new((yl(2, 1), yl(0, 0)), (yl(3, 1), yl(1, 0)));
        let (cfg, map) = normalize(&input).unwrap();
        assert_eq!(cfg, cfg1());
        assert!(map.is_identity());
    }

    #[test]
    fn normalize_translation() {
        let input = ConfigurationInput::new((yl(2, 3), yl(0, 2)), (yl(3, 3), yl(1, 2)));
        let (cfg, map) = normalize(&input).unwrap();
        assert_eq!(cfg, cfg1());
        assert_eq!(map.translation, (q(0), q(2)));
        assert_eq!(map.scale, q(1));
        assert!(map.reflection.is_none());
    }

    #[test]
    fn normalize_vertical_line() {
        // A: x = 0, C: y = 0, B: y = 3x + 1, D: y = x.
        let input = ConfigurationInput::new((line(1, 0, 0), line(0, 1, 0)), (yl(3, 1), yl(1, 0)));
        let (cfg, map) = normalize(&input).unwrap();
        let t = map.reflection.as_ref().expect("reflection needed").t.clone();
        assert_ne!(t, q(0));
        for (i, l) in input.flat().iter().enumerate() {
            let image = map.apply_line(l);
            assert!(!image.is_vertical(), "line {i} still vertical");
        }
        check_round_trip(&input, &cfg, &map);
    }

    fn check_round_trip(input: &ConfigurationInput<Q>, cfg: &Cfg, map: &PlaneMap<Q>) {
        let assignment = map.labeling.assignment();
        let flat = input.flat();
        for role in Role::ALL {
            let original = flat[assignment[role.index()]];
            assert!(map.apply_line(original).same_as(&cfg.line(role)), "forward {role}");
            assert!(map.invert_line(&cfg.line(role)).same_as(original), "inverse {role}");
        }
        let p = (qr(3, 7), qr(-2, 5));
        assert_eq!(map.invert_point(map.apply_point(p.clone())), p);
    }

    #[test]
    fn normalize_relabels_parallel_cd() {
        // C ∥ D as given: C: y = 1, D: y = 2; swapping within a pair fixes it.
        let input = ConfigurationInput::new((yl(1, 5), yl(0, 1)), (yl(-2, 3), yl(0, 2)));
        let (cfg, map) = normalize(&input).unwrap();
        assert_ne!(map.labeling, Labeling::default());
        check_round_trip(&input, &cfg, &map);
    }

    #[test]
    fn normalize_swaps_roles_when_b_through_origin() {
        // B passes through C ∩ D = (0, 0) in the given labeling.
        let input = ConfigurationInput::new((yl(2, 1), yl(0, 0)), (yl(3, 0), yl(1, 0)));
        let (cfg, map) = normalize(&input).unwrap();
        assert!(!cfg.line(Role::B).contains(&q(0), &q(0)));
        check_round_trip(&input, &cfg, &map);
    }

    #[test]
    fn normalize_errors() {
        let parallel = ConfigurationInput::new((yl(1, 0), yl(1, 1)), (yl(1, 2), yl(1, 3)));
        assert_eq!(normalize(&parallel), Err(ConfigError::AllParallel));
        let concurrent = ConfigurationInput::new((yl(1, 0), yl(2, 0)), (yl(3, 0), line(1, 0, 0)));
        assert_eq!(normalize(&concurrent), Err(ConfigError::AllConcurrent));
    }

    #[test]
    fn diagonals() {
        let d = cfg1().diagonal_slopes();
        assert_eq!(d.e, DiagonalE::Slope(Ratio::infinity()));
        assert_eq!(d.f, DiagonalF::Slope(Ratio::finite(qr(3, 2))));
        let d = cfg2().diagonal_slopes();
        assert_eq!(d.e, DiagonalE::Slope(Ratio::finite(qr(1, 2))));
        assert_eq!(d.f, DiagonalF::Slope(Ratio::finite(q(-2))));
        let d = cfg3().diagonal_slopes();
        assert_eq!(d.e, DiagonalE::Slope(Ratio::infinity()));
        assert_eq!(d.f, DiagonalF::AtInfinity);
        // A = B: y = 3x + 1 twice.
        let d = Cfg::from_ints(3, 3, 0, 1, 1).unwrap().diagonal_slopes();
        assert_eq!(d.e, DiagonalE::AEqualsB);
        // A = D: b_A = 0 and m_A = m_D.
        let d = Cfg::from_ints(1, 2, 0, 1, 0).unwrap().diagonal_slopes();
        assert_eq!(d.f, DiagonalF::AEqualsD);
    }

    #[test]
    fn diagonal_slopes_match_geometry() {
        // E through A∩B and the origin, F through A∩D and B∩C.
        for (ma, mb, mc, md, ba) in [(2, 3, 0, 1, 1), (-4, -1, 0, 2, 3), (5, -2, 1, 3, 7), (1, 4, -3, 2, -2)] {
            let c = Cfg::from_ints(ma, mb, mc, md, ba).unwrap();
            let through = |p: (Q, Q), r: (Q, Q)| Ratio::new(p.1 - r.1, p.0 - r.0).unwrap();
            let ab = c.meet(Role::A, Role::B).unwrap();
            let DiagonalE::Slope(e) = c.diagonal_slopes().e else { panic!() };
            assert_eq!(e, through(ab, (q(0), q(0))));
            let DiagonalF::Slope(f) = c.diagonal_slopes().f else { panic!() };
            assert_eq!(f, through(c.meet(Role::A, Role::D).unwrap(), c.meet(Role::B, Role::C).unwrap()));
        }
    }

    #[test]
    fn classification() {
        let k = cfg1().classify();
        assert!(!k.degenerate);
        assert_eq!(k.locus_shape, LocusShape::NonDegenerateConic);
        let k = cfg2().classify();
        assert!(k.degenerate && !k.twin_pairs && !k.dual_pairs);
        assert_eq!(k.locus_shape, LocusShape::TwoLines);
        let k = cfg3().classify();
        assert!(k.degenerate && k.twin_pairs && k.slope_path_at_infinity && !k.aspect_path_at_infinity);
        assert_eq!(k.locus_shape, LocusShape::LinePlusInfinity);
        // Orthogonal twin pairs: m_A m_C = m_B m_D = -1.
        let k = Cfg::from_ints(1, 2, -1, 3, 5).unwrap();
        assert!(!k.has_twin_pairs());
        let k = Cfg::new(q(2), q(3), qr(-1, 2), qr(-1, 3), q(5)).unwrap();
        assert!(k.has_twin_pairs() && k.is_degenerate());
    }

    #[test]
    fn degenerating() {
        assert_eq!(degenerating_intercepts(&q(1), &q(0), &q(0), &q(1)), DegeneratingIntercepts::All);
        let DegeneratingIntercepts::Roots(r) = degenerating_intercepts(&q(-4), &q(-1), &q(0), &q(2)) else {
            panic!()
        };
        assert!(r.contains(&q(3)));
        for (ma, mb, mc, md) in [(2, 3, 0, 1), (-4, -1, 0, 2), (5, 1, -2, 7)] {
            let DegeneratingIntercepts::Roots(roots) = degenerating_intercepts(&q(ma), &q(mb), &q(mc), &q(md)) else {
                panic!()
            };
            for ba in roots {
                let c = Cfg::new(q(ma), q(mb), q(mc), q(md), ba).unwrap();
                assert!(c.is_degenerate());
            }
        }
    }
}
