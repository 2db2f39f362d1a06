//! JSON views of the core types. Every exact value becomes a string.

use quadriline_core::locus::{AffineLine, CenterImage};
use quadriline_core::quadratic::ProjectiveRoots;
use quadriline_core::{
    normalize, BinaryForm, ConfigClass, ConfigError, ConfigurationInput, DiagonalE, DiagonalF, Field, InputLine,
    LocusShape, Measure, NormalizedConfig, PlaneMap, ProjectiveRectangle, Ratio,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;

pub fn scalar<T: Field>(x: &T) -> Value {
    Value::String(x.to_string())
}

pub fn ratio<T: Field>(r: &Ratio<T>) -> Value {
    Value::String(r.to_string())
}

pub fn measure<T: Field>(m: &Measure<T>) -> Value {
    Value::String(m.to_string())
}

pub fn point<T: Field>(p: &(T, T)) -> Value {
    json!([scalar(&p.0), scalar(&p.1)])
}

pub fn form<T: Field>(f: &BinaryForm<T>) -> Value {
    Value::Array(f.coeffs().iter().map(scalar).collect())
}

pub fn input_line<T: Field>(l: &InputLine<T>) -> Value {
    json!({"a": scalar(&l.a), "b": scalar(&l.b), "c": scalar(&l.c), "equation": l.to_string()})
}

pub fn roots<T: Field>(r: &ProjectiveRoots<T>, convert: impl Fn(&Ratio<T>) -> Ratio<T>) -> Value {
    match r {
        ProjectiveRoots::Everything => Value::String("all".into()),
        ProjectiveRoots::Points(v) => Value::Array(v.iter().map(|x| ratio(&convert(x))).collect()),
    }
}

pub fn class(c: &ConfigClass) -> Value {
    let shape = match c.locus_shape {
        LocusShape::NonDegenerateConic => "non-degenerate-conic",
        LocusShape::TwoLines => "two-lines",
        LocusShape::LinePlusInfinity => "line-plus-infinity",
    };
    json!({
        "degenerate": c.degenerate,
        "twin_pairs": c.twin_pairs,
        "dual_pairs": c.dual_pairs,
        "slope_path_at_infinity": c.slope_path_at_infinity,
        "aspect_path_at_infinity": c.aspect_path_at_infinity,
        "locus_shape": shape,
    })
}

/// The normalized configuration, its constants and its diagonal slopes.
pub fn normalized<T: Field>(cfg: &NormalizedConfig<T>) -> Value {
    let d = cfg.diagonal_slopes();
    let e = match &d.e {
        DiagonalE::Slope(r) => ratio(r),
        DiagonalE::AEqualsB => json!("A=B"),
    };
    let f = match &d.f {
        DiagonalF::Slope(r) => ratio(r),
        DiagonalF::AEqualsD => json!("A=D"),
        DiagonalF::AtInfinity => json!("at-infinity"),
    };
    json!({
        "m_A": scalar(&cfg.m_a), "m_B": scalar(&cfg.m_b), "m_C": scalar(&cfg.m_c), "m_D": scalar(&cfg.m_d),
        "b_A": scalar(&cfg.b_a),
        "e1": scalar(&cfg.e1), "e2": scalar(&cfg.e2), "f1": scalar(&cfg.f1), "f2": scalar(&cfg.f2),
        "degeneracy": scalar(&cfg.degeneracy()),
        "E": e,
        "F": f,
    })
}

pub fn plane_map<T: Field>(map: &PlaneMap<T>) -> Value {
    json!({
        "swap_first": map.labeling.swap_first,
        "swap_second": map.labeling.swap_second,
        "swap_roles": map.labeling.swap_roles,
        "reflection_t": map.reflection.as_ref().map(|r| scalar(&r.t)),
        "translation": point(&map.translation),
        "scale": scalar(&map.scale),
    })
}

/// A configuration together with the map from its input frame.
pub struct Frame<T> {
    pub input: ConfigurationInput<T>,
    pub cfg: NormalizedConfig<T>,
    pub map: PlaneMap<T>,
}

impl<T: Field> Frame<T> {
    pub fn new(input: ConfigurationInput<T>) -> Result<Self, ConfigError> {
        let (cfg, map) = normalize(&input)?;
        Ok(Frame { input, cfg, map })
    }

    /// Input lines in vertex order.
    fn vertex_lines(&self) -> [&InputLine<T>; 4] {
        [&self.input.first.0, &self.input.second.0, &self.input.first.1, &self.input.second.1]
    }

    /// A normalized rectangle carried back to the input frame, checked
    /// against the original line equations.
    pub fn to_input(&self, p: &ProjectiveRectangle<T>) -> Result<ProjectiveRectangle<T>, CliError> {
        let back = p.to_input_frame(&self.map);
        let c = back.coords();
        for (i, line) in self.vertex_lines().into_iter().enumerate() {
            if !line.contains_projective(&c[2 * i], &c[2 * i + 1], &c[8]) {
                return Err(CliError::Violation(format!("vertex {i} of {back} is off the line {line}")));
            }
        }
        if !back.is_rectangle() {
            return Err(CliError::Violation(format!("{back} is not a rectangle in the input frame")));
        }
        Ok(back)
    }

    pub fn rectangle(&self, p: &ProjectiveRectangle<T>) -> Result<Value, CliError> {
        rectangle(&self.to_input(p)?)
    }

    pub fn point(&self, p: &(T, T)) -> (T, T) {
        self.map.invert_point(p.clone())
    }

    pub fn line(&self, l: &AffineLine<T>) -> InputLine<T> {
        self.map.invert_line(&InputLine { a: l.a.clone(), b: l.b.clone(), c: l.c.clone() })
    }

    /// Pulls a conic `c0 x^2 + c1 xy + c2 y^2 + c3 x + c4 y + c5` back to the input frame.
    pub fn conic(&self, c: &[T; 6]) -> [T; 6] {
        let o = self.map.apply_point((T::zero(), T::zero()));
        let ex = self.map.apply_point((T::one(), T::zero()));
        let ey = self.map.apply_point((T::zero(), T::one()));
        let big_x = [ex.0 - o.0.clone(), ey.0 - o.0.clone(), o.0];
        let big_y = [ex.1 - o.1.clone(), ey.1 - o.1.clone(), o.1];
        let terms = [
            mul_linear(&big_x, &big_x),
            mul_linear(&big_x, &big_y),
            mul_linear(&big_y, &big_y),
            lift_linear(&big_x),
            lift_linear(&big_y),
            [T::zero(), T::zero(), T::zero(), T::zero(), T::zero(), T::one()],
        ];
        let mut out: [T; 6] = std::array::from_fn(|_| T::zero());
        for (k, term) in c.iter().zip(&terms) {
            for (o, t) in out.iter_mut().zip(term) {
                *o = o.clone() + k.clone() * t.clone();
            }
        }
        if let Some(lead) = out.iter().find(|x| !x.is_zero()).and_then(|x| x.inverse()) {
            out.iter_mut().for_each(|x| *x = x.clone() * lead.clone());
        }
        out
    }

    pub fn image(&self, img: &CenterImage<T>) -> Value {
        match img {
            CenterImage::Empty => json!({"type": "empty"}),
            CenterImage::Point(p) => json!({"type": "point", "point": point(&self.point(p))}),
            CenterImage::Line(l) => {
                let l = self.line(l);
                json!({"type": "line", "line": input_line(&l), "slope": ratio(&l.slope_ratio())})
            }
            CenterImage::Conic(c) => {
                json!({"type": "conic", "coefficients": self.conic(c).iter().map(scalar).collect::<Vec<_>>()})
            }
            CenterImage::Points(ps) => {
                json!({"type": "points", "points": ps.iter().map(|p| point(&self.point(p))).collect::<Vec<_>>()})
            }
        }
    }
}

/// `p x + q y + r` as a vector `[p, q, r]`, multiplied into `[xx, xy, yy, x, y, 1]`.
fn mul_linear<T: Field>(l: &[T; 3], m: &[T; 3]) -> [T; 6] {
    let [p1, q1, r1] = l.clone();
    let [p2, q2, r2] = m.clone();
    [
        p1.clone() * p2.clone(),
        p1.clone() * q2.clone() + q1.clone() * p2.clone(),
        q1.clone() * q2.clone(),
        p1 * r2.clone() + r1.clone() * p2,
        q1 * r2.clone() + r1.clone() * q2,
        r1 * r2,
    ]
}

fn lift_linear<T: Field>(l: &[T; 3]) -> [T; 6] {
    [T::zero(), T::zero(), T::zero(), l[0].clone(), l[1].clone(), l[2].clone()]
}

/// A rectangle already in its output frame.
pub fn rectangle<T: Field>(p: &ProjectiveRectangle<T>) -> Result<Value, CliError> {
    let not_rect = || CliError::Violation(format!("{p} is not a rectangle"));
    let slope = p.slope_of().ok_or_else(not_rect)?;
    let aspect = p.aspect_of().ok_or_else(not_rect)?;
    let mut obj = Map::new();
    obj.insert("at_infinity".into(), Value::Bool(p.is_at_infinity()));
    obj.insert("projective".into(), Value::Array(p.coords().iter().map(scalar).collect()));
    if let Some(v) = p.affine_vertices() {
        obj.insert("vertices".into(), Value::Array(v.iter().map(point).collect()));
        let two = T::from_i64(2);
        let center = ((v[0].0.clone() + v[2].0.clone()) / two.clone(), (v[0].1.clone() + v[2].1.clone()) / two);
        obj.insert("center".into(), point(&center));
    }
    obj.insert("slope".into(), measure(&slope));
    obj.insert("aspect".into(), measure(&aspect));
    Ok(Value::Object(obj))
}

/// Reads back a rectangle written by [`rectangle`].
pub fn parse_rectangle<T: Field>(v: &Value) -> Option<ProjectiveRectangle<T>> {
    let coords = v.get("projective")?.as_array()?;
    let parsed: Vec<T> = coords.iter().map(|c| T::parse_literal(c.as_str()?).ok()).collect::<Option<_>>()?;
    ProjectiveRectangle::new(parsed.try_into().ok()?)
}
