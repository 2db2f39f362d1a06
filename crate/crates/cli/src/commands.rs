//! The subcommands, generic over the scalar field.

use std::path::PathBuf;

use quadriline_core::census::{verify_against_paths, CensusReport};
use quadriline_core::locus::{all_parallel_analysis, centers_paths, special_rectangles, LocusError};
use quadriline_core::paths::{path_polys, PathKind};
use quadriline_core::rectangle::{aspects_at_infinity, rectangle_from_aspect, rectangle_from_slope, slopes_at_infinity, RectangleSet};
use quadriline_core::{
    sample_ratios, ConfigError, ConfigurationInput, Field, FieldTag, Fp, NormalizedConfig, Ratio, Rational,
};
use serde_json::{json, Value};

use crate::config::ConfigFile;
use crate::error::CliError;
use crate::render::{render, RenderOptions};
use crate::report::{self, Frame};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatioRequest {
    Slope(String),
    Aspect(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Classify,
    Rect(RatioRequest),
    Path { kind: PathKind, samples: usize },
    Locus,
    Census,
    Render { out: PathBuf, samples: usize, diagonals: bool },
}

/// A JSON report and the exit code to finish with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, exit_code: 0 }
    }
}

type CensusFn<T> = fn(&NormalizedConfig<T>) -> CensusReport;
type SolveFn<T> = fn(&NormalizedConfig<T>, &Ratio<T>, &T) -> RectangleSet<T>;

macro_rules! dispatch_primes {
    ($p:expr, $file:expr, $req:expr; $($prime:literal)*) => {
        match $p {
            $($prime => run_field::<Fp<$prime>>($file, $req, Some(verify_against_paths::<Fp<$prime>> as CensusFn<Fp<$prime>>)),)*
            other => Err(CliError::Precondition(format!(
                "modulus {other} is not supported (odd primes below 100 only)"
            ))),
        }
    };
}

pub fn execute(file: &ConfigFile, request: &Request) -> Result<Outcome, CliError> {
    match file.field {
        FieldTag::Rational => {
            if let Request::Render { out, samples, diagonals } = request {
                let input = to_input::<Rational>(file)?;
                let svg = render(&input, &RenderOptions { samples: *samples, diagonals: *diagonals })?;
                std::fs::write(out, svg).map_err(|e| CliError::Output(format!("{}: {e}", out.display())))?;
                return Ok(Outcome::ok(json!({"written": out.display().to_string()})));
            }
            run_field::<Rational>(file, request, None)
        }
        FieldTag::Prime(p) => dispatch_primes!(p, file, request;
            3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97),
    }
}

fn to_input<T: Field>(file: &ConfigFile) -> Result<ConfigurationInput<T>, CliError> {
    file.to_input::<T>().map_err(|e| CliError::Input(e.to_string()))
}

fn frame<T: Field>(input: ConfigurationInput<T>) -> Result<Frame<T>, CliError> {
    Frame::new(input).map_err(|e| CliError::Precondition(e.to_string()))
}

fn locus_error(e: LocusError) -> CliError {
    match e {
        LocusError::Violation(msg) => CliError::Violation(msg),
        other => CliError::Precondition(other.to_string()),
    }
}

fn run_field<T: Field>(file: &ConfigFile, request: &Request, census: Option<CensusFn<T>>) -> Result<Outcome, CliError> {
    let input = to_input::<T>(file)?;
    let field = T::tag().to_string();
    match request {
        Request::Classify => classify(input, &field),
        Request::Rect(req) => rect(frame(input)?, req),
        Request::Path { kind, samples } => path(frame(input)?, *kind, *samples),
        Request::Locus => locus(input, &field),
        Request::Census => match census {
            Some(run) => census_report(frame(input)?, run),
            None => Err(CliError::Precondition("census needs a prime field".into())),
        },
        Request::Render { .. } => Err(CliError::Precondition("render needs rational coordinates".into())),
    }
}

fn all_parallel<T: Field>(input: &ConfigurationInput<T>, field: &str) -> Result<Outcome, CliError> {
    let r = all_parallel_analysis(input).map_err(locus_error)?;
    Ok(Outcome::ok(json!({
        "field": field,
        "all_parallel": true,
        "midline_shared": r.midline_shared,
        "midline": r.midline.as_ref().map(report::input_line),
        "rectangles_exist": r.midline_shared,
        "description": r.description,
    })))
}

fn classify<T: Field>(input: ConfigurationInput<T>, field: &str) -> Result<Outcome, CliError> {
    let frame = match Frame::new(input.clone()) {
        Err(ConfigError::AllParallel) => return all_parallel(&input, field),
        other => other.map_err(|e| CliError::Precondition(e.to_string()))?,
    };
    let cfg = &frame.cfg;
    let map = &frame.map;
    Ok(Outcome::ok(json!({
        "field": field,
        "all_parallel": false,
        "normalized": report::normalized(cfg),
        "plane_map": report::plane_map(map),
        "class": report::class(&cfg.classify()),
        "at_infinity": {
            "slopes": report::roots(&slopes_at_infinity(cfg), |r| map.map_slope(r)),
            "aspects": report::roots(&aspects_at_infinity(cfg), |r| map.map_aspect(r)),
        },
    })))
}

fn rect<T: Field>(frame: Frame<T>, req: &RatioRequest) -> Result<Outcome, CliError> {
    let (name, text) = match req {
        RatioRequest::Slope(s) => ("slope", s),
        RatioRequest::Aspect(s) => ("aspect", s),
    };
    let text = if text.contains('/') { text.clone() } else { format!("{text}/1") };
    let wanted = Ratio::<T>::parse(&text).map_err(|e| CliError::Input(format!("--{name}: {e}")))?;
    let (normalized, solve): (Ratio<T>, SolveFn<T>) = match req {
        RatioRequest::Slope(_) => (frame.map.map_slope(&wanted), rectangle_from_slope),
        RatioRequest::Aspect(_) => (frame.map.map_aspect(&wanted), rectangle_from_aspect),
    };
    let check = |p: &quadriline_core::ProjectiveRectangle<T>| -> Result<Value, CliError> {
        let back = frame.to_input(p)?;
        let ok = match req {
            RatioRequest::Slope(_) => back.has_slope(&wanted),
            RatioRequest::Aspect(_) => back.has_aspect(&wanted),
        };
        if !ok {
            return Err(CliError::Violation(format!("{back} does not have {name} {wanted}")));
        }
        report::rectangle(&back)
    };
    let mut out = serde_json::Map::new();
    out.insert("request".into(), json!({ name: wanted.to_string() }));
    let affine = solve(&frame.cfg, &normalized, &T::one());
    match &affine {
        RectangleSet::Points(ps) if ps.len() == 1 => {
            if let Value::Object(fields) = check(&ps[0])? {
                out.extend(fields);
            }
        }
        RectangleSet::Span(gens) => {
            let gens: Vec<Value> = gens.iter().map(&check).collect::<Result<_, _>>()?;
            out.insert("at_infinity".into(), Value::Bool(false));
            out.insert("family".into(), json!({ "dimension": gens.len() - 1, "spanned_by": gens }));
        }
        _ => {
            // No affine rectangle: the ones with this ratio are at infinity.
            let gens: Vec<Value> = solve(&frame.cfg, &normalized, &T::zero())
                .generators()
                .iter()
                .map(&check)
                .collect::<Result<_, _>>()?;
            out.insert("at_infinity".into(), Value::Bool(true));
            match gens.len() {
                0 => return Err(CliError::Violation(format!("no rectangle has {name} {wanted}"))),
                1 => {
                    if let Value::Object(fields) = gens.into_iter().next().expect("one") {
                        out.extend(fields);
                    }
                }
                n => {
                    out.insert("family".into(), json!({ "dimension": n - 1, "spanned_by": gens }));
                }
            }
        }
    }
    Ok(Outcome::ok(Value::Object(out)))
}

fn path<T: Field>(frame: Frame<T>, kind: PathKind, samples: usize) -> Result<Outcome, CliError> {
    let polys = path_polys(&frame.cfg, kind);
    let mut rects = Vec::new();
    for r in sample_ratios::<T>(samples) {
        let p = polys.eval(&r);
        let mut v = frame.rectangle(&p)?;
        let (name, original) = match kind {
            PathKind::Slope => ("requested_slope", frame.map.map_slope(&r)),
            PathKind::Aspect => ("requested_aspect", frame.map.map_aspect(&r)),
        };
        v["parameter"] = report::ratio(&r);
        v[name] = report::ratio(&original);
        rects.push(v);
    }
    let coords: Vec<Value> = polys.coords.iter().map(report::form).collect();
    Ok(Outcome::ok(json!({
        "kind": kind.to_string(),
        "case": polys.case.to_string(),
        "polynomials": {
            "frame": "normalized",
            "first": report::form(&polys.first),
            "second": report::form(&polys.second),
            "coordinates": coords,
        },
        "at_infinity": polys.is_at_infinity(),
        "rectangles": rects,
    })))
}

fn locus<T: Field>(input: ConfigurationInput<T>, field: &str) -> Result<Outcome, CliError> {
    let frame = match Frame::new(input.clone()) {
        Err(ConfigError::AllParallel) => return all_parallel(&input, field),
        other => other.map_err(|e| CliError::Precondition(e.to_string()))?,
    };
    let r = centers_paths(&frame.cfg).map_err(locus_error)?;
    let line = |l: &Option<quadriline_core::locus::AffineLine<T>>| {
        l.as_ref().map(|l| {
            let l = frame.line(l);
            json!({"line": report::input_line(&l), "slope": report::ratio(&l.slope_ratio())})
        })
    };
    let special = match special_rectangles(&frame.cfg) {
        Ok(s) => json!({
            "center": frame.rectangle(&s.center)?,
            "center_point": report::point(&frame.point(&s.center_point)),
            "centroid": frame.rectangle(&s.centroid)?,
            "centroid_point": report::point(&frame.point(&s.centroid_point)),
            "slope_at_infinity": frame.rectangle(&s.slope_at_infinity)?,
            "aspect_at_infinity": frame.rectangle(&s.aspect_at_infinity)?,
            "slope_at_infinity_ok": s.slope_at_infinity_ok,
            "aspect_at_infinity_ok": s.aspect_at_infinity_ok,
        }),
        Err(LocusError::Violation(msg)) => return Err(CliError::Violation(msg)),
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    Ok(Outcome::ok(json!({
        "field": field,
        "all_parallel": false,
        "class": report::class(&r.class),
        "slope_centers": frame.image(&r.slope_centers),
        "aspect_centers": frame.image(&r.aspect_centers),
        "center_map_normalized": r.center_map.iter().map(report::form).collect::<Vec<_>>(),
        "gauss_newton": line(&r.gauss_newton),
        "diagonal_g": line(&r.diagonal_g),
        "aspect_on_gauss_newton": r.aspect_on_gauss_newton,
        "slope_parallel_to_g": r.slope_parallel_to_g,
        "samples": r.samples,
        "special_rectangles": special,
    })))
}

fn census_report<F: Field>(frame: Frame<F>, run: CensusFn<F>) -> Result<Outcome, CliError> {
    let r = run(&frame.cfg);
    let report = json!({
        "modulus": r.modulus,
        "normalized": report::normalized(&frame.cfg),
        "class": report::class(&frame.cfg.classify()),
        "total": r.total,
        "at_infinity": r.at_infinity,
        "by_slope_normalized": r.by_slope,
        "by_aspect_normalized": r.by_aspect,
        "slope_image": r.slope_image,
        "aspect_image": r.aspect_image,
        "degenerate": r.degenerate,
        "checks": {
            "union_covered": r.union_covered,
            "at_infinity_bound": r.at_infinity_bound_ok,
            "degenerate_consistency": r.degenerate_consistency_ok,
            "quadric_count": r.quadric_count_ok,
            "systems": r.systems_ok,
        },
        "all_ok": r.all_ok(),
        "witness": r.witness,
    });
    let exit_code = if r.all_ok() { 0 } else { 3 };
    Ok(Outcome { report, exit_code })
}
