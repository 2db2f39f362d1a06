//! SVG figures: the four lines, sampled rectangles and the locus of centers.
//!
//! Geometry is exact until the final formatting step, which writes each
//! coordinate as a decimal with twelve significant digits.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use quadriline_core::locus::{center_of, centers_paths, CenterImage, LocusError};
use quadriline_core::paths::{aspect_path_polys, slope_path_polys, PathPolynomials};
use quadriline_core::{sample_ratios, ConfigError, ConfigurationInput, InputLine, Ratio, Rational};

use crate::error::CliError;
use crate::report::Frame;

const WIDTH_PX: i64 = 800;
const SIGNIFICANT: u32 = 12;
/// Parameter steps per quarter of the projective line when tracing a conic.
const TRACE_STEPS: i64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub samples: usize,
    pub diagonals: bool,
}

type Point = (Rational, Rational);

/// `q` rounded to `digits` significant digits, half away from zero.
pub fn decimal(q: &Rational, digits: u32) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let ten = Rational::from_integer(10.into());
    let a = q.abs();
    let low = ten.pow(digits as i32 - 1);
    let high = ten.pow(digits as i32);
    // First guess from the digit counts, then correct by at most a step or two.
    let guess = a.numer().to_string().len() as i32 - a.denom().to_string().len() as i32;
    let mut e = digits as i32 - 1 - guess;
    let mut scaled = &a * ten.pow(e);
    while scaled >= high {
        e -= 1;
        scaled = &a * ten.pow(e);
    }
    while scaled < low {
        e += 1;
        scaled = &a * ten.pow(e);
    }
    let half = Rational::new(1.into(), 2.into());
    let mut n = (scaled + half).floor().to_integer();
    if Rational::from_integer(n.clone()) >= high {
        n /= 10;
        e -= 1;
    }
    let mut s = n.to_string();
    if e <= 0 {
        s.push_str(&"0".repeat((-e) as usize));
    } else {
        let e = e as usize;
        if s.len() <= e {
            s = format!("{}{}", "0".repeat(e - s.len() + 1), s);
        }
        s.insert(s.len() - e, '.');
        let trimmed = s.trim_end_matches('0').trim_end_matches('.');
        s = trimmed.to_string();
    }
    if q.is_negative() {
        s.insert(0, '-');
    }
    s
}

fn num(q: &Rational) -> String {
    decimal(q, SIGNIFICANT)
}

#[derive(Debug, Clone)]
struct Viewport {
    min: Point,
    max: Point,
}

impl Viewport {
    /// Bounding box of `points` with a 10% margin on every side.
    fn fit(points: &[Point]) -> Viewport {
        let q = |n: i64| Rational::from_integer(n.into());
        let mut min = points.first().cloned().unwrap_or((q(-1), q(-1)));
        let mut max = min.clone();
        for (x, y) in points {
            min = (min.0.clone().min(x.clone()), min.1.clone().min(y.clone()));
            max = (max.0.clone().max(x.clone()), max.1.clone().max(y.clone()));
        }
        // Never collapse to a segment or a point.
        let mut w = &max.0 - &min.0;
        let mut h = &max.1 - &min.1;
        let floor = (w.clone().max(h.clone()) / q(4)).max(q(1));
        if w < floor {
            let pad = (&floor - &w) / q(2);
            min.0 -= &pad;
            max.0 += &pad;
            w = floor.clone();
        }
        if h < floor {
            let pad = (&floor - &h) / q(2);
            min.1 -= &pad;
            max.1 += &pad;
            h = floor;
        }
        let margin = (w / q(10), h / q(10));
        Viewport {
            min: (min.0 - &margin.0, min.1 - &margin.1),
            max: (max.0 + &margin.0, max.1 + &margin.1),
        }
    }

    fn contains(&self, p: &Point) -> bool {
        self.min.0 <= p.0 && p.0 <= self.max.0 && self.min.1 <= p.1 && p.1 <= self.max.1
    }

    /// The part of a line inside the box, if any.
    fn clip(&self, line: &InputLine<Rational>) -> Option<(Point, Point)> {
        let mut hits: Vec<Point> = Vec::new();
        if !line.b.is_zero() {
            for x in [&self.min.0, &self.max.0] {
                hits.push((x.clone(), (&line.c - &line.a * x) / &line.b));
            }
        }
        if !line.a.is_zero() {
            for y in [&self.min.1, &self.max.1] {
                hits.push(((&line.c - &line.b * y) / &line.a, y.clone()));
            }
        }
        hits.retain(|p| self.contains(p));
        hits.sort();
        hits.dedup();
        match (hits.first(), hits.last()) {
            (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
            _ => None,
        }
    }
}

fn path_data(points: &[Point]) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, num(x), num(y));
    }
    d.trim_end().to_string()
}

fn segment(class: &str, extra: &str, a: &Point, b: &Point) -> String {
    format!(
        "    <line class=\"{class}\"{extra} x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
        num(&a.0),
        num(&a.1),
        num(&b.0),
        num(&b.1)
    )
}

/// Affine rectangles of the path at the sampled parameters, in the input frame.
fn sampled(frame: &Frame<Rational>, path: &PathPolynomials<Rational>, ratios: &[Ratio<Rational>]) -> Result<Vec<[Point; 4]>, CliError> {
    let mut out = Vec::new();
    for r in ratios {
        let p = frame.to_input(&path.eval(r))?;
        if let Some(v) = p.affine_vertices() {
            out.push(v);
        }
    }
    Ok(out)
}

/// The projective line traversed once: `i/M` for `i` from `-M` up to `M - 1`,
/// then `M/i` for `i` from `M` down to `1 - M`.
fn trace_parameters() -> Vec<Ratio<Rational>> {
    let r = |a: i64, b: i64| Ratio::from_ints(a, b).expect("nonzero");
    let m = TRACE_STEPS;
    (-m..m).map(|i| r(i, m)).chain((-m + 1..=m).rev().map(|i| r(m, i))).collect()
}

/// Centers of the path along [`trace_parameters`], split where the curve
/// leaves the box or passes through infinity.
fn traced_centers(frame: &Frame<Rational>, path: &PathPolynomials<Rational>, view: &Viewport) -> Vec<Vec<Point>> {
    let mut runs = vec![Vec::new()];
    for r in trace_parameters() {
        let inside = match center_of(&path.eval(&r)) {
            Ok(c) => Some(frame.point(&c)).filter(|p| view.contains(p)),
            Err(_) => None,
        };
        match inside {
            Some(p) => runs.last_mut().expect("nonempty").push(p),
            None if runs.last().is_some_and(|r| !r.is_empty()) => runs.push(Vec::new()),
            None => {}
        }
    }
    runs.retain(|r| r.len() > 1);
    runs
}

pub fn render(input: &ConfigurationInput<Rational>, options: &RenderOptions) -> Result<String, CliError> {
    let lines: Vec<&InputLine<Rational>> = input.flat().to_vec();
    let frame = match Frame::new(input.clone()) {
        Ok(f) => Some(f),
        Err(ConfigError::AllParallel) => None,
        Err(e) => return Err(CliError::Precondition(e.to_string())),
    };

    // Rectangles: the slope path, alternating with the aspect path when the
    // two paths differ.
    let mut rects = Vec::new();
    if let Some(frame) = &frame {
        let pi = slope_path_polys(&frame.cfg);
        let ratios = sample_ratios::<Rational>(options.samples);
        if frame.cfg.is_degenerate() {
            let phi = aspect_path_polys(&frame.cfg);
            let (even, odd): (Vec<_>, Vec<_>) = ratios.iter().cloned().enumerate().partition(|(i, _)| i % 2 == 0);
            let strip = |v: Vec<(usize, Ratio<Rational>)>| v.into_iter().map(|(_, r)| r).collect::<Vec<_>>();
            rects.extend(sampled(frame, &pi, &strip(even))?);
            rects.extend(sampled(frame, &phi, &strip(odd))?);
        } else {
            rects.extend(sampled(frame, &pi, &ratios)?);
        }
    }

    // Viewport: rectangle vertices and the meeting points of the lines.
    let mut anchors: Vec<Point> = rects.iter().flatten().cloned().collect();
    for (i, l) in lines.iter().enumerate() {
        for m in &lines[i + 1..] {
            anchors.extend(l.intersection(m));
        }
    }
    if anchors.is_empty() {
        // Parallel lines: the points nearest the origin.
        for l in &lines {
            let n = &l.a * &l.a + &l.b * &l.b;
            anchors.push((&l.a * &l.c / &n, &l.b * &l.c / &n));
        }
    }
    let view = Viewport::fit(&anchors);
    let width = &view.max.0 - &view.min.0;
    let height = &view.max.1 - &view.min.1;
    let px = Rational::from_integer(WIDTH_PX.into());
    let height_px = &px * &height / &width;

    let mut body = String::new();
    body.push_str("  <g id=\"lines\" stroke=\"#222\">\n");
    for (l, name) in lines.iter().zip(["A", "C", "B", "D"]) {
        if let Some((a, b)) = view.clip(l) {
            body.push_str(&segment("line", &format!(" data-role=\"{name}\""), &a, &b));
        }
    }
    body.push_str("  </g>\n");

    body.push_str("  <g id=\"rectangles\" stroke=\"#1f6fb2\" fill=\"#1f6fb2\" fill-opacity=\"0.06\">\n");
    for v in &rects {
        let _ = writeln!(body, "    <path class=\"rectangle\" d=\"{} Z\"/>", path_data(v));
    }
    body.push_str("  </g>\n");

    body.push_str("  <g id=\"locus\" stroke=\"#c0392b\" stroke-dasharray=\"1 5\" stroke-linecap=\"round\" fill=\"none\">\n");
    match &frame {
        Some(frame) => {
            let report = centers_paths(&frame.cfg).map_err(|e| match e {
                LocusError::Violation(m) => CliError::Violation(m),
                other => CliError::Precondition(other.to_string()),
            })?;
            let mut images = vec![(&report.slope_centers, "slope")];
            if report.class.degenerate {
                images.push((&report.aspect_centers, "aspect"));
            }
            for (image, path) in images {
                match image {
                    CenterImage::Line(l) => {
                        let l = frame.line(l);
                        if let Some((a, b)) = view.clip(&l) {
                            let extra = format!(" data-path=\"{path}\" data-slope=\"{}\"", l.slope_ratio());
                            body.push_str(&segment("locus-line", &extra, &a, &b));
                        }
                    }
                    CenterImage::Conic(_) | CenterImage::Points(_) => {
                        let polys = slope_path_polys(&frame.cfg);
                        for run in traced_centers(frame, &polys, &view) {
                            let _ = writeln!(body, "    <path class=\"locus-curve\" data-path=\"{path}\" d=\"{}\"/>", path_data(&run));
                        }
                    }
                    CenterImage::Point(p) => {
                        let p = frame.point(p);
                        let _ = writeln!(body, "    <circle class=\"locus-point\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(&p.0), num(&p.1), num(&(&width / Rational::from_integer(200.into()))));
                    }
                    CenterImage::Empty => {}
                }
            }
        }
        None => {
            if let Ok(r) = quadriline_core::locus::all_parallel_analysis(input) {
                if let Some((a, b)) = r.midline.as_ref().and_then(|m| view.clip(m)) {
                    let extra = format!(" data-path=\"midline\" data-slope=\"{}\"", r.midline.as_ref().expect("midline").slope_ratio());
                    body.push_str(&segment("locus-line", &extra, &a, &b));
                }
            }
        }
    }
    body.push_str("  </g>\n");

    if options.diagonals {
        body.push_str("  <g id=\"diagonals\" stroke=\"#27ae60\" stroke-dasharray=\"6 4\">\n");
        // E: A∩B and C∩D. F: A∩D and B∩C. G: A∩C and B∩D.
        let [a, b, c, d] = [&input.first.0, &input.second.0, &input.first.1, &input.second.1];
        for (name, p, q) in [("E", a.intersection(b), c.intersection(d)), ("F", a.intersection(d), b.intersection(c)), ("G", a.intersection(c), b.intersection(d))] {
            let Some((p, q)) = p.zip(q).filter(|(p, q)| p != q) else { continue };
            let dir = (&q.0 - &p.0, &q.1 - &p.1);
            let through = InputLine::new(dir.1.clone(), -dir.0.clone(), &dir.1 * &p.0 - &dir.0 * &p.1).expect("distinct points");
            if let Some((s, e)) = view.clip(&through) {
                body.push_str(&segment("diagonal", &format!(" data-name=\"{name}\""), &s, &e));
            }
        }
        body.push_str("  </g>\n");
    }

    let flip = &view.min.1 + &view.max.1;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH_PX}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        num(&height_px),
        num(&view.min.0),
        num(&view.min.1),
        num(&width),
        num(&height)
    );
    svg.push_str("<style>line, path, circle { vector-effect: non-scaling-stroke; stroke-width: 1.5px; }</style>\n");
    let _ = writeln!(svg, "<g transform=\"matrix(1 0 0 -1 0 {})\">", num(&flip));
    svg.push_str(&body);
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
