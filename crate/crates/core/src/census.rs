//! Brute-force enumeration of every rectangle over a prime field, compared
//! against the slope and aspect paths.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;

use crate::configuration::NormalizedConfig;
use crate::paths::{aspect_path_polys, slope_path_polys};
use crate::ratio::{sample_ratios, Measure, Ratio};
use crate::rectangle::{
    complete_parallelogram, quadric_h, rectangle_from_aspect, rectangle_from_slope, ProjectiveRectangle, RectangleSet,
};
use crate::scalar::{Field, FiniteField};

/// Every point `(x_A : x_B : w)` of the parameter plane once: `(x_A, x_B, 1)`,
/// then `(x_A, 1, 0)`, then `(1, 0, 0)`.
pub fn parameters<F: FiniteField>() -> Vec<[F; 3]> {
    let els = F::elements();
    let mut out = Vec::with_capacity(els.len() * els.len() + els.len() + 1);
    for a in &els {
        for b in &els {
            out.push([a.clone(), b.clone(), F::one()]);
        }
    }
    for a in &els {
        out.push([a.clone(), F::one(), F::zero()]);
    }
    out.push([F::one(), F::zero(), F::zero()]);
    out
}

/// All rectangles of `PC`, in parameter order.
pub fn enumerate_rectangles<F: FiniteField>(cfg: &NormalizedConfig<F>) -> Vec<ProjectiveRectangle<F>> {
    parameters::<F>()
        .into_iter()
        .map(|[a, b, w]| complete_parallelogram(cfg, &a, &b, &w))
        .filter(|p| p.is_rectangle())
        .collect()
}

/// Affine points of a rectangle set, found by enumerating the span.
pub fn affine_members<F: FiniteField>(set: &RectangleSet<F>) -> HashSet<ProjectiveRectangle<F>> {
    match set {
        RectangleSet::Points(p) => p.iter().filter(|r| !r.is_at_infinity()).cloned().collect(),
        RectangleSet::Span(gens) => {
            let els = F::elements();
            let mut out = HashSet::new();
            let mut idx = vec![0usize; gens.len()];
            loop {
                let coords: [F; 9] = std::array::from_fn(|k| {
                    gens.iter()
                        .zip(&idx)
                        .fold(F::zero(), |acc, (g, &i)| acc + els[i].clone() * g.coords()[k].clone())
                });
                if let Some(p) = ProjectiveRectangle::new(coords) {
                    if !p.is_at_infinity() {
                        out.insert(p);
                    }
                }
                // Next multi-index.
                let mut pos = 0;
                loop {
                    if pos == idx.len() {
                        return out;
                    }
                    idx[pos] += 1;
                    if idx[pos] < els.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub modulus: u64,
    pub total: usize,
    pub at_infinity: usize,
    /// Rectangle counts keyed by slope (`"indeterminate"` for point-like ones).
    pub by_slope: BTreeMap<String, usize>,
    pub by_aspect: BTreeMap<String, usize>,
    pub slope_image: usize,
    pub aspect_image: usize,
    pub degenerate: bool,
    /// Census = π-image ∪ φ-image.
    pub union_covered: bool,
    /// At most two rectangles at infinity without twin or dual pairs.
    pub at_infinity_bound_ok: bool,
    /// Degenerate: constant aspect on π, constant slope (that of `F`) on φ.
    /// Non-degenerate: π-image = φ-image and `π(r)` has slope exactly `r`.
    pub degenerate_consistency_ok: bool,
    /// The rectangle count equals the number of zeros of `h`.
    pub quadric_count_ok: bool,
    /// The slope and aspect linear systems find exactly the census rectangles.
    pub systems_ok: bool,
    /// The first failed check and a point witnessing it.
    pub witness: Option<String>,
}

impl CensusReport {
    pub fn all_ok(&self) -> bool {
        self.union_covered
            && self.at_infinity_bound_ok
            && self.degenerate_consistency_ok
            && self.quadric_count_ok
            && self.systems_ok
    }
}

fn measure_key<F: Field>(m: Option<Measure<F>>) -> String {
    match m {
        Some(m) => m.to_string(),
        None => "none".into(),
    }
}

/// Runs the census and checks it against both paths.
pub fn verify_against_paths<F: FiniteField>(cfg: &NormalizedConfig<F>) -> CensusReport {
    let census = enumerate_rectangles(cfg);
    let census_set: HashSet<_> = census.iter().cloned().collect();
    let class = cfg.classify();
    let ratios = sample_ratios::<F>(usize::MAX);
    let pi = slope_path_polys(cfg);
    let phi = aspect_path_polys(cfg);
    let slope_pts: Vec<_> = ratios.iter().map(|r| pi.eval(r)).collect();
    let aspect_pts: Vec<_> = ratios.iter().map(|r| phi.eval(r)).collect();
    let slope_set: HashSet<_> = slope_pts.iter().cloned().collect();
    let aspect_set: HashSet<_> = aspect_pts.iter().cloned().collect();

    let mut witness: Option<String> = None;
    let mut fail = |what: &str, p: &ProjectiveRectangle<F>| {
        if witness.is_none() {
            witness = Some(format!("{what}: {p}"));
        }
        false
    };

    let mut union_covered = true;
    for p in &census {
        if !slope_set.contains(p) && !aspect_set.contains(p) {
            union_covered = fail("census rectangle on neither path", p);
        }
    }
    for p in slope_set.iter().chain(&aspect_set) {
        if !census_set.contains(p) {
            union_covered = fail("path point missing from census", p);
        }
    }

    let at_infinity = census.iter().filter(|p| p.is_at_infinity()).count();
    let at_infinity_bound_ok = class.twin_pairs || class.dual_pairs || at_infinity <= 2;
    if !at_infinity_bound_ok {
        let p = census.iter().find(|p| p.is_at_infinity()).expect("some");
        fail("more than two rectangles at infinity", p);
    }

    let mut consistent = true;
    if class.degenerate {
        let aspect = pi.companion_ratio(cfg, &ratios[0]);
        for p in &slope_pts {
            if !p.has_aspect(&aspect) {
                consistent = fail("slope-path aspect not constant", p);
            }
        }
        let f_slope = cfg.f_slope();
        for p in &aspect_pts {
            if !p.has_slope(&f_slope) {
                consistent = fail("aspect-path slope is not that of F", p);
            }
        }
    } else {
        if slope_set != aspect_set {
            let p = slope_set.symmetric_difference(&aspect_set).next().expect("sets differ");
            consistent = fail("slope and aspect images differ", p);
        }
        if slope_set.len() != ratios.len() {
            consistent = fail("slope path not injective", &slope_pts[0]);
        }
        for (r, p) in ratios.iter().zip(&slope_pts) {
            if p.slope_of() != Some(Measure::Ratio(r.clone())) {
                consistent = fail("slope-path rectangle has the wrong slope", p);
            }
        }
    }

    let h = quadric_h(cfg);
    let zeros = parameters::<F>().iter().filter(|[a, b, w]| h.eval(a, b, w).is_zero()).count();
    let quadric_count_ok = zeros == census.len();
    if !quadric_count_ok {
        fail("quadric zero count differs", &census[0]);
    }

    let mut systems_ok = true;
    let affine: Vec<_> = census.iter().filter(|p| !p.is_at_infinity()).collect();
    for r in &ratios {
        let want: HashSet<_> = affine.iter().filter(|p| p.has_slope(r)).map(|p| (*p).clone()).collect();
        if affine_members(&rectangle_from_slope(cfg, r, &F::one())) != want {
            systems_ok = fail(&format!("slope system for {r} disagrees"), &census[0]);
        }
        let want: HashSet<_> = affine.iter().filter(|p| p.has_aspect(r)).map(|p| (*p).clone()).collect();
        if affine_members(&rectangle_from_aspect(cfg, r, &F::one())) != want {
            systems_ok = fail(&format!("aspect system for {r} disagrees"), &census[0]);
        }
    }

    let mut by_slope = BTreeMap::new();
    let mut by_aspect = BTreeMap::new();
    for p in &census {
        *by_slope.entry(measure_key(p.slope_of())).or_insert(0) += 1;
        *by_aspect.entry(measure_key(p.aspect_of())).or_insert(0) += 1;
    }

    CensusReport {
        modulus: F::CHARACTERISTIC,
        total: census.len(),
        at_infinity,
        by_slope,
        by_aspect,
        slope_image: slope_set.len(),
        aspect_image: aspect_set.len(),
        degenerate: class.degenerate,
        union_covered,
        at_infinity_bound_ok,
        degenerate_consistency_ok: consistent,
        quadric_count_ok,
        systems_ok,
        witness,
    }
}

/// A uniformly random normalized configuration, rejecting `m_C = m_D`.
///
/// Over the rationals the constants are small fractions. Returns the
/// configuration and the number of rejected draws.
pub fn random_config<F: Field, R: Rng>(rng: &mut R) -> (NormalizedConfig<F>, usize) {
    let mut rejected = 0;
    loop {
        let mut draw = || -> F {
            if F::CHARACTERISTIC == 0 {
                F::from_i64(rng.gen_range(-9..=9)) / F::from_i64(rng.gen_range(1..=4))
            } else {
                F::from_i64(rng.gen_range(0..F::CHARACTERISTIC as i64))
            }
        };
        let (a, b, c, d, k) = (draw(), draw(), draw(), draw(), draw());
        match NormalizedConfig::new(a, b, c, d, k) {
            Ok(cfg) => {
                if rejected > 0 {
                    log::debug!("random_config: rejected {rejected} draws with m_C = m_D");
                }
                return (cfg, rejected);
            }
            Err(_) => rejected += 1,
        }
    }
}

/// Proportion of sampled slopes `r` whose rectangle `π(r)` is affine.
pub fn affine_fraction<F: FiniteField>(cfg: &NormalizedConfig<F>) -> (usize, usize) {
    let pi = slope_path_polys(cfg);
    let ratios: Vec<Ratio<F>> = sample_ratios(usize::MAX);
    let affine = ratios.iter().filter(|r| !pi.eval(r).is_at_infinity()).count();
    (affine, ratios.len())
}
