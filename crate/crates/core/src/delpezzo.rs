//! End-to-end del Pezzo projection pipeline: build the determinantal surface
//! ideals, draw a projection center disjoint from the secant variety,
//! project into P^5 by a ring-map kernel, report the minimal generator
//! degrees of the image, and search for a smooth cubic hypersurface through
//! it.
//!
//! The degree-8 surface is the anticanonical image of the plane blown up in
//! one point, cut out in P^8 by the 2x2 minors of the 3x5 matrix whose rows
//! are s, t, u times the column monomials (s^2, st, su, t^2, tu) under the
//! labeling x0..x8 = s^3, s^2 t, s^2 u, s t^2, s t u, s u^2, t^3, t^2 u,
//! t u^2. The degree-7 variant drops the t^2 column and the t^3 coordinate,
//! landing in P^7. An implicitization constructor rebuilds both ideals from
//! the parametrization and the pipeline's tests assert the two agree.

use crate::elim::{ring_map_kernel, saturate};
use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::groebner::{groebner_basis_with, Budget};
use crate::hilbert::{is_projectively_empty, minimal_generator_degrees};
use crate::ideal::{jacobian_ideal, Ideal};
use crate::matrix::{minors_ideal, PolyMatrix};
use crate::monomial::MonomialOrder;
use crate::poly::{random_linear_forms, Polynomial};
use crate::ring::PolyRing;
use crate::rng::SplitMix64;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Debug)]
pub enum Variant {
    D8,
    D7,
    Custom(PolyMatrix),
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::D8 => "d8",
            Variant::D7 => "d7",
            Variant::Custom(_) => "custom",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub variant: Variant,
    pub field: Field,
    pub seed: u64,
    pub max_retries: u32,
    pub smoothness_check: bool,
    pub budget: Budget,
}

impl PipelineConfig {
    pub fn new(variant: Variant, field: Field, seed: u64) -> PipelineConfig {
        PipelineConfig {
            variant,
            field,
            seed,
            max_retries: 5,
            smoothness_check: true,
            budget: Budget::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub variant: String,
    pub field_used: String,
    pub seed_used: u64,
    pub center_ok: bool,
    /// Center draws used, including the successful one.
    pub attempts: u32,
    /// Seeds whose centers failed the secant-avoidance check.
    pub failed_seeds: Vec<u64>,
    /// Degrees of the generating set the kernel computation returns (its
    /// reduced basis), as degree -> multiplicity. This is the generating
    /// matrix the transcript reports.
    pub generator_degrees: BTreeMap<String, usize>,
    /// Degrees of a minimal homogeneous generating set, by the degree
    /// sieve. A subset of the above: basis elements expressible through
    /// lower-degree generators are dropped.
    pub minimal_generator_degrees: BTreeMap<String, usize>,
    pub cubic_found: bool,
    pub cubic_smooth: bool,
    /// The cubic that passed (or the last candidate tried).
    pub cubic: Option<String>,
    /// Stage timings in seconds; excluded from canonical JSON output.
    #[serde(skip)]
    pub timings: Vec<(String, f64)>,
}

/// Cubic monomials defining the anticanonical map of the blown-up plane.
/// For D8: all degree-3 monomials in s, t, u except u^3 (one base point).
/// For D7: additionally drop t^3 (two base points).
fn parametrization_exponents(variant: &Variant) -> Result<Vec<[u16; 3]>> {
    match variant {
        Variant::D8 => Ok(vec![
            [3, 0, 0],
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [1, 1, 1],
            [1, 0, 2],
            [0, 3, 0],
            [0, 2, 1],
            [0, 1, 2],
        ]),
        Variant::D7 => Ok(vec![
            [3, 0, 0],
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [1, 1, 1],
            [1, 0, 2],
            [0, 2, 1],
            [0, 1, 2],
        ]),
        Variant::Custom(_) => Err(Error::domain(
            "custom variants carry no parametrization",
        )),
    }
}

/// The parametrization as polynomials in a 3-variable ring.
pub fn parametrization_images(
    variant: &Variant,
    param_ring: &Arc<PolyRing>,
) -> Result<Vec<Polynomial>> {
    if param_ring.nvars != 3 {
        return Err(Error::domain("parametrization ring needs 3 variables"));
    }
    let exps = parametrization_exponents(variant)?;
    Ok(exps
        .iter()
        .map(|e| {
            Polynomial::term(
                param_ring,
                param_ring.field.one(),
                crate::monomial::Monomial::from_exps(e),
            )
        })
        .collect())
}

/// The ambient ring of the surface: 9 variables for D8 (P^8), 8 for D7 (P^7).
pub fn surface_ring(variant: &Variant, field: Field) -> Result<Arc<PolyRing>> {
    let n = match variant {
        Variant::D8 => 9,
        Variant::D7 => 8,
        Variant::Custom(m) => return Ok(m.ring().clone()),
    };
    PolyRing::numbered(field, "x", n, MonomialOrder::GrevLex)
}

/// The 3x5 (or 3x4 for D7) matrix of coordinate linear forms whose 2x2
/// minors cut out the surface.
pub fn surface_matrix(variant: &Variant, field: Field) -> Result<PolyMatrix> {
    let ring = surface_ring(variant, field)?;
    let var = |i: usize| Polynomial::variable(&ring, i);
    match variant {
        Variant::D8 => {
            let entries = vec![
                var(0), var(1), var(2), var(3), var(4),
                var(1), var(3), var(4), var(6), var(7),
                var(2), var(4), var(5), var(7), var(8),
            ];
            PolyMatrix::new(&ring, 3, 5, entries)
        }
        Variant::D7 => {
            let entries = vec![
                var(0), var(1), var(2), var(4),
                var(1), var(3), var(4), var(6),
                var(2), var(4), var(5), var(7),
            ];
            PolyMatrix::new(&ring, 3, 4, entries)
        }
        Variant::Custom(m) => {
            if !m.has_linear_entries() {
                return Err(Error::domain(
                    "custom surface matrix must have linear entries",
                ));
            }
            Ok(m.clone())
        }
    }
}

/// (I, K): the surface ideal (2x2 minors) and the secant-variety ideal
/// (3x3 minors) of the variant's matrix.
pub fn build_surface_ideals(matrix: &PolyMatrix) -> Result<(Ideal, Ideal)> {
    if !matrix.has_linear_entries() {
        return Err(Error::domain("surface matrix must have linear entries"));
    }
    let surface = minors_ideal(matrix, 2)?;
    let secant = minors_ideal(matrix, 3)?;
    Ok((surface, secant))
}

/// Rebuilds the surface ideal from the anticanonical parametrization via a
/// ring-map kernel; the authoritative cross-check for the matrix model.
pub fn implicitization_ideal(variant: &Variant, field: Field, budget: &Budget) -> Result<Ideal> {
    let param_ring = PolyRing::new(field, &["s", "t", "u"], MonomialOrder::GrevLex)?;
    let images = parametrization_images(variant, &param_ring)?;
    let target = surface_ring(variant, field)?;
    let zero = Ideal::zero(&param_ring);
    ring_map_kernel(&zero, &images, &target, budget)
}

fn eval_linear(form: &Polynomial, point: &[Coeff]) -> Coeff {
    let field = form.ring().field;
    let mut acc = field.zero();
    for (c, m) in form.terms() {
        let v = (0..m.nvars()).find(|&v| m.exponent(v) == 1).unwrap();
        acc = field.add(&acc, &field.mul(c, &point[v]));
    }
    acc
}

/// Rank of the coefficient matrix of linear forms, by Gaussian elimination
/// over the field.
fn linear_rank(forms: &[Polynomial]) -> Result<usize> {
    if forms.is_empty() {
        return Ok(0);
    }
    let ring = forms[0].ring().clone();
    let field = ring.field;
    let mut rows: Vec<Vec<Coeff>> = Vec::with_capacity(forms.len());
    for f in forms {
        if !f.ring().same(&ring) {
            return Err(Error::RingMismatch("forms in different rings".into()));
        }
        if f.is_zero() {
            rows.push(vec![field.zero(); ring.nvars]);
            continue;
        }
        if !f.is_homogeneous() || f.degree() != Some(1) {
            return Err(Error::domain(format!("`{f}` is not a linear form")));
        }
        let mut row = vec![field.zero(); ring.nvars];
        for (c, m) in f.terms() {
            let v = (0..m.nvars()).find(|&v| m.exponent(v) == 1).unwrap();
            row[v] = c.clone();
        }
        rows.push(row);
    }
    let ncols = ring.nvars;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col])?;
        for c in 0..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let sub = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &sub);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// True iff the center cut out by the six independent linear forms misses
/// the secant variety: saturate(K + (forms), irrelevant) = (1), so the
/// projection is an isomorphism onto its image.
pub fn check_center(
    k_secant: &Ideal,
    center_forms: &[Polynomial],
    budget: &Budget,
) -> Result<bool> {
    if center_forms.len() != 6 {
        return Err(Error::domain(format!(
            "a projection center needs 6 linear forms, got {}",
            center_forms.len()
        )));
    }
    if linear_rank(center_forms)? != 6 {
        return Err(Error::domain("center forms are linearly dependent"));
    }
    let combined = k_secant.plus(&Ideal::new(k_secant.ring(), center_forms.to_vec())?)?;
    let sat = saturate(&combined, &Ideal::irrelevant(k_secant.ring()), budget)?;
    let gb = groebner_basis_with(&sat, MonomialOrder::GrevLex, budget)?;
    Ok(gb.is_unit())
}

/// Homogeneous ideal of the projected surface in P^5: the kernel of the map
/// sending the P^5 coordinates to the center forms.
pub fn project_surface(
    surface: &Ideal,
    center_forms: &[Polynomial],
    budget: &Budget,
) -> Result<Ideal> {
    let target = PolyRing::numbered(surface.ring().field, "z", 6, MonomialOrder::GrevLex)?;
    ring_map_kernel(surface, center_forms, &target, budget)
}

/// Iterates over the degree-3 generators of J and seeded random
/// combinations of them, returning the first smooth candidate, or the last
/// candidate with `false` after `max_retries` candidates.
pub fn find_smooth_cubic(
    projected: &Ideal,
    seed: u64,
    max_retries: u32,
    budget: &Budget,
) -> Result<(Polynomial, bool)> {
    let cubics: Vec<&Polynomial> = projected
        .generators()
        .iter()
        .filter(|g| g.degree() == Some(3))
        .collect();
    if cubics.is_empty() {
        return Err(Error::domain("projected ideal contains no cubic"));
    }
    let ring = projected.ring().clone();
    let mut rng = SplitMix64::new(seed);
    let mut last: Option<Polynomial> = None;
    for attempt in 0..max_retries.max(1) {
        let candidate = if (attempt as usize) < cubics.len() {
            cubics[attempt as usize].clone()
        } else {
            let mut acc = Polynomial::zero(&ring);
            for g in &cubics {
                let c = match ring.field {
                    Field::Prime(p) => ring.field.from_i64(1 + rng.below(p as u64 - 1) as i64),
                    Field::Rationals => ring.field.from_i64(1 + rng.below(99) as i64),
                };
                acc = acc.add(&g.scale(&c))?;
            }
            acc
        };
        if candidate.is_zero() {
            continue;
        }
        if is_projectively_empty(&jacobian_ideal(&candidate)?, budget)? {
            return Ok((candidate, true));
        }
        last = Some(candidate);
    }
    Ok((last.unwrap_or_else(|| cubics[0].clone()), false))
}

/// Runs build -> center (with retries) -> project -> degrees -> smooth
/// cubic. Deterministic given (variant, field, seed); timings excluded.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineReport> {
    if config.max_retries < 1 {
        return Err(Error::domain("max_retries must be at least 1"));
    }
    let mut timings = Vec::new();
    let mut report = PipelineReport {
        variant: config.variant.name().to_string(),
        field_used: config.field.to_string(),
        seed_used: config.seed,
        center_ok: false,
        attempts: 0,
        failed_seeds: Vec::new(),
        generator_degrees: BTreeMap::new(),
        minimal_generator_degrees: BTreeMap::new(),
        cubic_found: false,
        cubic_smooth: false,
        cubic: None,
        timings: Vec::new(),
    };

    let t = Instant::now();
    let matrix = surface_matrix(&config.variant, config.field)?;
    let (surface, secant) = build_surface_ideals(&matrix)?;
    timings.push(("build".to_string(), t.elapsed().as_secs_f64()));

    let t = Instant::now();
    let ring = surface.ring().clone();
    let mut center: Option<Vec<Polynomial>> = None;
    for attempt in 0..config.max_retries {
        let draw_seed = config.seed.wrapping_add(attempt as u64);
        report.attempts = attempt + 1;
        let forms = random_linear_forms(&ring, 6, draw_seed);
        match check_center(&secant, &forms, &config.budget) {
            Ok(true) => {
                center = Some(forms);
                break;
            }
            Ok(false) => report.failed_seeds.push(draw_seed),
            // Dependent or degenerate draws count as failed attempts.
            Err(Error::Domain(_)) => report.failed_seeds.push(draw_seed),
            Err(e) => return Err(e),
        }
    }
    timings.push(("center".to_string(), t.elapsed().as_secs_f64()));
    let Some(center) = center else {
        report.timings = timings;
        return Ok(report);
    };
    report.center_ok = true;

    let t = Instant::now();
    let projected = project_surface(&surface, &center, &config.budget)?;
    timings.push(("project".to_string(), t.elapsed().as_secs_f64()));

    let t = Instant::now();
    for g in projected.generators() {
        *report
            .generator_degrees
            .entry(g.degree().unwrap_or(0).to_string())
            .or_insert(0) += 1;
    }
    let minimal = minimal_generator_degrees(&projected, &config.budget)?;
    for d in &minimal {
        *report
            .minimal_generator_degrees
            .entry(d.to_string())
            .or_insert(0) += 1;
    }
    timings.push(("degrees".to_string(), t.elapsed().as_secs_f64()));

    report.cubic_found = projected
        .generators()
        .iter()
        .any(|g| g.degree() == Some(3));
    if config.smoothness_check && report.cubic_found {
        let t = Instant::now();
        let (cubic, smooth) =
            find_smooth_cubic(&projected, config.seed, config.max_retries, &config.budget)?;
        report.cubic_smooth = smooth;
        report.cubic = Some(cubic.to_string());
        timings.push(("smooth_cubic".to_string(), t.elapsed().as_secs_f64()));
    }

    report.timings = timings;
    Ok(report)
}

/// Builds a center that provably meets the secant variety: route six
/// hyperplanes through the sum of two random points of the surface. Used to
/// exercise the negative path of `check_center`.
pub fn center_through_secant_point(
    variant: &Variant,
    field: Field,
    seed: u64,
) -> Result<Vec<Polynomial>> {
    let ring = surface_ring(variant, field)?;
    let exps = parametrization_exponents(variant)?;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..64 {
        let draw = |rng: &mut SplitMix64| match field {
            Field::Prime(p) => field.from_i64(rng.below(p as u64) as i64),
            Field::Rationals => field.from_i64(rng.below(1 << 8) as i64),
        };
        let pt_a: Vec<Coeff> = (0..3).map(|_| draw(&mut rng)).collect();
        let pt_b: Vec<Coeff> = (0..3).map(|_| draw(&mut rng)).collect();
        let eval_monomial = |pt: &[Coeff], e: &[u16; 3]| {
            let mut acc = field.one();
            for (v, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    acc = field.mul(&acc, &pt[v]);
                }
            }
            acc
        };
        // A point on a secant line: the sum of two surface points.
        let secant_pt: Vec<Coeff> = exps
            .iter()
            .map(|e| field.add(&eval_monomial(&pt_a, e), &eval_monomial(&pt_b, e)))
            .collect();
        let Some(pivot) = secant_pt.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let pivot_inv = field.inv(&secant_pt[pivot])?;
        let raw = random_linear_forms(&ring, 6, rng.next_u64());
        let mut forms = Vec::with_capacity(6);
        for f in raw {
            // f - (f(v)/v_pivot) * x_pivot vanishes at v.
            let val = eval_linear(&f, &secant_pt);
            let c = field.neg(&field.mul(&val, &pivot_inv));
            let corrected = f.add(&Polynomial::variable(&ring, pivot).scale(&c))?;
            forms.push(corrected);
        }
        if linear_rank(&forms)? == 6 {
            return Ok(forms);
        }
    }
    Err(Error::domain(
        "could not construct a secant-meeting center (degenerate draws)",
    ))
}
