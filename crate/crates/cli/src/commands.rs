use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use bianchi_deform::bianchi::{catalog_entry, holonomy, matrix_strings, swan_presentation, CATALOG};
use bianchi_deform::continuation::{
    bits_for_digits, linear_schedule, perturb, reconstruct_family, trace_schedule, FamilyRecord, FitConfig,
    NewtonSettings, PathRecord, Real,
};
use bianchi_deform::exactfield::{circle_point, format_rational, parse_rational, ExactString, QuadImag, Rational, Scalar};
use bianchi_deform::family3::{
    classify_isometry, det_wall_analysis, discreteness_obstruction, hermitian_form_at, holonomy_conjugator,
    match_family, rho_u, verify_family, IsometryClass,
};
use bianchi_deform::linalg::{rank, Matrix};
use bianchi_deform::tangent::{tangent_report, TangentReport};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::Timer;

/// Output of a command: a JSON payload, or the tangent table as CSV.
pub enum Output {
    Json { inputs: Value, results: Value },
    Csv(String),
}

pub fn parse_q(s: &str) -> Result<Rational> {
    parse_rational(s).with_context(|| format!("cannot parse rational {s:?}"))
}

pub fn catalog(d: Option<u64>) -> Result<Output> {
    let ds: Vec<u64> = d.map_or(CATALOG.to_vec(), |d| vec![d]);
    let entries = ds.iter().map(|&d| catalog_entry(d)).collect::<Result<Vec<_>, _>>()?;
    Ok(Output::Json { inputs: json!({ "d": ds }), results: serde_json::to_value(entries)? })
}

pub const CSV_HEADER: &str = "d,ambient,rank,kernel,b1,h1";

pub fn tangent_csv(reports: &[TangentReport]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.d.map_or(String::new(), |d| d.to_string()),
            r.ambient_dim,
            r.jacobian_rank,
            r.kernel_dim,
            r.b1_dim,
            r.h1_dim
        ));
    }
    out
}

pub fn tangent(ds: &[u64], cocycles: bool, jobs: usize, csv: bool, timer: &mut Timer) -> Result<Output> {
    for &d in ds {
        swan_presentation(d)?;
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let reports = timer.stage("tangent", || {
        pool.install(|| ds.par_iter().map(|&d| tangent_report(d, cocycles)).collect::<Result<Vec<_>, _>>())
    })?;
    if csv {
        return Ok(Output::Csv(tangent_csv(&reports)));
    }
    Ok(Output::Json { inputs: json!({ "d": ds, "cocycles": cocycles }), results: serde_json::to_value(reports)? })
}

pub struct NewtonArgs {
    pub d: u64,
    pub t_from: Rational,
    pub t_to: Rational,
    pub steps: usize,
    pub settings: NewtonSettings,
    pub seed: u64,
    pub perturbation: f64,
}

pub fn newton(a: &NewtonArgs, timer: &mut Timer) -> Result<(Output, bool)> {
    if a.d != 3 {
        bail!("continuation is implemented for d = 3 only, got d = {}", a.d);
    }
    if a.steps == 0 {
        bail!("--steps must be positive");
    }
    a.settings.validate()?;
    let p = swan_presentation(a.d)?;
    let bits = bits_for_digits(a.settings.precision_digits);
    let start = perturb(&holonomy(a.d)?.map(|x| Real::from_quad_real(x, bits)), a.perturbation, a.seed);
    let ts = linear_schedule(&a.t_from, &a.t_to, a.steps);
    let traced = timer.stage("newton", || trace_schedule(&p, &start, &ts, &a.settings));
    let inputs = json!({
        "d": a.d,
        "t_from": format_rational(&a.t_from),
        "t_to": format_rational(&a.t_to),
        "steps": a.steps,
        "precision_digits": a.settings.precision_digits,
        "residual_target": a.settings.residual_target,
        "max_iterations": a.settings.max_iterations,
        "seed": a.seed,
        "perturbation": a.perturbation,
    });
    let (points, failure) = match traced {
        Ok(points) => (points, None),
        Err(e) => (e.completed().to_vec(), Some(e.to_string())),
    };
    let record = PathRecord::new(a.d, a.settings.precision_digits, &points);
    let summary = json!({
        "points": points.len(),
        "max_iterations": points.iter().map(|p| p.iterations).max(),
        "max_residual": points.iter().map(|p| p.residual.clone()).reduce(Real::max).map(|r| r.to_decimal(6)),
        "charpoly_checks_pass": points.iter().all(|p| p.charpoly_check),
        "failure": failure,
    });
    let ok = failure.is_none();
    Ok((Output::Json { inputs, results: json!({ "summary": summary, "path": record }) }, ok))
}

/// Read a path written by `newton`: either its full report or a bare path record.
pub fn read_path(path: &Path) -> Result<PathRecord> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("{} is not JSON", path.display()))?;
    let inner = value.pointer("/results/path").cloned().unwrap_or(value);
    serde_json::from_value(inner).with_context(|| format!("{} does not contain a path record", path.display()))
}

pub fn reconstruct(input: &Path, max_degree: usize, tolerance: f64, timer: &mut Timer) -> Result<Output> {
    let record = read_path(input)?;
    let points = record.to_points()?;
    let p = swan_presentation(record.d)?;
    let bits = bits_for_digits(record.precision_digits);
    let cfg = FitConfig::new(max_degree, record.precision_digits);
    let candidate =
        timer.stage("reconstruct", || reconstruct_family(&p, &points, &cfg, &Real::with_prec(bits, tolerance)))?;
    let reference_match = match_family(&candidate.representation());
    Ok(Output::Json {
        inputs: json!({ "in": input.display().to_string(), "max_degree": max_degree, "tolerance": tolerance }),
        results: json!({ "family": FamilyRecord::from_candidate(&candidate), "reference_family": reference_match }),
    })
}

pub fn family_verify(timer: &mut Timer) -> Result<Output> {
    let verification = timer.stage("relators", verify_family);
    let conjugator = timer.stage("conjugator", holonomy_conjugator)?;
    let conjugator = conjugator.map(|c| {
        json!({
            "matrix": matrix_strings(&c.matrix),
            "intertwiner_dim": c.intertwiner_dim,
            "verified": c.verified,
        })
    });
    Ok(Output::Json {
        inputs: json!({}),
        results: json!({
            "all_pass": verification.all_pass(),
            "relators": verification.relators,
            "unimodular": verification.unimodular,
            "holonomy_conjugator": conjugator,
        }),
    })
}

fn circle_inputs(q: &Rational) -> (Rational, Rational, QuadImag, Value) {
    let c = circle_point(q);
    let u = c.to_complex();
    let inputs = json!({
        "q": format_rational(q),
        "s": format_rational(c.s()),
        "t": format_rational(c.t()),
        "u": u.to_exact_string(),
    });
    (c.s().clone(), c.t().clone(), u, inputs)
}

fn wall_side(s: &Rational) -> &'static str {
    let quarter = Rational::new(1.into(), 4.into());
    match s.cmp(&quarter) {
        std::cmp::Ordering::Greater => "above",
        std::cmp::Ordering::Less => "below",
        std::cmp::Ordering::Equal => "wall",
    }
}

pub fn family_signature(q: &Rational) -> Result<Output> {
    let (s, t, _, inputs) = circle_inputs(q);
    let h = hermitian_form_at(&s, &t)?;
    let (p, n) = h.inertia.up_to_sign();
    let results = json!({
        "side": wall_side(&s),
        "matrix": matrix_strings(&h.matrix),
        "form": h,
        "signature_up_to_sign": [p, n],
    });
    Ok(Output::Json { inputs, results })
}

pub fn family_wall() -> Result<Output> {
    Ok(Output::Json { inputs: json!({}), results: serde_json::to_value(det_wall_analysis())? })
}

#[derive(Serialize)]
struct EigenRecord {
    value: String,
    algebraic: usize,
    geometric: usize,
    unit_modulus: bool,
}

#[derive(Serialize)]
struct IsometryRecord {
    generator: char,
    class: IsometryClass,
    diagonalizable: bool,
    rank_minus_identity: usize,
    eigen_data: Vec<EigenRecord>,
}

pub fn classify(q: &Rational) -> Result<Output> {
    let (s, t, u, inputs) = circle_inputs(q);
    let rho = rho_u(&u)?;
    let mut candidates = vec![QuadImag::one()];
    for c in [u.clone(), u.inv().context("u is a unit")?] {
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    let id = Matrix::<QuadImag>::identity(4);
    let isometries = ['T', 'U']
        .iter()
        .map(|&g| {
            let m = rho.image(g).expect("family generator");
            let v = classify_isometry(m, &candidates)?;
            Ok(IsometryRecord {
                generator: g,
                class: v.class,
                diagonalizable: v.diagonalizable,
                rank_minus_identity: rank(&(m - &id)),
                eigen_data: v
                    .eigen_data
                    .iter()
                    .map(|e| EigenRecord {
                        value: e.value.to_exact_string(),
                        algebraic: e.algebraic,
                        geometric: e.geometric,
                        unit_modulus: e.unit_modulus,
                    })
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let form = hermitian_form_at(&s, &t)?;
    let results = json!({
        "isometries": isometries,
        "discreteness": discreteness_obstruction(&u)?,
        "form_side": wall_side(&s),
        "form_inertia": form.inertia,
    });
    Ok(Output::Json { inputs, results })
}
