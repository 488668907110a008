use bianchi_deform::bianchi::{holonomy, swan_presentation, Representation};
use bianchi_deform::continuation::*;
use bianchi_deform::exactfield::{rat, QuadReal, Rational, Scalar};
use bianchi_deform::family3::rho_u;
use bianchi_deform::linalg::Matrix;
use bianchi_deform::tangent::relation_residuals;
use proptest::prelude::*;

const BITS: u32 = 232;

fn numeric_holonomy() -> Representation<Real> {
    holonomy(3).unwrap().map(|x| Real::from_quad_real(x, BITS))
}

fn max_residual(r: &Representation<Real>) -> f64 {
    let p = swan_presentation(3).unwrap();
    relation_residuals(&p, r).unwrap().flatten().iter().map(|x| x.abs().to_f64()).fold(0.0, f64::max)
}

fn max_diff(a: &Representation<Real>, b: &Representation<Real>) -> f64 {
    a.images
        .iter()
        .zip(&b.images)
        .flat_map(|(x, y)| x.data().iter().zip(y.data()).map(|(p, q)| (p.clone() - q.clone()).abs().to_f64()))
        .fold(0.0, f64::max)
}

#[test]
fn perturbation_is_deterministic_and_first_order() {
    let _g = PrecisionGuard::set(BITS);
    let h = numeric_holonomy();
    assert_eq!(max_diff(&perturb(&h, 0.0, 1), &h), 0.0);
    let a = perturb(&h, 1e-3, 42);
    assert_eq!(max_diff(&a, &perturb(&h, 1e-3, 42)), 0.0);
    assert!(max_diff(&a, &perturb(&h, 1e-3, 43)) > 0.0);
    assert!(max_diff(&a, &h) <= 1e-3);
    let res = max_residual(&a);
    assert!((1e-5..1e-1).contains(&res), "residual {res}");
}

#[test]
fn pins_are_exact_at_known_points() {
    let h = holonomy(3).unwrap();
    let four = QuadReal::from_int(4);
    let six = QuadReal::from_int(6);
    assert_eq!(charpoly_coefficients(h.image('T').unwrap()), [four.clone(), six, four]);
    // t = 2 + 1/2 is u = 2
    let r = rho_u(&rat(2, 1)).unwrap();
    assert_eq!(charpoly_coefficients(r.image('T').unwrap()), [rat(9, 2), rat(7, 1), rat(9, 2)]);
    let pins = charpoly_pin(&rat(5, 2));
    let targets: Vec<Rational> = pins
        .iter()
        .map(|c| match c {
            Constraint::CharpolyCoefficient { target, .. } => target.clone(),
            other => panic!("unexpected {other:?}"),
        })
        .collect();
    assert_eq!(targets, [rat(9, 2), rat(7, 1), rat(9, 2)]);
    // a generic matrix violates them
    let m: Matrix<Real> = Matrix::from_rationals(&Matrix::from_rows(vec![
        vec![rat(2, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1), rat(3, 1), rat(0, 1)],
        vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1)],
        vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(5, 1)],
    ]));
    assert!(!charpoly_matches(&m, &rat(5, 2), &Real::with_prec(BITS, 1e-10)));
}

#[test]
fn newton_on_the_variety_stops_immediately() {
    let p = swan_presentation(3).unwrap();
    let out = newton_refine(&p, &numeric_holonomy(), &charpoly_pin(&rat(2, 1)), &NewtonSettings::default()).unwrap();
    assert!(out.iterations <= 1);
    assert!(out.residual.to_f64() <= 1e-60);
}

#[test]
fn unpinned_newton_lands_near_but_off_the_holonomy() {
    let p = swan_presentation(3).unwrap();
    let settings = NewtonSettings::default();
    let out = newton_refine(&p, &perturb(&numeric_holonomy(), 1e-3, 7), &[], &settings).unwrap();
    assert!(out.residual.to_f64() <= settings.residual_target);
    assert!(max_residual(&out.representation) <= settings.residual_target);
    for m in &out.representation.images {
        assert!((m.det() - Real::one()).abs().to_f64() <= settings.residual_target);
    }
    // close to the holonomy, but with trace of T different from 4
    assert!(max_diff(&out.representation, &numeric_holonomy()) < 1e-1);
    let e1 = charpoly_coefficients(out.representation.image('T').unwrap())[0].to_f64();
    assert!((e1 - 4.0).abs() > 1e-12, "trace {e1}");
}

#[test]
fn pinned_newton_reaches_the_pinned_charpoly() {
    let p = swan_presentation(3).unwrap();
    let settings = NewtonSettings::default();
    let t = rat(21, 10);
    let out = newton_refine(&p, &perturb(&numeric_holonomy(), 1e-3, 7), &charpoly_pin(&t), &settings).unwrap();
    assert!(out.iterations <= 30, "{:?}", out.history);
    let tol = Real::with_prec(BITS, settings.residual_target);
    assert!(charpoly_matches(out.representation.image('T').unwrap(), &t, &tol));
    // the tail of the history converges quadratically
    let h = &out.history;
    let k = h.len() - 1;
    assert!(h[k].log10() <= 1.5 * h[k - 1].log10(), "{h:?}");
}

#[test]
fn settings_are_validated() {
    let p = swan_presentation(3).unwrap();
    let s = NewtonSettings { precision_digits: 30, ..Default::default() };
    assert!(matches!(
        newton_refine(&p, &numeric_holonomy(), &[], &s),
        Err(NewtonError::Settings(SettingsError::TargetBelowFloor { .. }))
    ));
}

#[test]
fn iteration_budget_failure_carries_history() {
    let p = swan_presentation(3).unwrap();
    let s = NewtonSettings { max_iterations: 2, ..Default::default() };
    let err = newton_refine(&p, &perturb(&numeric_holonomy(), 1e-3, 7), &charpoly_pin(&rat(5, 2)), &s).unwrap_err();
    assert!(matches!(err, NewtonError::MaxIterations { iterations: 2, .. }));
    assert_eq!(err.history().len(), 3);
}

#[test]
fn schedule_at_two_returns_the_holonomy() {
    let p = swan_presentation(3).unwrap();
    let pts = trace_schedule(&p, &numeric_holonomy(), &[rat(2, 1)], &NewtonSettings::default()).unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].iterations, 0);
    assert!(pts[0].charpoly_check);
    // the normal form of the holonomy is the family at u = 1
    let rho1 = rho_u(&rat(1, 1)).unwrap().map(|x| Real::from_rational_prec(x, BITS));
    assert!(max_diff(&pts[0].representation, &rho1) < 1e-50);
}

#[test]
fn coarse_schedule_fails_with_partial_results() {
    let p = swan_presentation(3).unwrap();
    let s = NewtonSettings { max_iterations: 15, ..Default::default() };
    let start = perturb(&numeric_holonomy(), 1e-3, 7);
    let err = trace_schedule(&p, &start, &[rat(41, 20), rat(40, 1)], &s).unwrap_err();
    assert_eq!(err.completed().len(), 1);
    assert!(matches!(err, ScheduleError::Newton { ref t, .. } if *t == rat(40, 1)));
}

#[test]
fn linear_schedule_endpoints() {
    let ts = linear_schedule(&rat(2, 1), &rat(5, 2), 20);
    assert_eq!(ts.len(), 20);
    assert_eq!(ts[0], rat(81, 40));
    assert_eq!(ts[19], rat(5, 2));
}

#[test]
fn exact_normal_form_fixes_the_family_and_maps_the_holonomy_to_it() {
    for u in [rat(2, 1), rat(-5, 3)] {
        let r = rho_u(&u).unwrap();
        assert_eq!(normal_form_exact(&r).unwrap().0, r);
    }
    let rho1 = rho_u(&rat(1, 1)).unwrap().map(|x| QuadReal::rational_in(3, x.clone()));
    assert_eq!(normal_form_exact(&holonomy(3).unwrap()).unwrap().0, rho1);
}

#[test]
fn normal_form_rejects_missing_generators() {
    let r = rho_u(&rat(2, 1)).unwrap();
    let renamed = Representation::new(vec!['W', 'X', 'Y', 'Z'], r.images);
    assert_eq!(normal_form_exact(&renamed).unwrap_err(), NormalizeError::MissingGenerator('T'));
}

/// Family points at `u = ULarger(t)` for the given `t`, as normalized samples.
fn planted_points(ts: &[Rational]) -> Vec<PathPoint> {
    let _g = PrecisionGuard::set(BITS);
    ts.iter()
        .map(|t| {
            let u = Parameter::ULarger.value_at(&Real::from_rational_prec(t, BITS));
            PathPoint {
                t_value: t.clone(),
                representation: rho_u(&u).unwrap(),
                residual: Real::zero(),
                iterations: 0,
                charpoly_check: true,
            }
        })
        .collect()
}

#[test]
fn reconstruction_recovers_a_planted_family() {
    let p = swan_presentation(3).unwrap();
    let pts = planted_points(&linear_schedule(&rat(2, 1), &rat(5, 2), 12));
    let cfg = FitConfig::new(4, 60);
    let c = reconstruct_family(&p, &pts, &cfg, &Real::with_prec(BITS, 1e-35)).unwrap();
    assert_eq!(c.parameter, Parameter::ULarger);
    assert!(c.verified);
    assert_eq!(c.representation(), bianchi_deform::family3::rho_symbolic());
}

#[test]
fn reconstruction_needs_enough_samples() {
    let p = swan_presentation(3).unwrap();
    let pts = planted_points(&linear_schedule(&rat(2, 1), &rat(5, 2), 5));
    let cfg = FitConfig::new(4, 60);
    assert_eq!(
        reconstruct_family(&p, &pts, &cfg, &Real::with_prec(BITS, 1e-35)).unwrap_err(),
        ReconstructError::TooFewSamples { needed: 9, got: 5 }
    );
}

#[test]
fn reconstruction_reports_unfittable_entries() {
    let p = swan_presentation(3).unwrap();
    let mut pts = planted_points(&linear_schedule(&rat(2, 1), &rat(5, 2), 12));
    // corrupt one entry of L at one sample
    let li = pts[0].representation.generator_names.iter().position(|&g| g == 'L').unwrap();
    let mut rows = pts[3].representation.images[li].to_rows();
    rows[0][0] = rows[0][0].clone() + Real::with_prec(BITS, 1e-6);
    pts[3].representation.images[li] = Matrix::from_rows(rows);
    let cfg = FitConfig::new(4, 60);
    let err = reconstruct_family(&p, &pts, &cfg, &Real::with_prec(BITS, 1e-35)).unwrap_err();
    assert_eq!(err, ReconstructError::Inconsistent { entries: vec![('L', 0, 0)] });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn normal_form_is_a_conjugacy_invariant(entries in proptest::collection::vec(-3i64..=3, 16), n in 2i64..9) {
        let g = Matrix::from_vec(4, 4, entries.iter().map(|&x| rat(x, 1)).collect());
        let g = &g + &Matrix::identity(4).scale(&rat(7, 1));
        prop_assume!(!g.det().is_zero());
        let _guard = PrecisionGuard::set(BITS);
        let r = rho_u(&rat(n, 3)).unwrap();
        let conj = r.conjugate(&g, &g.inverse().unwrap());
        let num = |r: &Representation<Rational>| r.map(|x| Real::from_rational_prec(x, BITS));
        let a = normalize_conjugacy(&num(&r)).unwrap();
        let b = normalize_conjugacy(&num(&conj)).unwrap();
        prop_assert!(max_diff(&a, &b) < 1e-45);
        let again = normalize_conjugacy(&a).unwrap();
        prop_assert!(max_diff(&a, &again) < 1e-45);
    }
}

#[test]
fn path_records_round_trip_through_json() {
    let pts = planted_points(&linear_schedule(&rat(2, 1), &rat(5, 2), 3));
    let rec = PathRecord::new(3, 60, &pts);
    let json = serde_json::to_string(&rec).unwrap();
    let back: PathRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(back, rec);
    let restored = back.to_points().unwrap();
    for (a, b) in pts.iter().zip(&restored) {
        assert_eq!(a.t_value, b.t_value);
        assert!(max_diff(&a.representation, &b.representation) < 1e-65);
    }
    let mut bad = rec.clone();
    bad.points[0].images[0][0][0] = "zero".into();
    assert!(matches!(bad.to_points(), Err(RecordError::Parse { .. })));
    bad = rec;
    bad.points[0].generators = "TU".into();
    assert!(matches!(bad.to_points(), Err(RecordError::Arity { generators: 2, images: 4 })));
}

#[test]
fn family_records_are_exact() {
    let p = swan_presentation(3).unwrap();
    let pts = planted_points(&linear_schedule(&rat(2, 1), &rat(5, 2), 12));
    let c = reconstruct_family(&p, &pts, &FitConfig::new(4, 60), &Real::with_prec(BITS, 1e-35)).unwrap();
    let rec = FamilyRecord::from_candidate(&c);
    assert_eq!(rec.variable, "u");
    let back: FamilyRecord = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(back.representation().unwrap(), c.representation());
    assert!(back.verified && back.verdicts.iter().all(|v| v.pass));
}
