use super::newton::{charpoly_coefficients, charpoly_pin, newton_refine, NewtonError};
use super::normalize::{normalize_conjugacy, NormalizeError};
use super::real::Real;
use super::settings::NewtonSettings;
use crate::bianchi::{Presentation, Representation};
use crate::exactfield::{Rational, Scalar};

/// One refined, normalized sample of the deformation curve.
#[derive(Clone, Debug)]
pub struct PathPoint {
    pub t_value: Rational,
    pub representation: Representation<Real>,
    pub residual: Real,
    pub iterations: usize,
    /// The image of `T` has the pinned characteristic polynomial to within
    /// the residual target.
    pub charpoly_check: bool,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ScheduleError {
    #[error("refinement failed at t = {t}: {source}")]
    Newton {
        t: Rational,
        source: Box<NewtonError>,
        /// Points completed before the failure.
        completed: Vec<PathPoint>,
    },
    #[error("normalization failed at t = {t}: {source}")]
    Normalize { t: Rational, source: NormalizeError, completed: Vec<PathPoint> },
}

impl ScheduleError {
    pub fn completed(&self) -> &[PathPoint] {
        match self {
            ScheduleError::Newton { completed, .. } | ScheduleError::Normalize { completed, .. } => completed,
        }
    }
}

/// `steps` evenly spaced parameters `from + (to − from)·i/steps`, `i = 1..=steps`.
pub fn linear_schedule(from: &Rational, to: &Rational, steps: usize) -> Vec<Rational> {
    (1..=steps)
        .map(|i| from + (to - from) * Rational::new((i as i64).into(), (steps as i64).into()))
        .collect()
}

/// Whether `m` has the characteristic polynomial pinned at `t` to within `tol`.
pub fn charpoly_matches(m: &crate::linalg::Matrix<Real>, t: &Rational, tol: &Real) -> bool {
    let two = Rational::from_integer(2.into());
    let want = [&two + t, &two + &two * t, &two + t];
    charpoly_coefficients(m)
        .into_iter()
        .zip(want)
        .all(|(got, w)| (got - Real::from_rational(&w)).abs() <= *tol)
}

/// Warm-started continuation: refine at each `t` from the previous point
/// (the first from `start`), then normalize.
pub fn trace_schedule(
    p: &Presentation,
    start: &Representation<Real>,
    t_list: &[Rational],
    settings: &NewtonSettings,
) -> Result<Vec<PathPoint>, ScheduleError> {
    let mut points: Vec<PathPoint> = Vec::with_capacity(t_list.len());
    let bits = settings.bits();
    let tol = Real::with_prec(bits, settings.residual_target);
    let mut current = start.clone();
    for t in t_list {
        let pins = charpoly_pin(t);
        let outcome = match newton_refine(p, &current, &pins, settings) {
            Ok(o) => o,
            Err(source) => return Err(ScheduleError::Newton { t: t.clone(), source: Box::new(source), completed: points }),
        };
        let normalized = match normalize_conjugacy(&outcome.representation) {
            Ok(n) => n,
            Err(source) => return Err(ScheduleError::Normalize { t: t.clone(), source, completed: points }),
        };
        let t_image = normalized.image('T').expect("normal form keeps T");
        let charpoly_check = charpoly_matches(t_image, t, &tol);
        log::info!("t = {t}: {} iterations, residual {:e}", outcome.iterations, outcome.residual.to_f64());
        current = outcome.representation;
        points.push(PathPoint {
            t_value: t.clone(),
            representation: normalized,
            residual: outcome.residual,
            iterations: outcome.iterations,
            charpoly_check,
        });
    }
    Ok(points)
}
