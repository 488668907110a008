use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Float;

use super::numeric::least_squares;
use super::real::{PrecisionGuard, Real};
use super::settings::{NewtonSettings, SettingsError};
use crate::bianchi::{Presentation, Representation};
use crate::exactfield::{Rational, Scalar};
use crate::linalg::Matrix;
use crate::tangent::{jacobian_unchecked, relation_residuals, TangentError};

const N: usize = 4;

/// A scalar polynomial equation on the generator images, added to the
/// relation map during refinement.
#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    /// The `k`-th elementary symmetric function of the eigenvalues of the
    /// named generator's image (`k` in 1..=3) equals `target`.
    CharpolyCoefficient { generator: char, k: usize, target: Rational },
    /// A single matrix entry equals `target`.
    Entry { generator: char, row: usize, col: usize, target: Rational },
}

/// Characteristic polynomial of the image of `T` pinned to
/// `x⁴ − (2+t)x³ + (2+2t)x² − (2+t)x + 1`.
pub fn charpoly_pin(t: &Rational) -> Vec<Constraint> {
    let two = Rational::from_integer(2.into());
    let e1 = &two + t;
    let e2 = &two + &two * t;
    [(1, e1.clone()), (2, e2), (3, e1)]
        .into_iter()
        .map(|(k, target)| Constraint::CharpolyCoefficient { generator: 'T', k, target })
        .collect()
}

/// Elementary symmetric functions `(e1, e2, e3)` of the eigenvalues of `m`.
pub fn charpoly_coefficients<S: Scalar>(m: &Matrix<S>) -> [S; 3] {
    let c = m.charpoly();
    [-c[3].clone(), c[2].clone(), -c[1].clone()]
}

impl Constraint {
    fn generator(&self) -> char {
        match self {
            Constraint::CharpolyCoefficient { generator, .. } | Constraint::Entry { generator, .. } => {
                *generator
            }
        }
    }

    fn index(&self, r: &Representation<Real>) -> Result<usize, NewtonError> {
        let g = self.generator();
        r.generator_names.iter().position(|&n| n == g).ok_or(NewtonError::UnknownGenerator(g))
    }

    /// Value minus target, and the gradient with respect to the 16 entries
    /// of the constrained generator (row-major).
    fn evaluate(&self, m: &Matrix<Real>) -> (Real, Vec<Real>) {
        match self {
            Constraint::Entry { row, col, target, .. } => {
                let mut grad = vec![Real::zero(); N * N];
                grad[N * row + col] = Real::one();
                (m[(*row, *col)].clone() - Real::from_rational(target), grad)
            }
            Constraint::CharpolyCoefficient { k, target, .. } => {
                let [e1, e2, e3] = charpoly_coefficients(m);
                // d e1 = tr(dM), d e2 = tr((e1·I − M)·dM),
                // d e3 = tr((e2·I − e1·M + M²)·dM)
                let id = Matrix::<Real>::identity(N);
                let (value, g) = match k {
                    1 => (e1, id),
                    2 => (e2, &id.scale(&e1) - m),
                    3 => (e3, &(&id.scale(&e2) - &m.scale(&e1)) + &(m * m)),
                    _ => panic!("charpoly coefficient index must be 1, 2 or 3"),
                };
                // tr(G·dM) = Σ G[b][a]·dM[a][b]
                let grad = (0..N * N).map(|i| g[(i % N, i / N)].clone()).collect();
                (value - Real::from_rational(target), grad)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NewtonError {
    #[error(transparent)]
    Settings(#[from] SettingsError),
    #[error(transparent)]
    Tangent(#[from] TangentError),
    #[error("constraint names unknown generator {0}")]
    UnknownGenerator(char),
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    MaxIterations { iterations: usize, residual: f64, history: Vec<f64> },
    #[error("step rejected: residual could not be decreased from {residual:e}")]
    Stalled { residual: f64, history: Vec<f64> },
    #[error("a generator image became singular")]
    Singular { history: Vec<f64> },
}

impl NewtonError {
    /// Residual after each completed iteration, when the failure happened mid-run.
    pub fn history(&self) -> &[f64] {
        match self {
            NewtonError::MaxIterations { history, .. }
            | NewtonError::Stalled { history, .. }
            | NewtonError::Singular { history } => history,
            _ => &[],
        }
    }
}

/// A converged refinement.
#[derive(Clone, Debug)]
pub struct NewtonOutcome {
    pub representation: Representation<Real>,
    /// Largest component of the relation map and constraints.
    pub residual: Real,
    pub iterations: usize,
    /// Largest residual component before the first and after each iteration.
    pub history: Vec<f64>,
}

/// Shift every entry by independent uniform noise in `[−magnitude, magnitude]`.
pub fn perturb(r: &Representation<Real>, magnitude: f64, seed: u64) -> Representation<Real> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let images = r
        .images
        .iter()
        .map(|m| {
            let data = m
                .data()
                .iter()
                .map(|x| {
                    let noise = rng_sample(&mut rng) * magnitude;
                    if noise == 0.0 {
                        x.clone()
                    } else {
                        x.clone() + Real::with_prec(x.prec(), noise)
                    }
                })
                .collect();
            Matrix::from_vec(m.rows(), m.cols(), data)
        })
        .collect();
    Representation::new(r.generator_names.clone(), images)
}

fn rng_sample(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-1.0..=1.0)
}

/// Rounds every entry to `bits` of precision.
pub fn cast_representation(r: &Representation<Real>, bits: u32) -> Representation<Real> {
    r.map(|x| Real(Float::with_val(bits, &x.0)))
}

struct System<'a> {
    p: &'a Presentation,
    constraints: &'a [Constraint],
    indices: Vec<usize>,
}

impl System<'_> {
    fn values(&self, r: &Representation<Real>, inv: &[Matrix<Real>]) -> Vec<Real> {
        let mut f = crate::tangent::residuals_with(self.p, r, inv).flatten();
        for (c, &i) in self.constraints.iter().zip(&self.indices) {
            f.push(c.evaluate(&r.images[i]).0);
        }
        f
    }

    fn jacobian(&self, r: &Representation<Real>, inv: &[Matrix<Real>]) -> Matrix<Real> {
        let base = jacobian_unchecked(self.p, r, inv);
        let cols = base.cols();
        let mut rows = base.to_rows();
        for (c, &i) in self.constraints.iter().zip(&self.indices) {
            let mut row = vec![Real::zero(); cols];
            for (j, g) in c.evaluate(&r.images[i]).1.into_iter().enumerate() {
                row[16 * i + j] = g;
            }
            rows.push(row);
        }
        Matrix::from_rows(rows)
    }
}

fn max_abs(v: &[Real]) -> Real {
    v.iter().map(Real::abs).fold(Real::zero(), Real::max)
}

fn norm2_sq(v: &[Real], bits: u32) -> Real {
    let mut s = Float::with_val(bits, 0);
    for x in v {
        s += &x.0 * &x.0;
    }
    Real(s)
}

/// Levenberg–Marquardt-regularized Gauss–Newton refinement of `r0` onto the
/// solutions of the relation map together with `constraints`.
///
/// Each step solves `min ‖J·δ + F‖² + λ‖δ‖²` with `λ = ‖F‖²` by Householder
/// QR, halving the step while the residual norm does not decrease.
pub fn newton_refine(
    p: &Presentation,
    r0: &Representation<Real>,
    constraints: &[Constraint],
    settings: &NewtonSettings,
) -> Result<NewtonOutcome, NewtonError> {
    settings.validate()?;
    let bits = settings.bits();
    let _guard = PrecisionGuard::set(bits);
    let mut r = cast_representation(r0, bits);
    crate::tangent::relation_residuals(p, &r)?;
    let indices = constraints.iter().map(|c| c.index(&r)).collect::<Result<Vec<_>, _>>()?;
    let system = System { p, constraints, indices };
    let target = Real::with_prec(bits, settings.residual_target);

    let singular = |history: &Vec<f64>| NewtonError::Singular { history: history.clone() };
    let mut inv = r.inverses().map_err(|_| singular(&vec![]))?;
    let mut f = system.values(&r, &inv);
    let mut res = max_abs(&f);
    let mut history = vec![res.to_f64()];
    let n = 16 * r.num_generators();
    for iteration in 0..=settings.max_iterations {
        if res <= target {
            log::debug!("newton converged after {iteration} iterations: {:e}", res.to_f64());
            return Ok(NewtonOutcome { representation: r, residual: res, iterations: iteration, history });
        }
        if iteration == settings.max_iterations {
            break;
        }
        let jac = system.jacobian(&r, &inv);
        let rows = jac.rows() + n;
        let fnorm = norm2_sq(&f, bits);
        let sqrt_lambda = fnorm.sqrt();
        let mut a: Vec<Real> = jac.data().to_vec();
        a.reserve(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(if i == j { sqrt_lambda.clone() } else { Real(Float::with_val(bits, 0)) });
            }
        }
        let mut b: Vec<Real> = f.iter().map(|x| -x.clone()).collect();
        b.extend((0..n).map(|_| Real(Float::with_val(bits, 0))));
        let delta = least_squares(&mut a, rows, n, &mut b, bits).ok_or_else(|| singular(&history))?;
        let mut step = settings.damping;
        loop {
            let scale = Real::with_prec(bits, step);
            let images = r
                .images
                .iter()
                .enumerate()
                .map(|(g, m)| {
                    let d = &delta[16 * g..16 * g + 16];
                    Matrix::from_vec(N, N, m.data().iter().zip(d).map(|(x, y)| x.clone() + scale.clone() * y.clone()).collect())
                })
                .collect();
            let trial = Representation::new(r.generator_names.clone(), images);
            if let Ok(trial_inv) = trial.inverses() {
                let trial_f = system.values(&trial, &trial_inv);
                if norm2_sq(&trial_f, bits) < fnorm {
                    r = trial;
                    inv = trial_inv;
                    f = trial_f;
                    break;
                }
            }
            step /= 2.0;
            if step < 1e-12 {
                return Err(NewtonError::Stalled { residual: res.to_f64(), history });
            }
        }
        res = max_abs(&f);
        history.push(res.to_f64());
        log::debug!("newton iteration {}: residual {:e} (step {step})", iteration + 1, res.to_f64());
    }
    Err(NewtonError::MaxIterations { iterations: settings.max_iterations, residual: res.to_f64(), history })
}

/// Largest component of the relation map and `constraints` at `r`.
pub fn system_residual(
    p: &Presentation,
    r: &Representation<Real>,
    constraints: &[Constraint],
) -> Result<Real, NewtonError> {
    relation_residuals(p, r)?;
    let indices = constraints.iter().map(|c| c.index(r)).collect::<Result<Vec<_>, _>>()?;
    let inv = r.inverses().map_err(|_| NewtonError::Singular { history: vec![] })?;
    Ok(max_abs(&System { p, constraints, indices }.values(r, &inv)))
}
