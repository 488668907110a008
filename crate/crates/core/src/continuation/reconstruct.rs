use num_bigint::BigInt;
use rug::{Float, Integer};

use super::numeric::null_vector;
use super::real::{PrecisionGuard, Real};
use super::schedule::PathPoint;
use crate::bianchi::{validate_lifted, Presentation, RelatorVerdict, Representation};
use crate::exactfield::{ratfunc_normalize, Poly, Rational, RationalFunction, Scalar};
use crate::linalg::{algebraic_reconstruct, Matrix, ReconstructResult};

/// Which quantity the reconstructed entries are rational functions of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    /// The characteristic-polynomial parameter `t` itself.
    T,
    /// The root `u ≥ 1` of `u² − t·u + 1`.
    ULarger,
    /// The root `u ≤ 1` of `u² − t·u + 1`.
    USmaller,
}

impl Parameter {
    /// The variable's value at parameter `t`.
    pub fn value_at(self, t: &Real) -> Real {
        if self == Parameter::T {
            return t.clone();
        }
        let four = Real(Float::with_val(t.prec(), 4));
        let disc = (t.clone() * t.clone() - four).sqrt();
        let half = Real(Float::with_val(t.prec(), 0.5));
        match self {
            Parameter::ULarger => (t.clone() + disc) * half,
            _ => (t.clone() - disc) * half,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parameter::T => "t",
            _ => "u",
        }
    }
}

/// Tuning of the per-entry fits.
#[derive(Clone, Debug)]
pub struct FitConfig {
    /// Degree bound on numerator and on denominator.
    pub max_degree: usize,
    /// Decimal places kept when recognizing a fitted coefficient as a rational.
    pub decimals: usize,
    /// Height bound on recognized coefficients.
    pub max_height: BigInt,
}

impl FitConfig {
    pub fn new(max_degree: usize, precision_digits: u32) -> Self {
        Self { max_degree, decimals: (precision_digits / 2).max(12) as usize, max_height: BigInt::from(10u64.pow(6)) }
    }
}

/// An exact family proposed from numerical samples.
#[derive(Clone, Debug)]
pub struct FamilyCandidate {
    pub parameter: Parameter,
    pub generator_names: Vec<char>,
    /// Generator images with entries in ℚ(parameter).
    pub images: Vec<Matrix<RationalFunction>>,
    /// Parameters `t` of the samples used.
    pub samples: Vec<Rational>,
    /// Exact relator verdicts over the function field.
    pub verdicts: Vec<RelatorVerdict>,
    /// Every image has determinant exactly 1.
    pub unimodular: bool,
    /// All relators hold and all determinants are 1.
    pub verified: bool,
}

impl FamilyCandidate {
    pub fn representation(&self) -> Representation<RationalFunction> {
        Representation::new(self.generator_names.clone(), self.images.clone())
    }

    /// Numeric specialization at parameter `t`; `None` at a pole.
    pub fn specialize(&self, t: &Rational, bits: u32) -> Option<Representation<Real>> {
        let _guard = PrecisionGuard::set(bits);
        let x = self.parameter.value_at(&Real::from_rational_prec(t, bits));
        let images = self
            .images
            .iter()
            .map(|m| {
                let data = m.data().iter().map(|f| f.eval(&x)).collect::<Option<Vec<_>>>()?;
                Some(Matrix::from_vec(m.rows(), m.cols(), data))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Representation::new(self.generator_names.clone(), images))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReconstructError {
    #[error("{got} samples given, at least {needed} needed")]
    TooFewSamples { needed: usize, got: usize },
    #[error("samples have mismatched generators")]
    MismatchedSamples,
    #[error("no rational function fits entries {entries:?}")]
    Inconsistent {
        /// `(generator, row, column)` of every entry that could not be fitted
        /// in the last parameter tried.
        entries: Vec<(char, usize, usize)>,
    },
}

/// `x` rounded to `decimals` places, in positional notation.
fn fixed_decimal(x: &Real, decimals: usize) -> String {
    let scale = Integer::from(Integer::u_pow_u(10, decimals as u32));
    let scaled = Float::with_val(x.prec(), &x.0 * &scale);
    let int = scaled.to_integer().unwrap_or_default();
    let neg = int < 0;
    let mut digits = int.abs().to_string();
    if digits.len() <= decimals {
        digits = "0".repeat(decimals + 1 - digits.len()) + &digits;
    }
    let point = digits.len() - decimals;
    format!("{}{}.{}", if neg { "-" } else { "" }, &digits[..point], &digits[point..])
}

fn recognize(x: &Real, cfg: &FitConfig) -> Option<Rational> {
    match algebraic_reconstruct(&fixed_decimal(x, cfg.decimals), 1, &cfg.max_height).ok()? {
        ReconstructResult::Found(g) => g.as_rational(),
        _ => None,
    }
}

/// Lowest-degree rational function `N/D` (each of degree at most
/// `cfg.max_degree`, `D` monic) through the points `(xs[i], ys[i])`, with
/// coefficients recognized as rationals and the exact result re-checked
/// against every sample to within `tol`.
pub fn fit_rational_function(xs: &[Real], ys: &[Real], cfg: &FitConfig, tol: &Real) -> Option<RationalFunction> {
    let n = xs.len();
    let bits = xs.iter().chain(ys).map(Real::prec).max()?;
    let _guard = PrecisionGuard::set(bits);
    let pivot_tol = Real(Float::with_val(bits, Float::i_exp(1, -(bits as i32) / 4)));
    for total in 0..=2 * cfg.max_degree {
        for b in 0..=total.min(cfg.max_degree) {
            let a = total - b;
            if a > cfg.max_degree {
                continue;
            }
            let k = a + b + 2;
            // one spare sample validates the fit
            if n < k {
                continue;
            }
            let mut m = Vec::with_capacity(n * k);
            for (x, y) in xs.iter().zip(ys) {
                let mut p = Real::one();
                let mut powers = Vec::with_capacity(a.max(b) + 1);
                for _ in 0..=a.max(b) {
                    powers.push(p.clone());
                    p = p * x.clone();
                }
                m.extend(powers[..=a].iter().cloned());
                m.extend(powers[..=b].iter().map(|q| -(y.clone() * q.clone())));
            }
            let Some(v) = null_vector(&m, n, k, bits, &pivot_tol) else { continue };
            let lead = v[k - 1].clone();
            let Some(lead_inv) = lead.inv() else { continue };
            let coeffs: Option<Vec<Rational>> = v.iter().map(|c| recognize(&(c.clone() * lead_inv.clone()), cfg)).collect();
            let Some(coeffs) = coeffs else { continue };
            let num = Poly::new(coeffs[..=a].to_vec());
            let den = Poly::new(coeffs[a + 1..].to_vec());
            let Ok(f) = ratfunc_normalize(num, den) else { continue };
            let fits = xs.iter().zip(ys).all(|(x, y)| match f.eval(x) {
                Some(fx) => (fx - y.clone()).abs() <= *tol,
                None => false,
            });
            if fits {
                return Some(f);
            }
        }
    }
    None
}

/// Fit every normalized entry across the samples as a rational function of
/// `t`, or failing that of a root `u` of `u² − t·u + 1`, then check the
/// relators and determinants exactly over the function field.
pub fn reconstruct_family(
    p: &Presentation,
    points: &[PathPoint],
    cfg: &FitConfig,
    tol: &Real,
) -> Result<FamilyCandidate, ReconstructError> {
    let needed = 2 * cfg.max_degree + 1;
    if points.len() < needed {
        return Err(ReconstructError::TooFewSamples { needed, got: points.len() });
    }
    let names = points[0].representation.generator_names.clone();
    if points.iter().any(|pt| pt.representation.generator_names != names) {
        return Err(ReconstructError::MismatchedSamples);
    }
    let bits = points
        .iter()
        .flat_map(|pt| pt.representation.images.iter().flat_map(|m| m.data()))
        .map(Real::prec)
        .max()
        .unwrap_or(64);
    let _guard = PrecisionGuard::set(bits);
    let mut failed = Vec::new();
    for parameter in [Parameter::T, Parameter::ULarger, Parameter::USmaller] {
        let xs: Vec<Real> =
            points.iter().map(|pt| parameter.value_at(&Real::from_rational_prec(&pt.t_value, bits))).collect();
        failed.clear();
        let mut images = Vec::with_capacity(names.len());
        for (g, &name) in names.iter().enumerate() {
            let dim = points[0].representation.images[g].rows();
            let mut entries = Vec::with_capacity(dim * dim);
            for i in 0..dim {
                for j in 0..dim {
                    let ys: Vec<Real> = points.iter().map(|pt| pt.representation.images[g][(i, j)].clone()).collect();
                    match fit_rational_function(&xs, &ys, cfg, tol) {
                        Some(f) => entries.push(f),
                        None => failed.push((name, i, j)),
                    }
                }
            }
            if failed.is_empty() {
                images.push(Matrix::from_vec(dim, dim, entries));
            }
        }
        if !failed.is_empty() {
            log::debug!("no fit in {parameter:?} for {} entries", failed.len());
            continue;
        }
        let rep = Representation::new(names.clone(), images);
        let verdicts = validate_lifted(p, &rep).unwrap_or_default();
        let unimodular = rep.images.iter().all(|m| m.det().is_one());
        let verified = unimodular && !verdicts.is_empty() && verdicts.iter().all(|v| v.pass);
        return Ok(FamilyCandidate {
            parameter,
            generator_names: names,
            images: rep.images,
            samples: points.iter().map(|pt| pt.t_value.clone()).collect(),
            verdicts,
            unimodular,
            verified,
        });
    }
    Err(ReconstructError::Inconsistent { entries: failed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn fixed_decimal_rounds() {
        let x = Real::from_rational_prec(&rat(-1, 3), 128);
        assert_eq!(fixed_decimal(&x, 5), "-0.33333");
        assert_eq!(fixed_decimal(&Real::from_rational_prec(&rat(5, 2), 128), 3), "2.500");
        assert_eq!(fixed_decimal(&Real::with_prec(128, 1e-40), 3), "0.000");
    }

    #[test]
    fn recovers_planted_function() {
        let bits = 256;
        let _guard = PrecisionGuard::set(bits);
        // (2 + u + u²)/(u² + u³)
        let f = ratfunc_normalize(Poly::from_ints(&[2, 1, 1]), Poly::from_ints(&[0, 0, 1, 1])).unwrap();
        let xs: Vec<Real> = (1..=12).map(|i| Real::from_rational_prec(&rat(10 + i, 7), bits)).collect();
        let ys: Vec<Real> = xs.iter().map(|x| f.eval(x).unwrap()).collect();
        let cfg = FitConfig::new(4, 60);
        let g = fit_rational_function(&xs, &ys, &cfg, &Real::with_prec(bits, 1e-40)).unwrap();
        assert_eq!(g, f);
        // a polynomial is found with trivial denominator
        let ys: Vec<Real> = xs.iter().map(|x| x.clone() * x.clone() - Real::one()).collect();
        let g = fit_rational_function(&xs, &ys, &cfg, &Real::with_prec(bits, 1e-40)).unwrap();
        assert_eq!(g, RationalFunction::from_poly(Poly::from_ints(&[-1, 0, 1])));
    }
}
