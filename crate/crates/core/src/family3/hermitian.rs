use std::cmp::Ordering;

use serde::Serialize;

use super::{rho_u, CircleRing, FamilyError};
use crate::bianchi::{invariant_form, FormKind, FormSide};
use crate::exactfield::{format_rational, CirclePoint, ExactField, Poly, QuadImag, Rational, Scalar};
use crate::linalg::{congruence_signature, Inertia, Matrix};

/// `H_u` as a matrix over any scalar ring, given `s`, `t` and `i`:
/// diagonal `−2 + 4s`, first row `f`, first column `f̄`, remaining
/// off-diagonal entries `−1`, with `f = −1 − s + 4s² + i(−1 + 4s)t`.
pub fn hermitian_form_matrix<S: Scalar>(s: &S, t: &S, i: &S) -> Matrix<S> {
    let int = |n: i64| S::from_int(n);
    let re = int(-1) - s.clone() + int(4) * s.clone() * s.clone();
    let im = (int(-1) + int(4) * s.clone()) * t.clone();
    let f = re.clone() + i.clone() * im.clone();
    let fbar = re - i.clone() * im;
    let diag = int(-2) + int(4) * s.clone();
    let mut m = Matrix::<S>::zeros(4, 4);
    for r in 0..4 {
        for c in 0..4 {
            m[(r, c)] = match (r, c) {
                _ if r == c => diag.clone(),
                (0, _) => f.clone(),
                (_, 0) => fbar.clone(),
                _ => int(-1),
            };
        }
    }
    m
}

/// The family's Hermitian form at `u = s + i·t`, with its exact checks.
#[derive(Clone, Debug, Serialize)]
pub struct HermitianFormU {
    pub s: String,
    pub t: String,
    #[serde(skip)]
    pub matrix: Matrix<QuadImag>,
    /// `(generator, ρ_u(g)·H_u·ρ_u(g)ᴴ = H_u)`.
    pub invariance: Vec<(char, bool)>,
    pub inertia: Inertia,
    /// Dimension of the space of invariant forms (solved over ℚ(i)).
    pub invariant_space_dim: usize,
    /// The invariant space is the line spanned by `H_u`.
    pub spans_invariant_line: bool,
}

/// `a` and `b` are nonzero multiples of each other.
pub fn same_line<S: ExactField>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    let Some(k) = b.data().iter().position(|x| !x.is_zero()) else { return false };
    let Some(lambda) = a.data()[k].div(&b.data()[k]) else { return false };
    !lambda.is_zero() && *a == b.scale(&lambda)
}

/// Build `H_u` at the circle point `(s, t)` and check it exactly against
/// `ρ_u` with `u = s + i·t`.
pub fn hermitian_form_at(s: &Rational, t: &Rational) -> Result<HermitianFormU, FamilyError> {
    let point = CirclePoint::new(s.clone(), t.clone())
        .ok_or_else(|| FamilyError::OffCircle(format_rational(s), format_rational(t)))?;
    let q = |x: &Rational| QuadImag::rational_in(1, x.clone());
    let h = hermitian_form_matrix(&q(s), &q(t), &QuadImag::i());
    let rho = rho_u(&point.to_complex())?;
    let invariance = rho
        .generator_names
        .iter()
        .zip(&rho.images)
        .map(|(&g, m)| (g, &(m * &h) * &m.conj_transpose() == h))
        .collect();
    let inertia = congruence_signature(&h).expect("H_u is Hermitian");
    let basis = invariant_form(&rho, FormKind::Hermitian, FormSide::Row);
    let spans_invariant_line = basis.len() == 1 && same_line(&basis[0], &h);
    Ok(HermitianFormU {
        s: format_rational(s),
        t: format_rational(t),
        matrix: h,
        invariance,
        inertia,
        invariant_space_dim: basis.len(),
        spans_invariant_line,
    })
}

/// `det(H_u)` as a polynomial in `s` and where it vanishes on `[−1, 1]`.
#[derive(Clone, Debug, Serialize)]
pub struct WallAnalysis {
    /// Coefficients of `det(H_u)` in `s`, constant term first.
    pub determinant: Vec<String>,
    /// Human-readable form.
    pub determinant_display: String,
    /// Distinct real roots in the closed interval `[−1, 1]`, by Sturm's theorem.
    pub roots_in_closed_interval: usize,
    /// `s = −1` is a root; it corresponds to the excluded parameter `u = −1`.
    pub root_at_excluded_point: bool,
    /// Distinct real roots for `s` in `(−1, 1]`, i.e. `u ∈ U(1) \ {−1}`.
    pub roots_on_domain: usize,
    /// Rational roots in `[−1, 1]`.
    pub rational_roots: Vec<String>,
    pub quarter_is_root: bool,
    /// `1/4` is the only real root for `s` in `(−1, 1]`.
    pub only_root_is_quarter: bool,
    /// Sign of the determinant on `(−1, 1/4)` and `(1/4, 1]` (checked at
    /// every rational of denominator 20 in each piece).
    pub sign_below: i8,
    pub sign_above: i8,
}

fn sign_of(x: &Rational) -> i8 {
    match x.cmp(&Rational::from_integer(0.into())) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Constant sign of `p` over the given sample points, or 0 if it changes.
fn constant_sign(p: &Poly, samples: impl Iterator<Item = Rational>) -> i8 {
    let signs: Vec<i8> = samples.map(|x| sign_of(&p.eval(&x))).collect();
    if signs.iter().all(|&x| x == signs[0]) {
        signs[0]
    } else {
        0
    }
}

/// Symbolic determinant of `H_u` in `ℚ[s][t, i]/(t² − (1 − s²), i² + 1)`.
pub fn det_wall_analysis() -> WallAnalysis {
    let h = hermitian_form_matrix(&CircleRing::s(), &CircleRing::t(), &CircleRing::i());
    let det = h.det();
    let p = det.as_poly_in_s().expect("Hermitian determinant is real and even in t").clone();
    let (lo, hi) = (Rational::from_integer((-1).into()), Rational::from_integer(1.into()));
    let quarter = Rational::new(1.into(), 4.into());
    let rational_roots: Vec<Rational> =
        p.rational_roots().into_iter().filter(|r| *r >= lo && *r <= hi).collect();
    let roots_in_closed_interval = p.count_real_roots(&lo, &hi);
    let root_at_excluded_point = p.eval(&lo) == Rational::from_integer(0.into());
    let roots_on_domain = roots_in_closed_interval - usize::from(root_at_excluded_point);
    let quarter_is_root = p.eval(&quarter) == Rational::from_integer(0.into());
    let grid = |a: i64, b: i64| (a..=b).map(|k| Rational::new(k.into(), 20.into()));
    WallAnalysis {
        determinant: p.coeffs().iter().map(format_rational).collect(),
        determinant_display: p.display_in("s"),
        roots_in_closed_interval,
        root_at_excluded_point,
        roots_on_domain,
        rational_roots: rational_roots.iter().map(format_rational).collect(),
        quarter_is_root,
        only_root_is_quarter: quarter_is_root && roots_on_domain == 1,
        sign_below: constant_sign(&p, grid(-19, 4)),
        sign_above: constant_sign(&p, grid(6, 20)),
    }
}
