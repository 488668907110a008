use serde::Serialize;

use super::{rho_u, FamilyError};
use crate::exactfield::{ComplexModulus, ExactField, Poly, QuadImag, Rational, Scalar};
use crate::linalg::{rank, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometryClass {
    Elliptic,
    Parabolic,
    Loxodromic,
}

/// One eigenvalue with its multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenData<S> {
    pub value: S,
    pub algebraic: usize,
    /// `n − rank(g − λ·I)`.
    pub geometric: usize,
    pub unit_modulus: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsometryVerdict<S> {
    pub class: IsometryClass,
    pub eigen_data: Vec<EigenData<S>>,
    pub diagonalizable: bool,
}

/// Multiplicity of `x = λ` as a root of the polynomial with coefficients
/// `coeffs` (constant term first), by repeated synthetic division.
fn root_multiplicity<S: Scalar>(coeffs: &[S], lambda: &S) -> usize {
    let mut p = coeffs.to_vec();
    let mut mult = 0;
    while p.len() > 1 {
        // p = (x − λ)·q + r
        let n = p.len() - 1;
        let mut q = vec![S::zero(); n];
        let mut carry = S::zero();
        for k in (0..=n).rev() {
            let v = p[k].clone() + carry.clone() * lambda.clone();
            if k == 0 {
                if !v.is_zero() {
                    return mult;
                }
            } else {
                q[k - 1] = v.clone();
            }
            carry = v;
        }
        p = q;
        mult += 1;
    }
    mult
}

/// Classify `g` as an isometry of complex hyperbolic space from exact
/// eigen-data. The eigenvalues are searched among `candidates` (for the
/// family, `1, u, 1/u`); they must account for the whole characteristic
/// polynomial.
pub fn classify_isometry<S: ExactField + ComplexModulus>(
    g: &Matrix<S>,
    candidates: &[S],
) -> Result<IsometryVerdict<S>, FamilyError> {
    let n = g.rows();
    let cp = g.charpoly();
    let mut eigen_data: Vec<EigenData<S>> = Vec::new();
    for lambda in candidates {
        if eigen_data.iter().any(|e| e.value == *lambda) {
            continue;
        }
        let algebraic = root_multiplicity(&cp, lambda);
        if algebraic == 0 {
            continue;
        }
        let shifted = g - &Matrix::<S>::identity(n).scale(lambda);
        let geometric = n - rank(&shifted);
        let unit_modulus = lambda.modulus_sq().is_one();
        eigen_data.push(EigenData { value: lambda.clone(), algebraic, geometric, unit_modulus });
    }
    let found: usize = eigen_data.iter().map(|e| e.algebraic).sum();
    if found != n {
        return Err(FamilyError::IncompleteEigenvalues { found, dimension: n });
    }
    let diagonalizable = eigen_data.iter().all(|e| e.algebraic == e.geometric);
    let class = if eigen_data.iter().any(|e| !e.unit_modulus) {
        IsometryClass::Loxodromic
    } else if diagonalizable {
        IsometryClass::Elliptic
    } else {
        IsometryClass::Parabolic
    };
    Ok(IsometryVerdict { class, eigen_data, diagonalizable })
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, as `(xⁿ − 1)/∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> Poly {
    let mut p = Poly::monomial(Rational::from_integer(1.into()), n as usize) - Poly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_rem(&cyclotomic_polynomial(d)).0;
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DiscretenessVerdict {
    /// `u` is a primitive `order`-th root of unity, so `ρ_u(T)` has finite
    /// order while `T` has infinite order in Bi(3).
    NotFaithful { order: u64, torsion_verified: bool },
    /// `u` is not a root of unity, so `ρ_u(T)` is elliptic of infinite
    /// order: the image is not discrete.
    NonDiscrete { elliptic: bool },
    /// `u = ±1`.
    Inconclusive,
}

/// Minimal polynomial over ℚ of `u = a + b·√(−d)`.
fn minimal_polynomial(u: &QuadImag) -> Poly {
    if u.is_rational() {
        return Poly::new(vec![-u.a().clone(), Rational::from_integer(1.into())]);
    }
    // x² − 2a·x + N(u)
    let two = Rational::from_integer(2.into());
    Poly::new(vec![u.norm(), -(two * u.a()), Rational::from_integer(1.into())])
}

/// Decide which of "not faithful" or "not discrete" applies to `ρ_u` for
/// `|u| = 1`, by testing whether the minimal polynomial of `u` is cyclotomic.
pub fn discreteness_obstruction(u: &QuadImag) -> Result<DiscretenessVerdict, FamilyError> {
    if !u.modulus_sq().is_one() {
        return Err(FamilyError::NotUnitModulus);
    }
    if u.is_rational() {
        return Ok(DiscretenessVerdict::Inconclusive);
    }
    let minpoly = minimal_polynomial(u);
    let deg = minpoly.degree().expect("nonzero") as u64;
    // φ(n) ≥ √(n/2), so φ(n) = deg forces n ≤ 2·deg²
    let order = (1..=2 * deg * deg + 2)
        .filter(|&n| euler_phi(n) == deg)
        .find(|&n| cyclotomic_polynomial(n) == minpoly);
    let t = rho_u(u)?.image('T').expect("generator T").clone();
    match order {
        Some(order) => {
            let torsion_verified = t.pow(order as u32).is_identity();
            Ok(DiscretenessVerdict::NotFaithful { order, torsion_verified })
        }
        None => {
            let candidates = [QuadImag::one(), u.clone(), u.inv().expect("unit modulus")];
            let verdict = classify_isometry(&t, &candidates)?;
            Ok(DiscretenessVerdict::NonDiscrete { elliptic: verdict.class == IsometryClass::Elliptic })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjugacyVerdict {
    /// The eigenvalue multisets `{1, 1, u, 1/u}` differ.
    NotConjugate,
    /// The multisets agree; conjugacy is not decided.
    EigenvalueEquivalent,
}

/// Compare `ρ_u` and `ρ_{u'}` through the eigenvalues of the image of `T`.
pub fn nonconjugacy<S: Scalar>(u: &S, u_prime: &S) -> ConjugacyVerdict {
    if u == u_prime || (u.clone() * u_prime.clone()).is_one() {
        ConjugacyVerdict::EigenvalueEquivalent
    } else {
        ConjugacyVerdict::NotConjugate
    }
}
