use serde::Serialize;

use super::FamilyError;
use crate::bianchi::{swan_presentation, validate_lifted, RelatorVerdict, Representation};
use crate::exactfield::{RationalFunction, Scalar};
use crate::linalg::Matrix;

fn inv_named<S: Scalar>(x: &S, name: &'static str) -> Result<S, FamilyError> {
    x.inv().ok_or(FamilyError::ExcludedParameter(name))
}

/// The tautological family at `u` (any scalar with `u ∉ {0, −1}`), with
/// generator images in the order of the Bi(3) presentation.
pub fn rho_u<S: Scalar>(u: &S) -> Result<Representation<S>, FamilyError> {
    let int = |n: i64| S::from_int(n);
    let ui = inv_named(u, "u")?;
    let u1i = inv_named(&(int(1) + u.clone()), "1+u")?;
    let u2 = u.clone() * u.clone();
    let ui2 = ui.clone() * ui.clone();
    // 1/(u+u²) = 1/(u·(1+u)), 1/(u²+u³) = 1/(u²·(1+u))
    let uu1i = ui.clone() * u1i.clone();
    let uu2i = ui2.clone() * u1i.clone();
    let (zero, one) = (S::zero(), S::one());
    let s = ui.clone() + u.clone();

    let t_row = vec![
        -((int(2) - u.clone() + u2.clone()) * ui2.clone()),
        s.clone(),
        -one.clone(),
        s.clone(),
    ];
    let t = Matrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        t_row.clone(),
        vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
    ]);
    let l_row2 = vec![
        -(int(2) * uu1i.clone()),
        u1i.clone(),
        u1i.clone(),
        -(u.clone() * u1i.clone()),
    ];
    let uu = Matrix::from_rows(vec![
        vec![one.clone() + u.clone(), zero.clone(), zero.clone(), -u.clone()],
        l_row2.clone(),
        vec![
            -((int(2) + u.clone() + u2.clone()) * uu2i.clone()),
            -u1i.clone(),
            (one.clone() + u.clone() + u2.clone()) * uu1i.clone(),
            uu1i.clone(),
        ],
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
    ]);
    let a = Matrix::from_rows(vec![
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
        t_row,
        vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
    ]);
    let l = Matrix::from_rows(vec![
        vec![
            (u.clone() - one.clone()) * u1i.clone(),
            -(u2.clone() * u1i.clone()),
            u.clone() * u1i.clone(),
            -(u2.clone() * u1i.clone()),
        ],
        l_row2,
        vec![-((int(2) + u.clone() + u2) * ui2), ui.clone(), zero.clone(), ui],
        vec![-(int(2) * uu1i), -(u.clone() * u1i.clone()), u1i.clone(), u1i],
    ]);
    let p = swan_presentation(3)?;
    let images = p
        .generator_names
        .iter()
        .map(|&g| match g {
            'T' => t.clone(),
            'U' => uu.clone(),
            'A' => a.clone(),
            'L' => l.clone(),
            other => unreachable!("Bi(3) has no generator {other}"),
        })
        .collect();
    Ok(Representation::new(p.generator_names, images))
}

/// The family over the rational function field ℚ(u).
pub fn rho_symbolic() -> Representation<RationalFunction> {
    rho_u(&RationalFunction::u()).expect("the indeterminate is invertible")
}

/// Exact relator and determinant checks of `ρ_u` over ℚ(u).
#[derive(Clone, Debug, Serialize)]
pub struct FamilyVerification {
    pub relators: Vec<RelatorVerdict>,
    /// Generator names whose image has determinant exactly 1.
    pub unimodular: Vec<(char, bool)>,
}

impl FamilyVerification {
    pub fn all_pass(&self) -> bool {
        self.relators.iter().all(|v| v.pass) && self.unimodular.iter().all(|(_, ok)| *ok)
    }
}

/// Check every Bi(3) relator for an arbitrary representation of the family
/// shape (`ρ_u` itself by default, see [`verify_family`]).
pub fn verify_representation(r: &Representation<RationalFunction>) -> Result<FamilyVerification, FamilyError> {
    let p = swan_presentation(3)?;
    let relators = validate_lifted(&p, r)?;
    let unimodular = r.generator_names.iter().zip(&r.images).map(|(&g, m)| (g, m.det().is_one())).collect();
    Ok(FamilyVerification { relators, unimodular })
}

/// The relators of Bi(3) checked symbolically in SL(4, ℚ(u)).
pub fn verify_family() -> FamilyVerification {
    verify_representation(&rho_symbolic()).expect("the family has the Bi(3) arity")
}

/// Coefficients `[c0, …, c4]` of `det(x·I − ρ_u(T))`.
pub fn charpoly_t<S: Scalar>(u: &S) -> Result<Vec<S>, FamilyError> {
    Ok(rho_u(u)?.image('T').expect("generator T").charpoly())
}

/// Coefficients of `1 − (2+t)x + (2+2t)x² − (2+t)x³ + x⁴`.
pub fn charpoly_t_form<S: Scalar>(t: &S) -> Vec<S> {
    let two = S::from_int(2);
    let e1 = two.clone() + t.clone();
    vec![S::one(), -e1.clone(), two.clone() + two * t.clone(), -e1, S::one()]
}


/// How a representation over ℚ(u) relates entrywise to the printed family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyMatch {
    /// Equal to `ρ_u`.
    Identical,
    /// Equal to `ρ_{1/u}`.
    InvertedParameter,
    Different,
}

/// Compare `r` with `ρ_u` and with `ρ_{1/u}` entry by entry.
pub fn match_family(r: &Representation<RationalFunction>) -> FamilyMatch {
    let rho = rho_symbolic();
    if r.generator_names != rho.generator_names {
        return FamilyMatch::Different;
    }
    if *r == rho {
        return FamilyMatch::Identical;
    }
    if *r == rho.map(RationalFunction::invert_variable) {
        return FamilyMatch::InvertedParameter;
    }
    FamilyMatch::Different
}
