use super::{rho_u, FamilyError};
use crate::bianchi::{holonomy, intertwiners};
use crate::exactfield::{QuadReal, Rational, Scalar};
use crate::linalg::Matrix;

/// An exact `X` with `X·ρ_hyp(g)·X⁻¹ = ρ_1(g)` for every generator.
#[derive(Clone, Debug)]
pub struct HolonomyConjugator {
    pub matrix: Matrix<QuadReal>,
    /// Dimension of the intertwiner space (1 for an irreducible pair).
    pub intertwiner_dim: usize,
    /// The conjugation identity was checked exactly for every generator.
    pub verified: bool,
}

/// Solve `X·ρ_hyp(g) = ρ_1(g)·X` over ℚ(√3) and keep an invertible solution.
pub fn holonomy_conjugator() -> Result<Option<HolonomyConjugator>, FamilyError> {
    let hol = holonomy(3)?;
    let rho1 = rho_u(&Rational::from_integer(1.into()))?.map(|x| QuadReal::rational_in(3, x.clone()));
    let basis = intertwiners(&rho1.images, &hol.images);
    let intertwiner_dim = basis.len();
    let Some(x) = basis.into_iter().find(|x| !x.det().is_zero()) else { return Ok(None) };
    let x_inv = x.inverse().expect("nonzero determinant");
    let verified = hol.conjugate(&x, &x_inv).images == rho1.images;
    Ok(Some(HolonomyConjugator { matrix: x, intertwiner_dim, verified }))
}
