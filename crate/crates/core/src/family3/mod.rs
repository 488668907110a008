//! Exact analysis of the one-parameter family `ρ_u` of Bi(3) representations:
//! relators over ℚ(u), eigenstructure, the invariant Hermitian form and its
//! signature wall, isometry types and discreteness obstructions.

mod conjugator;
mod family;
mod hermitian;
mod isometry;
mod ring;

pub use conjugator::{holonomy_conjugator, HolonomyConjugator};
pub use family::{
    charpoly_t, charpoly_t_form, match_family, rho_symbolic, rho_u, verify_family, verify_representation, FamilyMatch,
    FamilyVerification,
};
pub use hermitian::{
    det_wall_analysis, hermitian_form_at, hermitian_form_matrix, same_line, HermitianFormU, WallAnalysis,
};
pub use isometry::{
    classify_isometry, cyclotomic_polynomial, discreteness_obstruction, nonconjugacy, ConjugacyVerdict,
    DiscretenessVerdict, EigenData, IsometryClass, IsometryVerdict,
};
pub use ring::CircleRing;

use crate::bianchi::BianchiError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("parameter excluded: denominator {0} vanishes")]
    ExcludedParameter(&'static str),
    #[error("({0}, {1}) is not on the unit circle")]
    OffCircle(String, String),
    #[error("parameter does not have modulus 1")]
    NotUnitModulus,
    #[error("eigenvalues found account for multiplicity {found} of {dimension}")]
    IncompleteEigenvalues { found: usize, dimension: usize },
    #[error(transparent)]
    Bianchi(#[from] BianchiError),
}
