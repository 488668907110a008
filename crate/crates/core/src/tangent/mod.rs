//! Zariski tangent spaces of representation varieties: the relation map,
//! its exact Jacobian, and H¹ dimensions cross-checked against a direct
//! Fox-calculus cocycle computation.

mod cocycle;
mod jacobian;
mod report;
mod residuals;

pub use cocycle::{coboundary_dim, cocycle_space_dim, irreducibility_check, sl4_basis, DEFAULT_WORD_LENGTH};
pub use jacobian::{jacobian, jacobian_unchecked, word_differential};
pub use report::{tangent_report, tangent_report_for, TangentReport};
pub use residuals::{relation_residuals, Residuals};
pub(crate) use residuals::residuals_with;

use crate::bianchi::BianchiError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangentError {
    #[error(transparent)]
    Bianchi(#[from] BianchiError),
    #[error("representation does not satisfy the relations (nonzero residual)")]
    NotOnVariety,
    #[error("tangent computations need 4×4 images, got {0}×{0}")]
    WrongDimension(usize),
}
