use serde::Serialize;

use super::{coboundary_dim, cocycle_space_dim, irreducibility_check, jacobian, TangentError};
use super::DEFAULT_WORD_LENGTH;
use crate::bianchi::{holonomy, swan_presentation, Presentation, Representation};
use crate::exactfield::ExactField;
use crate::linalg::rank_and_kernel;

/// Dimensions of the Zariski tangent space and of H¹ at a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub d: Option<u64>,
    pub generators: usize,
    pub relators: usize,
    /// `16·m`.
    pub ambient_dim: usize,
    /// `m + 16·k`.
    pub jacobian_rows: usize,
    pub jacobian_rank: usize,
    /// `ambient_dim − jacobian_rank` = dim Z¹.
    pub kernel_dim: usize,
    pub b1_dim: usize,
    /// `kernel_dim − b1_dim`.
    pub h1_dim: usize,
    /// Independent Fox-calculus count of Z¹, when requested.
    pub cocycle_dim: Option<usize>,
    pub irreducible: bool,
}

/// Tangent report for an arbitrary exact 4-dimensional representation.
pub fn tangent_report_for<S: ExactField>(
    p: &Presentation,
    r: &Representation<S>,
    with_cocycles: bool,
) -> Result<TangentReport, TangentError> {
    let jac = jacobian(p, r)?;
    let (rank, kernel) = rank_and_kernel(&jac);
    let b1 = coboundary_dim(r);
    let cocycle_dim = if with_cocycles { Some(cocycle_space_dim(p, r)?) } else { None };
    Ok(TangentReport {
        d: p.d,
        generators: p.num_generators(),
        relators: p.num_relators(),
        ambient_dim: jac.cols(),
        jacobian_rows: jac.rows(),
        jacobian_rank: rank,
        kernel_dim: kernel.len(),
        b1_dim: b1,
        h1_dim: kernel.len() - b1,
        cocycle_dim,
        irreducible: irreducibility_check(r, DEFAULT_WORD_LENGTH),
    })
}

/// Tangent report at the lattice embedding of Bi(d).
pub fn tangent_report(d: u64, with_cocycles: bool) -> Result<TangentReport, TangentError> {
    let p = swan_presentation(d)?;
    let r = holonomy(d)?;
    tangent_report_for(&p, &r, with_cocycles)
}
