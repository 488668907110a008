use super::TangentError;
use crate::bianchi::{BianchiError, Presentation, Representation};
use crate::exactfield::Scalar;
use crate::linalg::Matrix;

/// Components of the relation map: `det(A_i) − 1` per generator and
/// `lhs − rhs` per relator.
#[derive(Clone, Debug, PartialEq)]
pub struct Residuals<S> {
    pub det: Vec<S>,
    pub relators: Vec<Matrix<S>>,
}

impl<S: Scalar> Residuals<S> {
    pub fn is_zero(&self) -> bool {
        self.det.iter().all(S::is_zero) && self.relators.iter().all(Matrix::is_zero)
    }

    /// All components in order: determinants, then relator entries row by row.
    pub fn flatten(&self) -> Vec<S> {
        let mut v = self.det.clone();
        for m in &self.relators {
            v.extend_from_slice(m.data());
        }
        v
    }
}

pub(crate) fn check_shape<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<(), TangentError> {
    if p.num_generators() != r.num_generators() {
        return Err(BianchiError::ArityMismatch {
            presentation: p.num_generators(),
            representation: r.num_generators(),
        }
        .into());
    }
    if r.images.iter().any(|m| !m.is_square() || m.rows() != 4) {
        return Err(TangentError::WrongDimension(r.dimension()));
    }
    Ok(())
}

/// Evaluate the relation map at `r`.
pub fn relation_residuals<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<Residuals<S>, TangentError> {
    check_shape(p, r)?;
    let inv = r.inverses()?;
    Ok(residuals_with(p, r, &inv))
}

pub(crate) fn residuals_with<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
    inv: &[Matrix<S>],
) -> Residuals<S> {
    let det = r.images.iter().map(|m| m.det() - S::one()).collect();
    let relators = p
        .relators
        .iter()
        .map(|rel| &rel.lhs.evaluate(&r.images, inv) - &rel.rhs.evaluate(&r.images, inv))
        .collect();
    Residuals { det, relators }
}
