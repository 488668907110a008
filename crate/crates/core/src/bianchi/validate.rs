use serde::{Deserialize, Serialize};

use super::{BianchiError, Presentation, Representation};
use crate::exactfield::Scalar;
use crate::linalg::Matrix;

/// Outcome of checking one relator in a representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorVerdict {
    pub index: usize,
    pub relator: String,
    pub pass: bool,
    /// `Some(±1)` when `lhs·rhs⁻¹ = ±I`.
    pub sign: Option<i8>,
}

fn check_arity<S: Scalar>(p: &Presentation, r: &Representation<S>) -> Result<(), BianchiError> {
    if p.num_generators() != r.num_generators() {
        return Err(BianchiError::ArityMismatch {
            presentation: p.num_generators(),
            representation: r.num_generators(),
        });
    }
    Ok(())
}

fn verdicts<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
    allow_minus: bool,
) -> Result<Vec<RelatorVerdict>, BianchiError> {
    check_arity(p, r)?;
    let inv = r.inverses()?;
    let n = r.dimension();
    let id = Matrix::<S>::identity(n);
    let minus = -&id;
    Ok(p.relators
        .iter()
        .enumerate()
        .map(|(i, rel)| {
            let w = rel.lhs.concat(&rel.rhs.inverse()).evaluate(&r.images, &inv);
            let sign = if w == id {
                Some(1)
            } else if w == minus {
                Some(-1)
            } else {
                None
            };
            let pass = sign == Some(1) || (allow_minus && sign == Some(-1));
            RelatorVerdict { index: i, relator: p.relator_string(i), pass, sign }
        })
        .collect())
}

/// Check every relator in a 2-dimensional representation, up to sign
/// (PSL(2) relations may hold as `−I` in SL(2)).
pub fn validate_presentation<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<Vec<RelatorVerdict>, BianchiError> {
    verdicts(p, r, true)
}

/// Check every relator exactly (`lhs = rhs`), as required in dimension 4.
pub fn validate_lifted<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<Vec<RelatorVerdict>, BianchiError> {
    verdicts(p, r, false)
}
