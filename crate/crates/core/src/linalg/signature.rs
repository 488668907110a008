use std::cmp::Ordering;

use serde::Serialize;

use super::Matrix;
use crate::exactfield::{ExactField, RealSign};

/// Sylvester inertia of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl Inertia {
    /// `(max, min)` of the positive and negative counts: the signature up to
    /// an overall sign of the form.
    pub fn up_to_sign(&self) -> (usize, usize) {
        (self.positives.max(self.negatives), self.positives.min(self.negatives))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zeros == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not Hermitian (entry ({0}, {1}))")]
    NotHermitian(usize, usize),
}

/// Inertia by exact congruence diagonalization.
///
/// Repeatedly takes a Schur complement: on a nonzero diagonal pivot (whose
/// sign is read off exactly), or, when the whole remaining diagonal vanishes,
/// on a 2×2 block `[[0, a], [ā, 0]]`, which has inertia (1, 1).
pub fn congruence_signature<S: ExactField + RealSign>(
    h: &Matrix<S>,
) -> Result<Inertia, SignatureError> {
    if !h.is_square() {
        return Err(SignatureError::NotSquare);
    }
    let n = h.rows();
    for i in 0..n {
        for j in i..n {
            if h[(i, j)] != h[(j, i)].conj() {
                return Err(SignatureError::NotHermitian(i, j));
            }
        }
    }
    let mut inertia = Inertia { positives: 0, negatives: 0, zeros: 0 };
    let mut m = h.clone();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| !m[(k, k)].is_zero()) {
            let k = active.remove(pos);
            let piv = m[(k, k)].clone();
            match piv.sign().ok_or(SignatureError::NotHermitian(k, k))? {
                Ordering::Greater => inertia.positives += 1,
                Ordering::Less => inertia.negatives += 1,
                Ordering::Equal => unreachable!("pivot is nonzero"),
            }
            let inv = piv.inv().expect("nonzero pivot");
            // M' = M − M[:,k]·piv⁻¹·M[k,:]
            for &i in &active {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let f = m[(i, k)].clone() * inv.clone();
                for &j in &active {
                    if m[(k, j)].is_zero() {
                        continue;
                    }
                    m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(k, j)].clone();
                }
            }
            continue;
        }
        let off = active.iter().enumerate().find_map(|(p, &k)| {
            active[p + 1..]
                .iter()
                .find(|&&l| !m[(k, l)].is_zero())
                .map(|&l| (k, l))
        });
        let Some((k, l)) = off else {
            inertia.zeros += active.len();
            break;
        };
        inertia.positives += 1;
        inertia.negatives += 1;
        active.retain(|&x| x != k && x != l);
        // block B = [[0, a], [ā, 0]], B⁻¹ = [[0, 1/ā], [1/a, 0]]
        let a_inv = m[(k, l)].inv().expect("nonzero entry");
        let abar_inv = m[(l, k)].inv().expect("nonzero entry");
        for &i in &active {
            let (hik, hil) = (m[(i, k)].clone(), m[(i, l)].clone());
            if hik.is_zero() && hil.is_zero() {
                continue;
            }
            for &j in &active {
                // [h_ik, h_il]·B⁻¹·[h_kj; h_lj] = h_ik·h_lj/ā + h_il·h_kj/a
                let corr = hik.clone() * m[(l, j)].clone() * abar_inv.clone()
                    + hil.clone() * m[(k, j)].clone() * a_inv.clone();
                m[(i, j)] = m[(i, j)].clone() - corr;
            }
        }
    }
    Ok(inertia)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn diagonal() {
        let i = congruence_signature(&q(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]))
            .unwrap();
        assert_eq!(i, Inertia { positives: 2, negatives: 2, zeros: 0 });
    }

    #[test]
    fn zero_diagonal_block() {
        let i = congruence_signature(&q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])).unwrap();
        assert_eq!(i, Inertia { positives: 1, negatives: 1, zeros: 1 });
        // [[0,1,1],[1,0,1],[1,1,0]] has eigenvalues 2, −1, −1
        let i = congruence_signature(&q(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])).unwrap();
        assert_eq!(i, Inertia { positives: 1, negatives: 2, zeros: 0 });
    }

    #[test]
    fn rejects_non_hermitian() {
        assert_eq!(
            congruence_signature(&q(&[&[1, 2], &[3, 1]])),
            Err(SignatureError::NotHermitian(0, 1))
        );
        assert!(congruence_signature(&Matrix::<Rational>::zeros(2, 3)).is_err());
    }
}
