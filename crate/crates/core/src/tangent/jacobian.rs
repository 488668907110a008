use super::residuals::{check_shape, residuals_with};
use super::TangentError;
use crate::bianchi::{Presentation, Representation, Word};
use crate::exactfield::Scalar;
use crate::linalg::Matrix;

const N: usize = 4;

/// Add `sign · d(word)[X]` to `out`, where `out` has 16 rows (entries of the
/// 4×4 value, row-major) and `16·m` columns (entries of each `X_i`).
///
/// Product rule: a letter `g` contributes `Pre·X_g·Post`, an inverse letter
/// `Pre·(−g⁻¹·X_g·g⁻¹)·Post`. The coefficient of `X_g[a][b]` in entry
/// `(r, c)` of `P·X·Q` is `P[r][a]·Q[b][c]`.
pub fn word_differential<S: Scalar>(
    word: &Word,
    images: &[Matrix<S>],
    inverses: &[Matrix<S>],
    negate: bool,
    out: &mut Matrix<S>,
    row_offset: usize,
) {
    let k = word.letters.len();
    let letter = |j: usize| {
        let (g, e) = word.letters[j];
        if e > 0 {
            &images[g]
        } else {
            &inverses[g]
        }
    };
    let mut prefix = Vec::with_capacity(k + 1);
    prefix.push(Matrix::<S>::identity(N));
    for j in 0..k {
        let next = &prefix[j] * letter(j);
        prefix.push(next);
    }
    let mut suffix = vec![Matrix::<S>::identity(N); k + 1];
    for j in (0..k).rev() {
        suffix[j] = letter(j) * &suffix[j + 1];
    }
    for j in 0..k {
        let (g, e) = word.letters[j];
        let (pre, post, neg) = if e > 0 {
            (prefix[j].clone(), suffix[j + 1].clone(), negate)
        } else {
            // Pre·g⁻¹ = prefix[j+1] and g⁻¹·Post = suffix[j]
            (prefix[j + 1].clone(), suffix[j].clone(), !negate)
        };
        for r in 0..N {
            for a in 0..N {
                let pa = &pre[(r, a)];
                if pa.is_zero() {
                    continue;
                }
                for b in 0..N {
                    for c in 0..N {
                        let qb = &post[(b, c)];
                        if qb.is_zero() {
                            continue;
                        }
                        let v = pa.clone() * qb.clone();
                        let row = row_offset + N * r + c;
                        let col = 16 * g + N * a + b;
                        out[(row, col)] = if neg {
                            out[(row, col)].clone() - v
                        } else {
                            out[(row, col)].clone() + v
                        };
                    }
                }
            }
        }
    }
}

/// Differential of the relation map at `r`, without checking that `r` lies
/// on the variety (numerical callers evaluate it at approximate points).
///
/// Rows: `m` determinant rows, then 16 rows per relator; columns: the 16
/// entries of each generator image, generator-major and row-major.
pub fn jacobian_unchecked<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
    inverses: &[Matrix<S>],
) -> Matrix<S> {
    let m = r.num_generators();
    let k = p.num_relators();
    let mut jac = Matrix::<S>::zeros(m + 16 * k, 16 * m);
    for (i, a) in r.images.iter().enumerate() {
        // d det(A)[X] = tr(adj(A)·X) = Σ adj(A)[b][a]·X[a][b]
        let adj = a.adjugate();
        for x in 0..N {
            for y in 0..N {
                jac[(i, 16 * i + N * x + y)] = adj[(y, x)].clone();
            }
        }
    }
    for (ri, rel) in p.relators.iter().enumerate() {
        let off = m + 16 * ri;
        word_differential(&rel.lhs, &r.images, inverses, false, &mut jac, off);
        word_differential(&rel.rhs, &r.images, inverses, true, &mut jac, off);
    }
    jac
}

/// Exact differential of the relation map at a point of the variety.
pub fn jacobian<S: Scalar>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<Matrix<S>, TangentError> {
    check_shape(p, r)?;
    let inv = r.inverses()?;
    if !residuals_with(p, r, &inv).is_zero() {
        return Err(TangentError::NotOnVariety);
    }
    Ok(jacobian_unchecked(p, r, &inv))
}
