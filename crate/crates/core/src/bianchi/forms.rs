use super::Representation;
use crate::exactfield::ExactField;
use crate::linalg::{rank_and_kernel, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `H = Hᵀ`, invariance with transposes.
    Symmetric,
    /// Invariance with conjugate transposes.
    Hermitian,
}

/// Which side the group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSide {
    /// `g* H g = H` (column vectors).
    Column,
    /// `g H g* = H` (row vectors).
    Row,
}

fn unflatten<S: ExactField>(n: usize, v: Vec<S>) -> Matrix<S> {
    Matrix::from_vec(n, n, v)
}

/// Basis of all `H` with `g* H g = H` (or `g H g* = H`) for every generator,
/// where `*` is the transpose or the conjugate transpose.
///
/// The Hermitian case is solved over the coefficient field, so a returned
/// basis element is in general a scalar multiple of a Hermitian matrix.
pub fn invariant_form<S: ExactField>(
    r: &Representation<S>,
    kind: FormKind,
    side: FormSide,
) -> Vec<Matrix<S>> {
    let n = r.dimension();
    let nn = n * n;
    let star = |x: &S| match kind {
        FormKind::Symmetric => x.clone(),
        FormKind::Hermitian => x.conj(),
    };
    let mut rows: Vec<Vec<S>> = Vec::new();
    for g in &r.images {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![S::zero(); nn];
                for a in 0..n {
                    for b in 0..n {
                        let c = match side {
                            FormSide::Column => star(&g[(a, i)]) * g[(b, j)].clone(),
                            FormSide::Row => g[(i, a)].clone() * star(&g[(j, b)]),
                        };
                        row[a * n + b] = c;
                    }
                }
                row[i * n + j] = row[i * n + j].clone() - S::one();
                rows.push(row);
            }
        }
    }
    if kind == FormKind::Symmetric {
        for i in 0..n {
            for j in i + 1..n {
                let mut row = vec![S::zero(); nn];
                row[i * n + j] = S::one();
                row[j * n + i] = -S::one();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let (_, kernel) = rank_and_kernel(&Matrix::from_rows(rows));
    kernel.into_iter().map(|v| unflatten(n, v)).collect()
}

/// Basis of `{X : a_i·X = X·b_i for all i}`.
pub fn intertwiners<S: ExactField>(a: &[Matrix<S>], b: &[Matrix<S>]) -> Vec<Matrix<S>> {
    assert_eq!(a.len(), b.len(), "intertwiner families differ in length");
    let Some(first) = a.first() else {
        return Vec::new();
    };
    let (p, q) = (first.rows(), b[0].rows());
    let mut rows = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        for r in 0..p {
            for c in 0..q {
                let mut row = vec![S::zero(); p * q];
                for k in 0..p {
                    row[k * q + c] = row[k * q + c].clone() + ai[(r, k)].clone();
                }
                for k in 0..q {
                    row[r * q + k] = row[r * q + k].clone() - bi[(k, c)].clone();
                }
                rows.push(row);
            }
        }
    }
    let (_, kernel) = rank_and_kernel(&Matrix::from_rows(rows));
    kernel.into_iter().map(|v| Matrix::from_vec(p, q, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational, Scalar};

    fn q(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn planted_orthogonal_pair() {
        // rotations preserve the identity form
        let r1 = q(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let r2 = q(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        let rep = Representation::new(vec!['X', 'Y'], vec![r1, r2]);
        let forms = invariant_form(&rep, FormKind::Symmetric, FormSide::Column);
        assert_eq!(forms.len(), 1);
        let h = &forms[0];
        assert!(h[(0, 1)].is_zero() && h[(0, 0)] == h[(1, 1)] && h[(1, 1)] == h[(2, 2)]);
    }

    #[test]
    fn generic_pair_has_no_form() {
        let g1 = q(&[&[2, 1], &[1, 1]]);
        let g2 = q(&[&[1, 3], &[0, 1]]);
        let rep = Representation::new(vec!['X', 'Y'], vec![g1, g2]);
        assert!(invariant_form(&rep, FormKind::Symmetric, FormSide::Column).is_empty());
    }

    #[test]
    fn intertwiner_of_conjugates() {
        let a = q(&[&[1, 1], &[0, 1]]);
        let g = q(&[&[2, 1], &[1, 1]]);
        let gi = g.inverse().unwrap();
        let b = &(&gi * &a) * &g;
        // a·X = X·b is solved by X = g (and the commutant of a times g)
        let xs = intertwiners(std::slice::from_ref(&a), std::slice::from_ref(&b));
        assert_eq!(xs.len(), 2);
        for x in xs {
            assert_eq!(&a * &x, &x * &b);
        }
    }
}
