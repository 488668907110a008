use super::residuals::check_shape;
use super::TangentError;
use crate::bianchi::{Presentation, Representation, Word};
use crate::exactfield::{ExactField, Scalar};
use crate::linalg::{rank_and_kernel, Matrix};

/// Default word-length bound for the Burnside span in [`irreducibility_check`].
pub const DEFAULT_WORD_LENGTH: usize = 4;

/// Basis of sl₄: the 12 off-diagonal units `E_ab`, then `E_aa − E_44` for a < 4.
pub fn sl4_basis<S: Scalar>() -> Vec<Matrix<S>> {
    let mut out = Vec::with_capacity(15);
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                out.push(Matrix::unit(4, 4, a, b));
            }
        }
    }
    for a in 0..3 {
        out.push(&Matrix::unit(4, 4, a, a) - &Matrix::unit(4, 4, 3, 3));
    }
    out
}

/// Value `u(word)` of the cocycle with `X_gen = basis_elem` and all other
/// `X_i = 0`, extended by `u(w·g) = u(w) + Ad(w)·X_g` and
/// `u(w·g⁻¹) = u(w) − Ad(w·g⁻¹)·X_g`.
fn fox_column<S: ExactField>(
    word: &Word,
    images: &[Matrix<S>],
    inverses: &[Matrix<S>],
    basis_elem: &Matrix<S>,
    gen: usize,
) -> Matrix<S> {
    let mut acc = Matrix::<S>::zeros(4, 4);
    let mut prefix = Matrix::<S>::identity(4);
    let mut prefix_inv = Matrix::<S>::identity(4);
    for &(g, e) in &word.letters {
        if e > 0 {
            if g == gen {
                acc = &acc + &(&(&prefix * basis_elem) * &prefix_inv);
            }
            prefix = &prefix * &images[g];
            prefix_inv = &inverses[g] * &prefix_inv;
        } else {
            prefix = &prefix * &inverses[g];
            prefix_inv = &images[g] * &prefix_inv;
            if g == gen {
                acc = &acc - &(&(&prefix * basis_elem) * &prefix_inv);
            }
        }
    }
    acc
}

/// Dimension of Z¹(Γ, sl₄) at `r`: tuples `(X_i) ∈ sl₄^m` whose Fox-calculus
/// extension satisfies `u(lhs) = u(rhs)` for every relator.
pub fn cocycle_space_dim<S: ExactField>(
    p: &Presentation,
    r: &Representation<S>,
) -> Result<usize, TangentError> {
    check_shape(p, r)?;
    let inv = r.inverses()?;
    let m = r.num_generators();
    let basis = sl4_basis::<S>();
    let k = p.num_relators();
    if k == 0 {
        return Ok(15 * m);
    }
    let mut sys = Matrix::<S>::zeros(16 * k, 15 * m);
    for (ri, rel) in p.relators.iter().enumerate() {
        for gen in 0..m {
            for (bi, e) in basis.iter().enumerate() {
                let u = &fox_column(&rel.lhs, &r.images, &inv, e, gen)
                    - &fox_column(&rel.rhs, &r.images, &inv, e, gen);
                for (idx, v) in u.data().iter().enumerate() {
                    sys[(16 * ri + idx, 15 * gen + bi)] = v.clone();
                }
            }
        }
    }
    let (rank, _) = rank_and_kernel(&sys);
    Ok(15 * m - rank)
}

/// Dimension of B¹: `15 − dim` of the centralizer of the images in sl₄.
pub fn coboundary_dim<S: ExactField>(r: &Representation<S>) -> usize {
    let basis = sl4_basis::<S>();
    let mut sys = Matrix::<S>::zeros(16 * r.num_generators(), 15);
    for (gi, g) in r.images.iter().enumerate() {
        for (bi, e) in basis.iter().enumerate() {
            let c = &(e * g) - &(g * e);
            for (idx, v) in c.data().iter().enumerate() {
                sys[(16 * gi + idx, bi)] = v.clone();
            }
        }
    }
    let (_, kernel) = rank_and_kernel(&sys);
    15 - kernel.len()
}

/// Incrementally reduced spanning set of matrices viewed as vectors.
struct Span<S> {
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: ExactField> Span<S> {
    /// Reduce `v` against the span; add it if independent.
    fn insert(&mut self, mut v: Vec<S>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        let v: Vec<S> = v.into_iter().map(|x| x * inv.clone()).collect();
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Burnside criterion: the images generate all of M₄ as a unital algebra,
/// checked on the span of positive words of length at most `max_len`
/// (stopping as soon as the span reaches dimension 16).
pub fn irreducibility_check<S: ExactField>(r: &Representation<S>, max_len: usize) -> bool {
    let n = r.dimension();
    let full = n * n;
    let mut span = Span { rows: Vec::new() };
    let id = Matrix::<S>::identity(n);
    span.insert(id.data().to_vec());
    let mut frontier = vec![id];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &r.images {
                let wg = w * g;
                if span.insert(wg.data().to_vec()) {
                    if span.rows.len() == full {
                        return true;
                    }
                    next.push(wg);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    span.rows.len() == full
}
