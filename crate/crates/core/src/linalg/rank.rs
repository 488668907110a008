use super::Matrix;
use crate::exactfield::ExactField;

/// Reduced row echelon form; returns the pivot columns.
///
/// Within each column the pivot is the remaining row with the smallest entry
/// (by `size_hint`), which keeps coefficient growth down. The reduced form,
/// hence the kernel basis below, does not depend on that choice.
fn rref<S: ExactField>(m: &mut Matrix<S>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[(i, c)].is_zero())
            .min_by_key(|&i| m[(i, c)].size_hint())
        else {
            continue;
        };
        m.swap_rows(p, r);
        let inv = m[(r, c)].inv().expect("nonzero pivot in a field");
        for k in c..cols {
            if !m[(r, k)].is_zero() {
                m[(r, k)] = m[(r, k)].clone() * inv.clone();
            }
        }
        let pivot_row: Vec<(usize, S)> = (c..cols)
            .filter(|&k| !m[(r, k)].is_zero())
            .map(|k| (k, m[(r, k)].clone()))
            .collect();
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for (k, v) in &pivot_row {
                m[(i, *k)] = m[(i, *k)].clone() - f.clone() * v.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank and a basis of the right kernel `{v : m·v = 0}`.
///
/// The basis is the canonical one read off the reduced row echelon form: one
/// vector per free column, with a 1 in that column and 0 in the other free columns.
pub fn rank_and_kernel<S: ExactField>(m: &Matrix<S>) -> (usize, Vec<Vec<S>>) {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let mut kernel = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![S::zero(); cols];
        v[f] = S::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -a[(row, f)].clone();
        }
        kernel.push(v);
    }
    (pivots.len(), kernel)
}

pub fn rank<S: ExactField>(m: &Matrix<S>) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}
