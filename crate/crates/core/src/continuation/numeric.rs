//! Dense floating-point kernels on row-major `Real` arrays.

use rug::{Assign, Float};

use super::real::Real;
use crate::exactfield::Scalar;

fn zero(bits: u32) -> Float {
    Float::with_val(bits, 0)
}

/// Least-squares solution of `A·x ≈ b` by Householder QR (`rows ≥ cols`,
/// full column rank). `a` and `b` are overwritten.
pub fn least_squares(a: &mut [Real], rows: usize, cols: usize, b: &mut [Real], bits: u32) -> Option<Vec<Real>> {
    assert!(rows >= cols && a.len() == rows * cols && b.len() == rows);
    // in-place updates keep the destination's precision, so raise it first
    for x in a.iter_mut().chain(b.iter_mut()) {
        x.0.set_prec(bits);
    }
    let mut v = vec![zero(bits); rows];
    for k in 0..cols {
        let mut norm2 = zero(bits);
        for i in k..rows {
            norm2 += &a[i * cols + k].0 * &a[i * cols + k].0;
        }
        if norm2.is_zero() {
            return None;
        }
        let norm = norm2.sqrt();
        let akk = &a[k * cols + k].0;
        let alpha = if akk.is_sign_negative() { norm } else { -norm };
        for i in k..rows {
            v[i].assign(&a[i * cols + k].0);
        }
        v[k] -= &alpha;
        let mut vnorm2 = zero(bits);
        for x in &v[k..rows] {
            vnorm2 += x * x;
        }
        if vnorm2.is_zero() {
            continue;
        }
        for j in k + 1..cols {
            let mut s = zero(bits);
            for i in k..rows {
                s += &v[i] * &a[i * cols + j].0;
            }
            let f = Float::with_val(bits, &s * 2u32) / &vnorm2;
            for i in k..rows {
                a[i * cols + j].0 -= &f * &v[i];
            }
        }
        let mut s = zero(bits);
        for i in k..rows {
            s += &v[i] * &b[i].0;
        }
        let f = Float::with_val(bits, &s * 2u32) / &vnorm2;
        for i in k..rows {
            b[i].0 -= &f * &v[i];
        }
        a[k * cols + k].0.assign(&alpha);
        for i in k + 1..rows {
            a[i * cols + k].0.assign(0);
        }
    }
    let mut x = vec![Real(zero(bits)); cols];
    for k in (0..cols).rev() {
        let mut s = b[k].0.clone();
        for j in k + 1..cols {
            s -= &a[k * cols + j].0 * &x[j].0;
        }
        let d = &a[k * cols + k].0;
        if d.is_zero() {
            return None;
        }
        x[k] = Real(s / d);
    }
    Some(x)
}

/// Null vector of a `rows × cols` matrix whose null space is one-dimensional,
/// by QR with column pivoting. Returns the vector and the ratio of the last
/// two diagonal entries of R (small when the null space is one-dimensional),
/// or `None` when the second-smallest pivot also vanishes to within `tol`.
pub fn null_vector(a: &[Real], rows: usize, cols: usize, bits: u32, tol: &Real) -> Option<Vec<Real>> {
    assert!(rows >= cols && a.len() == rows * cols);
    let mut m: Vec<Float> = a.iter().map(|x| Float::with_val(bits, &x.0)).collect();
    let mut perm: Vec<usize> = (0..cols).collect();
    for k in 0..cols {
        // pivot on the column of largest remaining norm
        let col_norm = |m: &Vec<Float>, j: usize| {
            let mut s = zero(bits);
            for i in k..rows {
                s += &m[i * cols + j] * &m[i * cols + j];
            }
            s
        };
        let best = (k..cols)
            .max_by(|&x, &y| col_norm(&m, x).partial_cmp(&col_norm(&m, y)).expect("finite"))
            .expect("nonempty range");
        if best != k {
            for i in 0..rows {
                m.swap(i * cols + k, i * cols + best);
            }
            perm.swap(k, best);
        }
        let norm = col_norm(&m, k).sqrt();
        if norm.is_zero() {
            continue;
        }
        let alpha = if m[k * cols + k].is_sign_negative() { norm } else { -norm };
        let mut v: Vec<Float> = (k..rows).map(|i| m[i * cols + k].clone()).collect();
        v[0] -= &alpha;
        let mut vnorm2 = zero(bits);
        for x in &v {
            vnorm2 += x * x;
        }
        if vnorm2.is_zero() {
            continue;
        }
        for j in k..cols {
            let mut s = zero(bits);
            for i in k..rows {
                s += &v[i - k] * &m[i * cols + j];
            }
            let f = Float::with_val(bits, &s * 2u32) / &vnorm2;
            for i in k..rows {
                m[i * cols + j] -= &f * &v[i - k];
            }
        }
    }
    let n = cols;
    let scale = Float::with_val(bits, m[0].abs_ref());
    if scale.is_zero() {
        return None;
    }
    // the second-to-last pivot must be clearly nonzero
    if n >= 2 {
        let r = Float::with_val(bits, m[(n - 2) * cols + (n - 2)].abs_ref()) / &scale;
        if r <= tol.0 {
            return None;
        }
    }
    let mut y = vec![zero(bits); n];
    y[n - 1] = Float::with_val(bits, 1);
    for k in (0..n - 1).rev() {
        let mut s = zero(bits);
        for j in k + 1..n {
            s -= &m[k * cols + j] * &y[j];
        }
        y[k] = s / &m[k * cols + k];
    }
    let mut out = vec![Real::zero(); n];
    for (k, &p) in perm.iter().enumerate() {
        out[p] = Real(y[k].clone());
    }
    Some(out)
}
