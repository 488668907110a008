//! Canonical conjugacy representative for Bi(3)-style representations.
//!
//! Let `v` span the common left fixed line of `ρ(T)` and `ρ(A)` and put
//! `w = v·ρ(U)⁻¹`. In the basis of rows `v, w·ρ(A), w·ρ(A)·ρ(T)⁻¹, w` the
//! generators take the shape of the tautological family: `ρ(T)` fixes the
//! first and last basis vectors and sends the third to the second, `ρ(A)`
//! fixes the first and swaps the second and fourth, and `ρ(U)` sends the
//! fourth to the first. The basis is determined by `v` up to a common scale,
//! which cancels in `B·ρ·B⁻¹`, so the result is a conjugacy invariant.

use rug::Float;

use super::numeric::null_vector;
use super::real::{PrecisionGuard, Real};
use crate::bianchi::Representation;
use crate::exactfield::{ExactField, Scalar};
use crate::linalg::{rank_and_kernel, Matrix};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NormalizeError {
    #[error("representation has no generator {0}")]
    MissingGenerator(char),
    #[error("common fixed vector of T and A is not unique")]
    DegenerateFixedLine,
    #[error("normalizing basis is singular")]
    SingularBasis,
}

fn generator<S: Scalar>(r: &Representation<S>, name: char) -> Result<&Matrix<S>, NormalizeError> {
    r.image(name).ok_or(NormalizeError::MissingGenerator(name))
}

/// `(ρ(T) − I)ᵀ` stacked over `(ρ(A) − I)ᵀ`: its kernel is the common left fixed line.
fn fixed_line_system<S: Scalar>(r: &Representation<S>) -> Result<Matrix<S>, NormalizeError> {
    let id = Matrix::<S>::identity(4);
    let t = generator(r, 'T')?;
    let a = generator(r, 'A')?;
    Ok((t - &id).transpose().vstack(&(a - &id).transpose()))
}

fn row_times<S: Scalar>(v: &[S], m: &Matrix<S>) -> Vec<S> {
    m.transpose().apply(v)
}

fn basis_from<S: Scalar>(r: &Representation<S>, v: Vec<S>) -> Result<(Matrix<S>, Matrix<S>), NormalizeError> {
    let t_inv = generator(r, 'T')?.inverse().ok_or(NormalizeError::SingularBasis)?;
    let u_inv = generator(r, 'U')?.inverse().ok_or(NormalizeError::SingularBasis)?;
    let a = generator(r, 'A')?;
    let w = row_times(&v, &u_inv);
    let wa = row_times(&w, a);
    let wat = row_times(&wa, &t_inv);
    let b = Matrix::from_rows(vec![v, wa, wat, w]);
    let b_inv = b.inverse().ok_or(NormalizeError::SingularBasis)?;
    Ok((b, b_inv))
}

/// The normal form of an exact representation together with the basis
/// matrix `B` (so that the result is `B·ρ·B⁻¹`).
pub fn normal_form_exact<S: ExactField>(
    r: &Representation<S>,
) -> Result<(Representation<S>, Matrix<S>), NormalizeError> {
    let (_, kernel) = rank_and_kernel(&fixed_line_system(r)?);
    let [v] = <[Vec<S>; 1]>::try_from(kernel).map_err(|_| NormalizeError::DegenerateFixedLine)?;
    let (b, b_inv) = basis_from(r, v)?;
    Ok((r.conjugate(&b, &b_inv), b))
}

/// Numeric normal form; the fixed line is found by pivoted QR and rejected
/// when the system's second-smallest pivot is below `2^(−bits/4)` relative
/// to the largest.
pub fn normalize_conjugacy(r: &Representation<Real>) -> Result<Representation<Real>, NormalizeError> {
    let bits = r.images.iter().flat_map(|m| m.data()).map(Real::prec).max().unwrap_or(64);
    let _guard = PrecisionGuard::set(bits);
    let k = fixed_line_system(r)?;
    let tol = Real(Float::with_val(bits, Float::i_exp(1, -(bits as i32) / 4)));
    let v = null_vector(k.data(), k.rows(), k.cols(), bits, &tol).ok_or(NormalizeError::DegenerateFixedLine)?;
    let (b, b_inv) = basis_from(r, v)?;
    Ok(r.conjugate(&b, &b_inv))
}
