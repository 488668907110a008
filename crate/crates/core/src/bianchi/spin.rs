use super::{BianchiError, Representation};
use crate::exactfield::{QuadImag, QuadReal, Rational, Scalar};
use crate::linalg::Matrix;

/// The real matrices σ₀ = I, σ₁ = diag(1,−1), σ₂ = [[0,1],[1,0]] and
/// J = [[0,1],[−1,0]]; the fourth basis element is σ₃ = i·J = [[0,i],[−i,0]].
fn basis_matrix(k: usize) -> Matrix<QuadImag> {
    let n = QuadImag::from_int;
    let entries = match k {
        0 => vec![n(1), n(0), n(0), n(1)],
        1 => vec![n(1), n(0), n(0), n(-1)],
        2 => vec![n(0), n(1), n(1), n(0)],
        3 => vec![n(0), n(1), n(-1), n(0)],
        _ => unreachable!(),
    };
    Matrix::from_vec(2, 2, entries)
}

/// Coordinates in the σ basis of the Hermitian matrix [[p, q], [q̄, r]]
/// given by real and imaginary parts of its entries:
/// ((p+r)/2, (p−r)/2, Re q, Im q).
fn coords(x: &[(QuadReal, QuadReal); 3]) -> [QuadReal; 4] {
    let half = QuadReal::from_rational(&Rational::new(1.into(), 2.into()));
    let [(p, _), (q_re, q_im), (r, _)] = x.clone();
    [(p.clone() + r.clone()) * half.clone(), (p - r) * half, q_re, q_im]
}

/// Image in SO(3,1) of `m ∈ SL(2, ℚ(i√d))` under `X ↦ m·X·mᴴ` on 2×2
/// Hermitian matrices, in the basis (σ₀, σ₁, σ₂, σ₃). The invariant quadratic form is
/// `det X`, i.e. diag(1, −1, −1, −1).
pub fn spin_lift(m: &Matrix<QuadImag>) -> Result<Matrix<QuadReal>, BianchiError> {
    assert!(m.rows() == 2 && m.cols() == 2, "spin lift needs a 2×2 matrix");
    if !m.det().is_one() {
        return Err(BianchiError::DeterminantNotOne);
    }
    let mh = m.conj_transpose();
    let mut out = Matrix::zeros(4, 4);
    for k in 0..4 {
        // m·σ·mᴴ computed in ℚ(i√d); for σ₃ = i·J multiply by i afterwards,
        // which keeps the arithmetic inside a single quadratic field.
        let y = &(m * &basis_matrix(k)) * &mh;
        let parts = [y[(0, 0)].re_im(), y[(0, 1)].re_im(), y[(1, 1)].re_im()];
        let parts = if k == 3 { parts.map(|(re, im)| (-im, re)) } else { parts };
        for (row, c) in coords(&parts).into_iter().enumerate() {
            out[(row, k)] = c;
        }
    }
    Ok(out)
}

pub fn lift_representation(
    r: &Representation<QuadImag>,
) -> Result<Representation<QuadReal>, BianchiError> {
    let images = r.images.iter().map(spin_lift).collect::<Result<_, _>>()?;
    Ok(Representation::new(r.generator_names.clone(), images))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_sign() {
        let id = Matrix::<QuadImag>::identity(2);
        assert!(spin_lift(&id).unwrap().is_identity());
        assert!(spin_lift(&(-&id)).unwrap().is_identity());
        let bad = Matrix::diagonal(&[QuadImag::from_int(2), QuadImag::from_int(1)]);
        assert_eq!(spin_lift(&bad), Err(BianchiError::DeterminantNotOne));
    }
}
