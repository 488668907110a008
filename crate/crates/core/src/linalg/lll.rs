use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactfield::Rational;

/// Integer lattice basis, one vector per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LllError {
    #[error("basis vectors are linearly dependent")]
    Dependent,
    #[error("basis vectors have unequal lengths")]
    Ragged,
    #[error("delta must lie strictly between 1/4 and 1")]
    BadDelta,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

/// Gram–Schmidt vectors' squared norms and the μ coefficients, exactly.
fn gram_schmidt(b: &[Vec<BigInt>]) -> Result<(Vec<Rational>, Vec<Vec<Rational>>), LllError> {
    let n = b.len();
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut norms = Vec::with_capacity(n);
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let bi = to_rational(&b[i]);
        let mut v = bi.clone();
        for j in 0..i {
            mu[i][j] = dot(&bi, &star[j]) / &norms[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &mu[i][j] * y;
            }
        }
        let nv = dot(&v, &v);
        if nv.is_zero() {
            return Err(LllError::Dependent);
        }
        norms.push(nv);
        star.push(v);
    }
    Ok((norms, mu))
}

fn round(q: &Rational) -> BigInt {
    // nearest integer, ties away from zero
    let two = BigInt::from(2);
    let n = q.numer() * &two + q.denom() * q.numer().signum();
    n / (q.denom() * two)
}

/// LLL reduction with exact rational Gram–Schmidt.
pub fn lll_reduce(basis: &LatticeBasis, delta: &Rational) -> Result<LatticeBasis, LllError> {
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    if *delta <= quarter || *delta >= Rational::one() {
        return Err(LllError::BadDelta);
    }
    let mut b = basis.vectors.clone();
    if let Some(first) = b.first() {
        if b.iter().any(|v| v.len() != first.len()) {
            return Err(LllError::Ragged);
        }
    }
    let n = b.len();
    let (mut norms, mut mu) = gram_schmidt(&b)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let r = round(&mu[k][j]);
                let (head, tail) = b.split_at_mut(k);
                for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                    *x -= &r * y;
                }
                let rq = Rational::from_integer(r);
                let (lo, hi) = mu.split_at_mut(k);
                let row_k = &mut hi[0];
                for (m, mj) in row_k[..j].iter_mut().zip(&lo[j][..j]) {
                    *m -= &rq * mj;
                }
                row_k[j] -= rq;
            }
        }
        let lhs = &norms[k];
        let rhs = (delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            (norms, mu) = gram_schmidt(&b)?;
            k = (k - 1).max(1);
        }
    }
    Ok(LatticeBasis { vectors: b })
}

/// Checks the size-reduction and Lovász conditions.
pub fn is_lll_reduced(basis: &LatticeBasis, delta: &Rational) -> bool {
    let Ok((norms, mu)) = gram_schmidt(&basis.vectors) else {
        return false;
    };
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let n = basis.vectors.len();
    (0..n).all(|i| (0..i).all(|j| mu[i][j].abs() <= half))
        && (1..n).all(|k| norms[k] >= (delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn basis(v: &[&[i64]]) -> LatticeBasis {
        LatticeBasis {
            vectors: v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    #[test]
    fn standard_basis_fixed() {
        let b = basis(&[&[1, 0], &[0, 1]]);
        assert_eq!(lll_reduce(&b, &rat(3, 4)).unwrap(), b);
    }

    #[test]
    fn errors() {
        assert_eq!(lll_reduce(&basis(&[&[1, 2], &[2, 4]]), &rat(3, 4)), Err(LllError::Dependent));
        assert_eq!(lll_reduce(&basis(&[&[1, 0], &[0, 1]]), &rat(1, 4)), Err(LllError::BadDelta));
        assert_eq!(lll_reduce(&basis(&[&[1, 0], &[0]]), &rat(1, 2)), Err(LllError::Ragged));
    }

    #[test]
    fn rounding() {
        assert_eq!(round(&rat(5, 2)), BigInt::from(3));
        assert_eq!(round(&rat(-5, 2)), BigInt::from(-3));
        assert_eq!(round(&rat(7, 3)), BigInt::from(2));
        assert_eq!(round(&rat(-7, 3)), BigInt::from(-2));
    }

    #[test]
    fn reduced_output() {
        let b = basis(&[&[1, 0, 12345], &[0, 1, 20000]]);
        let r = lll_reduce(&b, &rat(3, 4)).unwrap();
        assert!(is_lll_reduced(&r, &rat(3, 4)));
    }
}
