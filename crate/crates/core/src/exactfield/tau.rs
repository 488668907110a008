use num_bigint::BigInt;

use super::rational::is_squarefree;
use super::{FieldError, QuadImag, Rational, Scalar};

/// Element `x + y·τ` of the ring of integers 𝒪_d of ℚ(i√d), with
/// `τ = i√d` for `d ≡ 1, 2 (mod 4)` and `τ = (1 + i√d)/2` for `d ≡ 3 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElementTau {
    d: u64,
    x: BigInt,
    y: BigInt,
}

impl RingElementTau {
    pub fn new(d: u64, x: BigInt, y: BigInt) -> Result<Self, FieldError> {
        if !is_squarefree(d) {
            return Err(FieldError::NotSquarefree(d));
        }
        Ok(Self { d, x, y })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The generator τ of 𝒪_d under the standard convention.
    pub fn tau(d: u64) -> Result<QuadImag, FieldError> {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        match d % 4 {
            3 => QuadImag::new(d, half.clone(), half),
            _ => QuadImag::new(d, Rational::zero(), Rational::one()),
        }
    }

    pub fn to_quad_imag(&self) -> QuadImag {
        let tau = Self::tau(self.d).expect("validated at construction");
        QuadImag::from_rational(&Rational::from_integer(self.x.clone()))
            + QuadImag::from_rational(&Rational::from_integer(self.y.clone())) * tau
    }
}

/// τ as used by the Swan catalog generator matrices: the standard τ except
/// `d = 3`, where the catalog takes `τ = (−1 + i√3)/2`.
pub fn catalog_tau(d: u64) -> Result<QuadImag, FieldError> {
    if d == 3 {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        QuadImag::new(3, -half.clone(), half)
    } else {
        RingElementTau::tau(d)
    }
}
