//! Exact scalar arithmetic: rationals, quadratic extensions, polynomials,
//! rational functions and rational points of the unit circle.

mod circle;
mod poly;
mod quad;
mod ratfunc;
mod rational;
mod tau;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

pub use circle::{circle_point, CirclePoint};
pub use poly::Poly;
pub use quad::{quad_mul, QuadImag, QuadReal};
pub use ratfunc::{ratfunc_normalize, RationalFunction};
pub use rational::{
    format_rational, normalize_rational, parse_rational, rat, rat_int, Rational,
};
pub use tau::{catalog_tau, RingElementTau};

/// Errors raised by exact scalar constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("mismatched quadratic fields: sqrt{0} vs sqrt{1}")]
    MismatchedField(u64, u64),
    #[error("{0} is not a squarefree positive integer")]
    NotSquarefree(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

/// A commutative field (or a numeric approximation of one) usable as matrix entries.
///
/// Arithmetic is by value; `conj` is complex conjugation and is the identity on real fields.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;
    fn inv(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat_int(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    /// Rough bit size, used to prefer cheap pivots in exact elimination.
    fn size_hint(&self) -> usize {
        0
    }
    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Marker for scalars whose arithmetic is exact, so `is_zero` is a decision.
pub trait ExactField: Scalar {}

/// Exact sign of a real scalar.
pub trait RealSign {
    /// `None` when the value is not real (e.g. an imaginary quadratic with b ≠ 0).
    fn sign(&self) -> Option<std::cmp::Ordering>;
}

/// Exact squared modulus `x·conj(x)` of a scalar viewed as a complex number.
pub trait ComplexModulus: Scalar {
    fn modulus_sq(&self) -> Self {
        self.clone() * self.conj()
    }
}

/// Lossless string form used in reports.
pub trait ExactString: Sized {
    fn to_exact_string(&self) -> String;
    fn parse_exact(s: &str) -> Result<Self, FieldError>;
}
