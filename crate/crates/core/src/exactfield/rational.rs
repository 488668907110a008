use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactField, ExactString, FieldError, RealSign, Scalar};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Reduce `num/den` to lowest terms with a positive denominator.
pub fn normalize_rational(num: BigInt, den: BigInt) -> Result<Rational, FieldError> {
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Shorthand for `n/d` with machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `"a/b"`, or `"a"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"a"` or `"a/b"` (optional sign, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let err = || FieldError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    normalize_rational(n, d)
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn size_hint(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl ExactField for Rational {}

impl RealSign for Rational {
    fn sign(&self) -> Option<std::cmp::Ordering> {
        Some(if self.is_positive() {
            std::cmp::Ordering::Greater
        } else if self.is_negative() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Equal
        })
    }
}

impl super::ComplexModulus for Rational {}

impl ExactString for Rational {
    fn to_exact_string(&self) -> String {
        format_rational(self)
    }
    fn parse_exact(s: &str) -> Result<Self, FieldError> {
        parse_rational(s)
    }
}

pub(crate) fn is_squarefree(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}
