use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Float;

use crate::exactfield::{QuadReal, Rational, Scalar};

/// Bits needed for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

thread_local! {
    static WORKING_BITS: Cell<u32> = const { Cell::new(256) };
}

/// Sets the precision used by [`Scalar::from_rational`] for [`Real`] on this
/// thread until dropped.
pub struct PrecisionGuard {
    previous: u32,
}

impl PrecisionGuard {
    pub fn set(bits: u32) -> Self {
        let previous = WORKING_BITS.with(|w| w.replace(bits));
        Self { previous }
    }
}

impl Drop for PrecisionGuard {
    fn drop(&mut self) {
        WORKING_BITS.with(|w| w.set(self.previous));
    }
}

pub fn working_bits() -> u32 {
    WORKING_BITS.with(Cell::get)
}

/// Arbitrary-precision binary floating point number.
///
/// Binary operations round to the larger of the operand precisions; the
/// exact constants 0 and 1 carry minimal precision so they never lower it.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(pub Float);

impl Real {
    pub fn with_prec(bits: u32, x: f64) -> Self {
        Real(Float::with_val(bits, x))
    }

    pub fn from_rational_prec(q: &Rational, bits: u32) -> Self {
        let num: rug::Integer = q.numer().to_string().parse().expect("integer digits");
        let den: rug::Integer = q.denom().to_string().parse().expect("integer digits");
        let mut f = Float::with_val(bits, num);
        f /= den;
        Real(f)
    }

    /// `a + b·√d` rounded to `bits`.
    pub fn from_quad_real(x: &QuadReal, bits: u32) -> Self {
        let a = Self::from_rational_prec(x.a(), bits);
        if x.is_rational() {
            return a;
        }
        let root = Float::with_val(bits, x.d()).sqrt();
        let b = Self::from_rational_prec(x.b(), bits);
        a + b * Real(root)
    }

    /// Parse a decimal string at the given precision.
    pub fn parse(s: &str, bits: u32) -> Option<Self> {
        Float::parse(s).ok().map(|p| Real(Float::with_val(bits, p)))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.clone().sqrt())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Scientific decimal with `digits` significant digits, e.g. `-1.25e-3`.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        self.0.to_string_radix(10, Some(digits))
    }

    /// Decimal digits carried by this value's precision.
    pub fn decimal_digits(&self) -> usize {
        (f64::from(self.0.prec()) / std::f64::consts::LOG2_10).floor() as usize
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    fn prec2(&self, other: &Self) -> u32 {
        self.0.prec().max(other.0.prec())
    }

    pub fn cmp_f64(&self, x: f64) -> Option<Ordering> {
        self.0.partial_cmp(&x)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.decimal_digits().max(1)))
    }
}

impl Add for Real {
    type Output = Real;
    fn add(self, o: Real) -> Real {
        let p = self.prec2(&o);
        Real(Float::with_val(p, &self.0 + &o.0))
    }
}
impl Sub for Real {
    type Output = Real;
    fn sub(self, o: Real) -> Real {
        let p = self.prec2(&o);
        Real(Float::with_val(p, &self.0 - &o.0))
    }
}
impl Mul for Real {
    type Output = Real;
    fn mul(self, o: Real) -> Real {
        let p = self.prec2(&o);
        Real(Float::with_val(p, &self.0 * &o.0))
    }
}
impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Scalar for Real {
    fn zero() -> Self {
        Real(Float::with_val(rug::float::prec_min(), 0))
    }
    fn one() -> Self {
        Real(Float::with_val(rug::float::prec_min(), 1))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_rational_prec(q, working_bits())
    }
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Real(self.0.clone().recip()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn precision_follows_operands() {
        let a = Real::from_rational_prec(&rat(1, 3), 200);
        let b = a.clone() + Real::one();
        assert_eq!(b.prec(), 200);
        let three = Real::from_rational_prec(&rat(3, 1), 200);
        let diff = (a * three - Real::one()).abs();
        assert!(diff.cmp_f64(1e-55) == Some(Ordering::Less));
    }

    #[test]
    fn decimal_round_trip() {
        let x = Real::from_rational_prec(&rat(-22, 7), 232);
        let s = x.to_decimal(60);
        let y = Real::parse(&s, 232).unwrap();
        assert!((x - y).abs().cmp_f64(1e-58) == Some(Ordering::Less));
        assert_eq!(Real::zero().to_decimal(10), "0");
    }

    #[test]
    fn guard_scopes_precision() {
        {
            let _g = PrecisionGuard::set(300);
            assert_eq!(Real::from_rational(&rat(1, 3)).prec(), 300);
        }
        assert_eq!(working_bits(), 256);
    }
}
