use std::ops::{Add, Mul, Neg, Sub};

use crate::exactfield::{Poly, Rational, Scalar};

/// Element `a + b·t + c·i + d·i·t` of `ℚ[s][t, i]/(t² − (1 − s²), i² + 1)`,
/// the coordinate ring of the unit circle `u = s + i·t` with `i` adjoined.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleRing {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

fn t_squared() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

/// Product in `ℚ[s][t]/(t² − (1 − s²))` of `x0 + x1·t` and `y0 + y1·t`.
fn mul_t(x: (&Poly, &Poly), y: (&Poly, &Poly)) -> (Poly, Poly) {
    let q = t_squared();
    (x.0 * y.0 + &(&q * x.1) * y.1, x.0 * y.1 + x.1 * y.0)
}

impl CircleRing {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> Self {
        Self { a, b, c, d }
    }

    /// The coordinate `s`.
    pub fn s() -> Self {
        Self::from_poly(Poly::x())
    }

    /// The coordinate `t`.
    pub fn t() -> Self {
        Self::new(Poly::zero(), Poly::one(), Poly::zero(), Poly::zero())
    }

    pub fn i() -> Self {
        Self::new(Poly::zero(), Poly::zero(), Poly::one(), Poly::zero())
    }

    pub fn from_poly(a: Poly) -> Self {
        Self::new(a, Poly::zero(), Poly::zero(), Poly::zero())
    }

    /// The element lies in `ℚ[s]`.
    pub fn as_poly_in_s(&self) -> Option<&Poly> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }
}

impl Add for CircleRing {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl Sub for CircleRing {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for CircleRing {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for CircleRing {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (A + C·i)(A' + C'·i) = (AA' − CC') + (AC' + CA')·i with A, C in ℚ[s][t]
        let aa = mul_t((&self.a, &self.b), (&o.a, &o.b));
        let cc = mul_t((&self.c, &self.d), (&o.c, &o.d));
        let ac = mul_t((&self.a, &self.b), (&o.c, &o.d));
        let ca = mul_t((&self.c, &self.d), (&o.a, &o.b));
        Self::new(aa.0 - cc.0, aa.1 - cc.1, ac.0 + ca.0, ac.1 + ca.1)
    }
}

impl Scalar for CircleRing {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
    /// Only nonzero rational constants are inverted; the ring is not a field.
    fn inv(&self) -> Option<Self> {
        let a = self.as_poly_in_s()?;
        match a.degree() {
            Some(0) => Some(Self::from_rational(&(Rational::from_integer(1.into()) / a.coeff(0)))),
            _ => None,
        }
    }
    /// Complex conjugation `i ↦ −i`.
    fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -&self.c, -&self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        let (s, t, i) = (CircleRing::s(), CircleRing::t(), CircleRing::i());
        assert_eq!(s.clone() * s + t.clone() * t, CircleRing::one());
        assert_eq!(i.clone() * i.conj(), CircleRing::one());
        assert_eq!(i.clone() * i, -CircleRing::one());
    }
}
