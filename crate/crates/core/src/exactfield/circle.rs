use num_traits::{One, Zero};

use super::{QuadImag, Rational};

/// Rational point `(s, t)` on the unit circle, i.e. `u = s + i·t` with `|u| = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    s: Rational,
    t: Rational,
}

/// Rational parametrization `q ↦ ((1−q²)/(1+q²), 2q/(1+q²))`.
pub fn circle_point(q: &Rational) -> CirclePoint {
    let q2 = q * q;
    let den = Rational::one() + &q2;
    CirclePoint {
        s: (Rational::one() - &q2) / &den,
        t: (q * Rational::from_integer(2.into())) / &den,
    }
}

impl CirclePoint {
    /// Checked constructor; `None` unless `s² + t² = 1`.
    pub fn new(s: Rational, t: Rational) -> Option<Self> {
        (&s * &s + &t * &t == Rational::one()).then_some(Self { s, t })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }
    pub fn t(&self) -> &Rational {
        &self.t
    }

    /// `u = s + i·t` in the Gaussian rationals.
    pub fn to_complex(&self) -> QuadImag {
        if self.t.is_zero() {
            QuadImag::rational_in(1, self.s.clone())
        } else {
            QuadImag::new(1, self.s.clone(), self.t.clone()).expect("1 is squarefree")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn examples() {
        assert_eq!(circle_point(&rat(0, 1)), CirclePoint::new(rat(1, 1), rat(0, 1)).unwrap());
        assert_eq!(circle_point(&rat(1, 1)), CirclePoint::new(rat(0, 1), rat(1, 1)).unwrap());
        assert_eq!(circle_point(&rat(1, 2)), CirclePoint::new(rat(3, 5), rat(4, 5)).unwrap());
        assert!(CirclePoint::new(rat(1, 2), rat(1, 2)).is_none());
    }
}
