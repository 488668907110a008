use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{format_rational, parse_rational};
use super::{ComplexModulus, ExactField, FieldError, Poly, Rational, Scalar};

/// Element of ℚ(u): coprime numerator and monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

/// Cancel the gcd and make the denominator monic.
pub fn ratfunc_normalize(num: Poly, den: Poly) -> Result<RationalFunction, FieldError> {
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFunction { num, den: Poly::one() });
    }
    let g = num.gcd(&den);
    let num = num.div_rem(&g).0;
    let den = den.div_rem(&g).0;
    let l = den.leading().recip();
    Ok(RationalFunction { num: num.scale(&l), den: den.scale(&l) })
}

impl RationalFunction {
    /// The indeterminate `u`.
    pub fn u() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Evaluate at a scalar; `None` when the denominator vanishes there.
    pub fn eval<S: Scalar>(&self, x: &S) -> Option<S> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        self.num.eval(x).div(&d)
    }

    /// `f(1/u)`, i.e. complex conjugation when `u` lies on the unit circle.
    pub fn invert_variable(&self) -> Self {
        let n = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        ratfunc_normalize(self.num.reversed(n), self.den.reversed(n))
            .expect("reversal of a nonzero denominator is nonzero")
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Poly::one()
    }

    fn parse_coeffs(s: &str) -> Result<Poly, FieldError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map(Poly::new)
    }
}

fn format_coeffs(p: &Poly) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(format_rational).collect();
    format!("[{}]", parts.join(","))
}

impl RationalFunction {
    /// Readable form with the indeterminate printed as `var`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.num.display_in(var)
        } else {
            format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("u"))
    }
}

impl super::ExactString for RationalFunction {
    /// Canonical coefficient lists, constant term first: `"[n0,n1,...]/[d0,d1,...]"`.
    fn to_exact_string(&self) -> String {
        format!("{}/{}", format_coeffs(&self.num), format_coeffs(&self.den))
    }
    fn parse_exact(s: &str) -> Result<Self, FieldError> {
        let (n, d) = s
            .split_once("]/[")
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        let num = Self::parse_coeffs(&format!("{n}]"))?;
        let den = Self::parse_coeffs(&format!("[{d}"))?;
        ratfunc_normalize(num, den)
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return ratfunc_normalize(&self.num + &o.num, self.den).unwrap();
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        ratfunc_normalize(num, &self.den * &o.den).unwrap()
    }
}
impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}
impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        // cross-cancel first to keep intermediate degrees small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = o.den.div_rem(&g1).0;
        let n2 = o.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        let den = &d1 * &d2;
        let l = den.leading().recip();
        Self { num: (&n1 * &n2).scale(&l), den: den.scale(&l) }
    }
}
impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        Self { num: -self.num, den: self.den }
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(q.clone()))
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(ratfunc_normalize(self.den.clone(), self.num.clone()).unwrap())
    }
    /// Conjugation on the unit circle, where `ū = 1/u`.
    fn conj(&self) -> Self {
        self.invert_variable()
    }
    fn size_hint(&self) -> usize {
        let bits = |p: &Poly| -> usize { p.coeffs().iter().map(|c| c.size_hint() + 1).sum() };
        bits(&self.num) + bits(&self.den)
    }
    fn is_one(&self) -> bool {
        self.num == self.den && self.den.coeffs().len() == 1 && self.den.coeff(0).is_one()
    }
}

impl ExactField for RationalFunction {}
impl ComplexModulus for RationalFunction {}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RationalFunction {
    fn from(q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Self::from_poly(Poly::constant(q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, ExactString};

    #[test]
    fn normalize_examples() {
        let f = ratfunc_normalize(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f, RationalFunction::from_poly(Poly::from_ints(&[1, 1])));
        let g = ratfunc_normalize(Poly::from_ints(&[0, 2]), Poly::from_ints(&[2])).unwrap();
        assert_eq!(g, RationalFunction::u());
        let h = ratfunc_normalize(Poly::from_ints(&[1, 1, 1]), Poly::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(h.num(), &Poly::from_ints(&[1, 1, 1]));
        assert_eq!(h.den(), &Poly::from_ints(&[0, 1, 1]));
        assert!(ratfunc_normalize(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn arithmetic_and_eval() {
        let u = RationalFunction::u();
        let t = u.clone() + u.inv().unwrap();
        assert_eq!(t.to_string(), "(u^2 + 1)/(u)");
        assert_eq!(t.eval(&rat(2, 1)), Some(rat(5, 2)));
        assert_eq!(t.eval(&rat(0, 1)), None);
        assert_eq!(t.conj(), t);
        assert_eq!(u.conj(), u.inv().unwrap());
        let s = RationalFunction::parse_exact(&t.to_exact_string()).unwrap();
        assert_eq!(s, t);
        assert_eq!(t.to_exact_string(), "[1,0,1]/[0,1]");
    }
}
