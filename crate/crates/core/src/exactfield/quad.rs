use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::rational::{format_rational, is_squarefree, parse_rational};
use super::{ComplexModulus, ExactField, ExactString, FieldError, Rational, RealSign, Scalar};

// `d == 0` marks a value whose field is not yet fixed (it has no irrational
// part); it adopts the `d` of whatever it is combined with.

macro_rules! quad_type {
    ($name:ident, $sign:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug)]
        pub struct $name {
            d: u64,
            a: Rational,
            b: Rational,
        }

        impl $name {
            /// `a + b·ω` in the field with radicand `d` (squarefree, positive).
            pub fn new(d: u64, a: Rational, b: Rational) -> Result<Self, FieldError> {
                if !is_squarefree(d) {
                    return Err(FieldError::NotSquarefree(d));
                }
                Ok(Self::raw(d, a, b))
            }

            /// A rational value, compatible with every `d`.
            pub fn rational(a: Rational) -> Self {
                Self { d: 0, a, b: Rational::zero() }
            }

            /// A rational value tagged with the field `d`.
            pub fn rational_in(d: u64, a: Rational) -> Self {
                Self::raw(d, a, Rational::zero())
            }

            pub fn d(&self) -> u64 {
                self.d
            }
            pub fn a(&self) -> &Rational {
                &self.a
            }
            pub fn b(&self) -> &Rational {
                &self.b
            }
            pub fn is_rational(&self) -> bool {
                self.b.is_zero()
            }

            fn common_d(&self, other: &Self) -> Result<u64, FieldError> {
                match (self.d, other.d) {
                    (0, e) | (e, 0) => Ok(e),
                    (x, y) if x == y => Ok(x),
                    (_, y) if self.b.is_zero() => Ok(y),
                    (x, _) if other.b.is_zero() => Ok(x),
                    (x, y) => Err(FieldError::MismatchedField(x, y)),
                }
            }

            fn lenient_d(&self, other: &Self) -> u64 {
                self.common_d(other)
                    .unwrap_or_else(|e| panic!("{}: {}", stringify!($name), e))
            }

            pub(crate) fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
                if self.d != 0 && other.d != 0 && self.d != other.d {
                    return Err(FieldError::MismatchedField(self.d, other.d));
                }
                let d = self.common_d(other)?;
                let dq = Rational::from_integer(BigInt::from(d));
                let s: Rational = Rational::from_integer(BigInt::from($sign));
                let a = &self.a * &other.a + s * dq * &self.b * &other.b;
                let b = &self.a * &other.b + &self.b * &other.a;
                Ok(Self::raw(d, a, b))
            }

            /// The field norm `x·x'` where `x'` negates the irrational part.
            pub fn norm(&self) -> Rational {
                let dq = Rational::from_integer(BigInt::from(self.d));
                let s: Rational = Rational::from_integer(BigInt::from($sign));
                &self.a * &self.a - s * dq * &self.b * &self.b
            }
        }

        impl PartialEq for $name {
            fn eq(&self, other: &Self) -> bool {
                self.a == other.a
                    && self.b == other.b
                    && (self.b.is_zero() || self.d == other.d)
            }
        }
        impl Eq for $name {}

        impl Add for $name {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                let d = self.lenient_d(&o);
                Self::raw(d, self.a + o.a, self.b + o.b)
            }
        }
        impl Sub for $name {
            type Output = Self;
            fn sub(self, o: Self) -> Self {
                let d = self.lenient_d(&o);
                Self::raw(d, self.a - o.a, self.b - o.b)
            }
        }
        impl Mul for $name {
            type Output = Self;
            fn mul(self, o: Self) -> Self {
                self.checked_mul(&o)
                    .or_else(|_| {
                        // one side rational but tagged with another field
                        let d = self.common_d(&o)?;
                        let mut x = self.clone();
                        let mut y = o.clone();
                        x.d = d;
                        y.d = d;
                        x.checked_mul(&y)
                    })
                    .unwrap_or_else(|e| panic!("{}: {}", stringify!($name), e))
            }
        }
        impl Neg for $name {
            type Output = Self;
            fn neg(self) -> Self {
                Self::raw(self.d, -self.a, -self.b)
            }
        }

        impl ExactField for $name {}
    };
}

quad_type!(QuadReal, 1, "An element `a + b·√d` of the real quadratic field ℚ(√d).");
quad_type!(QuadImag, -1, "An element `a + b·i√d` of the imaginary quadratic field ℚ(i√d).");

impl QuadReal {
    fn raw(d: u64, a: Rational, b: Rational) -> Self {
        if d == 1 {
            // √1 = 1
            Self { d: 1, a: a + b, b: Rational::zero() }
        } else {
            Self { d, a, b }
        }
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u64) -> Result<Self, FieldError> {
        Self::new(d, Rational::zero(), Rational::one())
    }
}

impl QuadImag {
    fn raw(d: u64, a: Rational, b: Rational) -> Self {
        Self { d, a, b }
    }

    /// `i√d` itself.
    pub fn i_sqrt_d(d: u64) -> Result<Self, FieldError> {
        Self::new(d, Rational::zero(), Rational::one())
    }

    /// The imaginary unit `i` (the case `d = 1`).
    pub fn i() -> Self {
        Self::raw(1, Rational::zero(), Rational::one())
    }

    /// Real and imaginary parts as elements of ℚ(√d).
    pub fn re_im(&self) -> (QuadReal, QuadReal) {
        let d = self.d;
        let re = if d == 0 {
            QuadReal::rational(self.a.clone())
        } else {
            QuadReal::rational_in(d, self.a.clone())
        };
        let im = if self.b.is_zero() {
            QuadReal::rational(Rational::zero())
        } else {
            QuadReal::raw(d, Rational::zero(), self.b.clone())
        };
        (re, im)
    }
}

/// Product in ℚ(√d); both operands must carry the same `d`.
pub fn quad_mul(x: &QuadReal, y: &QuadReal) -> Result<QuadReal, FieldError> {
    x.checked_mul(y)
}

impl Scalar for QuadReal {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::raw(self.d, &self.a / &n, -&self.b / &n))
    }
    fn size_hint(&self) -> usize {
        self.a.size_hint() + self.b.size_hint()
    }
}

impl Scalar for QuadImag {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Self::rational(q.clone())
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::raw(self.d, &self.a / &n, -&self.b / &n))
    }
    fn conj(&self) -> Self {
        Self::raw(self.d, self.a.clone(), -self.b.clone())
    }
    fn size_hint(&self) -> usize {
        self.a.size_hint() + self.b.size_hint()
    }
}

impl ComplexModulus for QuadReal {}
impl ComplexModulus for QuadImag {}

impl RealSign for QuadReal {
    fn sign(&self) -> Option<Ordering> {
        let sa = self.a.sign()?;
        let sb = self.b.sign()?;
        if sa == sb || sb == Ordering::Equal {
            return Some(sa);
        }
        if sa == Ordering::Equal {
            return Some(sb);
        }
        // opposite signs: compare a² with d·b²
        let a2 = &self.a * &self.a;
        let db2 = Rational::from_integer(BigInt::from(self.d)) * &self.b * &self.b;
        Some(match a2.cmp(&db2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        })
    }
}

impl RealSign for QuadImag {
    fn sign(&self) -> Option<Ordering> {
        if self.b.is_zero() {
            self.a.sign()
        } else {
            None
        }
    }
}

fn format_quad(a: &Rational, b: &Rational, unit: &str) -> String {
    if b.is_zero() {
        return format_rational(a);
    }
    let mag = b.abs();
    let irr = if mag.is_one() {
        unit.to_string()
    } else {
        format!("{}*{}", format_rational(&mag), unit)
    };
    match (a.is_zero(), b.is_negative()) {
        (true, false) => irr,
        (true, true) => format!("-{irr}"),
        (false, false) => format!("{}+{}", format_rational(a), irr),
        (false, true) => format!("{}-{}", format_rational(a), irr),
    }
}

/// Split into signed terms at top-level `+`/`-` (not the leading sign).
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' && bytes[i - 1] != b'*'
        {
            out.push(&s[start..i]);
            start = i;
        }
    }
    out.push(&s[start..]);
    out
}

/// Parse `"a"`, `"a+b*UNITd"`, `"-UNITd"` etc., returning `(d, a, b)`.
fn parse_quad(s: &str, unit: &str, bare_unit: Option<&str>) -> Result<(u64, Rational, Rational), FieldError> {
    let err = || FieldError::Parse(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    let mut d = 0u64;
    for term in split_terms(&compact) {
        let (neg, body) = match term.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        let (coef, radicand) = if let Some(pos) = body.find(unit) {
            let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            let rad: u64 = body[pos + unit.len()..].parse().map_err(|_| err())?;
            (coef, Some(rad))
        } else if let Some(bu) = bare_unit.filter(|bu| body.ends_with(bu)) {
            let head = &body[..body.len() - bu.len()];
            (head.strip_suffix('*').unwrap_or(head), Some(1))
        } else {
            (body, None)
        };
        let mut c = if coef.is_empty() {
            Rational::one()
        } else {
            parse_rational(coef)?
        };
        if neg {
            c = -c;
        }
        match radicand {
            None => a += c,
            Some(r) => {
                if d != 0 && d != r {
                    return Err(err());
                }
                d = r;
                b += c;
            }
        }
    }
    if d != 0 && !is_squarefree(d) {
        return Err(FieldError::NotSquarefree(d));
    }
    Ok((d, a, b))
}

impl fmt::Display for QuadReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_quad(&self.a, &self.b, &format!("sqrt{}", self.d)))
    }
}

impl fmt::Display for QuadImag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if self.d == 1 {
            "i".to_string()
        } else {
            format!("isqrt{}", self.d)
        };
        f.write_str(&format_quad(&self.a, &self.b, &unit))
    }
}

impl ExactString for QuadReal {
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
    fn parse_exact(s: &str) -> Result<Self, FieldError> {
        let (d, a, b) = parse_quad(s, "sqrt", None)?;
        Ok(Self::raw(d, a, b))
    }
}

impl ExactString for QuadImag {
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
    fn parse_exact(s: &str) -> Result<Self, FieldError> {
        let (d, a, b) = parse_quad(s, "isqrt", Some("i"))?;
        Ok(Self::raw(d, a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn qr(d: u64, a: Rational, b: Rational) -> QuadReal {
        QuadReal::new(d, a, b).unwrap()
    }

    #[test]
    fn quad_mul_examples() {
        let h = qr(7, rat(0, 1), rat(1, 2));
        assert_eq!(quad_mul(&h, &h).unwrap(), QuadReal::rational(rat(7, 4)));
        let x = qr(3, rat(1, 1), rat(1, 1));
        let y = qr(3, rat(1, 1), rat(-1, 1));
        assert_eq!(quad_mul(&x, &y).unwrap(), QuadReal::rational(rat(-2, 1)));
        let z = qr(3, rat(3, 2), rat(1, 2));
        assert_eq!(quad_mul(&z, &z).unwrap(), qr(3, rat(3, 1), rat(3, 2)));
        let w = qr(5, rat(0, 1), rat(1, 1));
        assert_eq!(
            quad_mul(&x, &w),
            Err(FieldError::MismatchedField(3, 5))
        );
    }

    #[test]
    fn d_one_folds() {
        let x = qr(1, rat(1, 2), rat(1, 3));
        assert_eq!(x, QuadReal::rational(rat(5, 6)));
        assert!(x.is_rational());
    }

    #[test]
    fn gaussian_units() {
        let i = QuadImag::i();
        assert_eq!(i.clone() * i.clone(), QuadImag::from_int(-1));
        assert_eq!(i.conj(), -i.clone());
        assert_eq!(i.inv().unwrap(), -i);
    }

    #[test]
    fn real_sign() {
        let s = |a, b| qr(2, rat(a, 1), rat(b, 1)).sign().unwrap();
        assert_eq!(s(3, -2), Ordering::Greater); // 3 - 2√2 > 0
        assert_eq!(s(-3, 2), Ordering::Less);
        assert_eq!(s(1, -1), Ordering::Less);
        assert_eq!(s(0, 0), Ordering::Equal);
    }

    #[test]
    fn serialization() {
        let x = qr(7, rat(0, 1), rat(1, 2));
        assert_eq!(x.to_exact_string(), "1/2*sqrt7");
        let y = qr(3, rat(-1, 2), rat(-3, 2));
        assert_eq!(y.to_exact_string(), "-1/2-3/2*sqrt3");
        for v in [x, y, qr(5, rat(2, 1), rat(1, 1)), QuadReal::rational(rat(-7, 3))] {
            assert_eq!(QuadReal::parse_exact(&v.to_exact_string()).unwrap(), v);
        }
        let g = QuadImag::new(1, rat(3, 5), rat(-4, 5)).unwrap();
        assert_eq!(g.to_exact_string(), "3/5-4/5*i");
        assert_eq!(QuadImag::parse_exact("3/5-4/5*i").unwrap(), g);
        let t = QuadImag::new(19, rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(t.to_exact_string(), "1/2+1/2*isqrt19");
        assert_eq!(QuadImag::parse_exact("1/2+1/2*isqrt19").unwrap(), t);
        assert_eq!(QuadImag::parse_exact("-isqrt2").unwrap(), -QuadImag::i_sqrt_d(2).unwrap());
        assert!(QuadReal::parse_exact("sqrt4").is_err());
    }
}
