use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::format_rational;
use super::Rational;

/// Dense univariate polynomial over ℚ, coefficients from the constant term up.
/// The coefficient vector never has a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading().recip();
        self.scale(&l)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Horner evaluation at any scalar.
    pub fn eval<S: super::Scalar>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + S::from_rational(c);
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Substitute `x ↦ q(x)`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Coefficients reversed with respect to degree `n`: `x^n·p(1/x)`.
    pub fn reversed(&self, n: usize) -> Poly {
        let mut v = vec![Rational::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            assert!(k <= n, "reversal degree below polynomial degree");
            v[n - k] = c.clone();
        }
        Poly::new(v)
    }

    /// Primitive integer polynomial with positive leading coefficient, same roots.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    pub fn from_bigints(c: &[BigInt]) -> Poly {
        Poly::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    /// All rational roots (without multiplicity), in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.coeff(0).is_zero() {
            roots.push(Rational::zero());
            while p.coeff(0).is_zero() {
                p = Poly::new(p.coeffs[1..].to_vec());
            }
        }
        let ints = p.primitive_integer();
        if ints.len() > 1 {
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            for num in divisors(&a0) {
                for den in divisors(&an) {
                    for sgn in [1, -1] {
                        let q = Rational::new(&num * BigInt::from(sgn), den.clone());
                        if p.eval(&q).is_zero() && !roots.contains(&q) {
                            roots.push(q);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let lin = Poly::new(vec![-r.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.div_rem(&lin).0;
            m += 1;
        }
        m
    }

    /// Sturm sequence of the square-free part.
    fn sturm_sequence(&self) -> Vec<Poly> {
        let g = self.gcd(&self.derivative());
        let p = self.div_rem(&g).0;
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(-r);
        }
        seq
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_real_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        assert!(lo <= hi, "empty interval");
        if self.is_zero() {
            panic!("zero polynomial has infinitely many roots");
        }
        let seq = self.sturm_sequence();
        let changes = |x: &Rational| {
            let signs: Vec<i8> = seq
                .iter()
                .map(|p| {
                    let v = p.eval(x);
                    if v.is_positive() {
                        1
                    } else if v.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .filter(|&s| s != 0)
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        // Sturm counts roots in (lo, hi]; add lo separately.
        let mut n = changes(lo) - changes(hi);
        if self.eval(lo).is_zero() {
            n += 1;
        }
        n
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono));
            }
        }
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Catalog polynomials have tiny coefficients; trial division is enough.
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut k = BigInt::one();
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            out.push(k.clone());
            let q = n / &k;
            if q != k {
                out.push(q);
            }
        }
        k += 1;
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}
impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}
impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}
impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}
impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}
impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    #[test]
    fn division_and_gcd() {
        let p = Poly::from_ints(&[-1, 0, 1]); // x² − 1
        let q = Poly::from_ints(&[-1, 1]); // x − 1
        let (quot, rem) = p.div_rem(&q);
        assert_eq!(quot, Poly::from_ints(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(p.gcd(&Poly::from_ints(&[1, 2, 1])), Poly::from_ints(&[1, 1]));
        assert_eq!(p.gcd(&Poly::from_ints(&[5])), Poly::one());
    }

    #[test]
    fn roots() {
        // (x − 1)²(x − 2)(2x − 1)
        let p = &(&Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[-2, 1]))
            * &Poly::from_ints(&[-1, 2]);
        assert_eq!(p.rational_roots(), vec![rat(1, 2), rat(1, 1), rat(2, 1)]);
        assert_eq!(p.root_multiplicity(&rat(1, 1)), 2);
        assert_eq!(p.count_real_roots(&rat(0, 1), &rat(1, 1)), 2);
        assert_eq!(p.count_real_roots(&rat(1, 1), &rat(3, 1)), 2);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).count_real_roots(&rat(-5, 1), &rat(5, 1)), 0);
        // x² − 2 has both roots in [−2, 2], none rational
        let s = Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(s.count_real_roots(&rat(-2, 1), &rat(2, 1)), 2);
        assert!(s.rational_roots().is_empty());
    }

    #[test]
    fn primitive_and_display() {
        let p = Poly::new(vec![rat(1, 2), rat(0, 1), rat(-3, 4)]);
        let ints: Vec<i64> = p
            .primitive_integer()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(ints, vec![-2, 0, 3]);
        assert_eq!(p.display_in("u"), "-3/4*u^2 + 1/2");
        assert_eq!(Poly::from_ints(&[0, -1, 1]).display_in("u"), "u^2 - u");
    }

    #[test]
    fn compose_and_reverse() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.compose(&Poly::from_ints(&[1, 1])), Poly::from_ints(&[6, 8, 3]));
        assert_eq!(p.reversed(3), Poly::from_ints(&[0, 3, 2, 1]));
    }
}
