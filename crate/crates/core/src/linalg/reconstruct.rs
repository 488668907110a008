use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{lll_reduce, LatticeBasis};
use crate::exactfield::{FieldError, Poly, Rational};

/// Tuning for [`algebraic_reconstruct_with`].
#[derive(Clone, Debug)]
pub struct ReconstructConfig {
    /// Significant digits demanded per unknown coefficient: a guess of degree
    /// at most `n` needs `digits_per_degree·(n+1)` digits.
    pub digits_per_degree: usize,
    /// LLL parameter.
    pub delta: Rational,
}

impl Default for ReconstructConfig {
    fn default() -> Self {
        Self { digits_per_degree: 5, delta: Rational::new(3.into(), 4.into()) }
    }
}

/// An integer polynomial that (numerically) vanishes at the input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicGuess {
    /// Coefficients from the constant term up; primitive, positive leading coefficient.
    #[serde(serialize_with = "serialize_bigints")]
    pub minimal_polynomial: Vec<BigInt>,
    /// `|p(x)|` at the given decimal.
    #[serde(serialize_with = "serialize_rational")]
    pub residual: Rational,
    /// Largest coefficient magnitude.
    #[serde(serialize_with = "serialize_bigint")]
    pub height: BigInt,
    /// False when a rational root was found; otherwise no factor was found
    /// (exact for degree ≤ 3, since lower degrees are searched first).
    pub irreducible: bool,
}

impl AlgebraicGuess {
    pub fn degree(&self) -> usize {
        self.minimal_polynomial.len() - 1
    }

    /// For a degree-one guess `a·x + b`, the rational `−b/a`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.minimal_polynomial.as_slice() {
            [b, a] => Some(Rational::new(-b.clone(), a.clone())),
            _ => None,
        }
    }
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
fn serialize_rational<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exactfield::format_rational(v))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ReconstructResult {
    Found(AlgebraicGuess),
    NoGuess,
    InsufficientPrecision { available: usize, required: usize },
}

/// A decimal literal read exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedDecimal {
    pub value: Rational,
    pub significant_digits: usize,
    /// Place value of the last given digit.
    pub ulp: Rational,
}

/// Parse `[-]digits[.digits][e[±]digits]`.
pub fn parse_decimal(s: &str) -> Result<ParsedDecimal, FieldError> {
    let err = || FieldError::Parse(s.to_string());
    let t = s.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(p) => (&t[..p], t[p + 1..].parse::<i64>().map_err(|_| err())?),
        None => (t, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty()
        || !int.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{int}{frac}");
    let significant = digits.trim_start_matches('0').len().max(1);
    let m: BigInt = digits.parse().map_err(|_| err())?;
    let scale = exp - frac.len() as i64;
    let ten = Rational::from_integer(BigInt::from(10));
    let ulp = pow_i(&ten, scale);
    let mut value = Rational::from_integer(m) * &ulp;
    if neg {
        value = -value;
    }
    Ok(ParsedDecimal { value, significant_digits: significant, ulp })
}

fn pow_i(x: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// [`algebraic_reconstruct_with`] using the default configuration.
pub fn algebraic_reconstruct(
    x: &str,
    max_degree: usize,
    max_height: &BigInt,
) -> Result<ReconstructResult, FieldError> {
    algebraic_reconstruct_with(x, max_degree, max_height, &ReconstructConfig::default())
}

/// Guess the lowest-degree, then shortest, integer polynomial of height at most
/// `max_height` vanishing at the decimal `x` up to its truncation error.
pub fn algebraic_reconstruct_with(
    x: &str,
    max_degree: usize,
    max_height: &BigInt,
    cfg: &ReconstructConfig,
) -> Result<ReconstructResult, FieldError> {
    let dec = parse_decimal(x)?;
    if let Some(g) = exact_rational_guess(&dec.value, max_height) {
        return Ok(ReconstructResult::Found(g));
    }
    let required = cfg.digits_per_degree * (max_degree + 1);
    if dec.significant_digits < required {
        return Ok(ReconstructResult::InsufficientPrecision {
            available: dec.significant_digits,
            required,
        });
    }
    for n in 1..=max_degree {
        if let Some(g) = search_degree(&dec, n, max_height, cfg) {
            return Ok(ReconstructResult::Found(g));
        }
    }
    Ok(ReconstructResult::NoGuess)
}

/// The decimal is itself a rational of small height.
fn exact_rational_guess(x: &Rational, max_height: &BigInt) -> Option<AlgebraicGuess> {
    let (num, den) = (x.numer(), x.denom());
    let height = num.abs().max(den.clone());
    (height <= *max_height).then(|| AlgebraicGuess {
        minimal_polynomial: vec![-num.clone(), den.clone()],
        residual: Rational::zero(),
        height,
        irreducible: true,
    })
}

fn search_degree(
    dec: &ParsedDecimal,
    n: usize,
    max_height: &BigInt,
    cfg: &ReconstructConfig,
) -> Option<AlgebraicGuess> {
    // lattice rows (e_k, round(N·x^k)), N ≈ 1/ulp
    let scale = dec.ulp.recip().ceil();
    let mut vectors = Vec::with_capacity(n + 1);
    let mut xk = Rational::one();
    for k in 0..=n {
        let mut v = vec![BigInt::zero(); n + 2];
        v[k] = BigInt::one();
        v[n + 1] = (&scale * &xk).round().to_integer();
        vectors.push(v);
        xk *= &dec.value;
    }
    let reduced = lll_reduce(&LatticeBasis { vectors }, &cfg.delta).ok()?;
    let mut candidates: Vec<Vec<BigInt>> = reduced
        .vectors
        .into_iter()
        .map(|v| v[..=n].to_vec())
        .filter(|c| !c[n].is_zero())
        .collect();
    candidates.sort_by_key(|c| c.iter().map(|x| x * x).sum::<BigInt>());
    let delta = &dec.ulp / Rational::from_integer(BigInt::from(2));
    for c in candidates {
        let p = Poly::from_bigints(&c);
        let coeffs = p.primitive_integer();
        let height = coeffs.iter().map(|x| x.abs()).max()?;
        if height > *max_height {
            continue;
        }
        let p = Poly::from_bigints(&coeffs);
        let residual = p.eval(&dec.value).abs();
        // |p(x)| ≤ |p'(ξ)|·δ for some ξ within δ of x
        let bound_x = dec.value.abs() + &delta;
        let deriv_bound = p
            .derivative()
            .coeffs()
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * &bound_x + a.abs());
        if residual <= Rational::from_integer(BigInt::from(2)) * &delta * deriv_bound {
            let irreducible = n == 1 || p.rational_roots().is_empty();
            return Some(AlgebraicGuess { minimal_polynomial: coeffs, residual, height, irreducible });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn found(r: ReconstructResult) -> Vec<i64> {
        match r {
            ReconstructResult::Found(g) => {
                g.minimal_polynomial.iter().map(|c| c.try_into().unwrap()).collect()
            }
            other => panic!("expected a guess, got {other:?}"),
        }
    }

    #[test]
    fn decimal_parsing() {
        let d = parse_decimal("-0.00120").unwrap();
        assert_eq!(d.value, rat(-3, 2500));
        assert_eq!(d.significant_digits, 3);
        assert_eq!(d.ulp, rat(1, 100_000));
        let e = parse_decimal("1.5e-3").unwrap();
        assert_eq!(e.value, rat(3, 2000));
        assert_eq!(e.significant_digits, 2);
        assert!(parse_decimal("1.2.3").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn examples() {
        let h = BigInt::from(1000);
        assert_eq!(found(algebraic_reconstruct("0.5", 1, &h).unwrap()), vec![-1, 2]);
        assert_eq!(
            found(algebraic_reconstruct("0.86602540378443864676", 2, &h).unwrap()),
            vec![-3, 0, 4]
        );
        assert_eq!(
            algebraic_reconstruct("0.70710678", 4, &h).unwrap(),
            ReconstructResult::InsufficientPrecision { available: 8, required: 25 }
        );
    }

    #[test]
    fn golden_ratio_and_cube_root() {
        let h = BigInt::from(100);
        assert_eq!(
            found(algebraic_reconstruct("1.6180339887498948482045868343656", 3, &h).unwrap()),
            vec![-1, -1, 1]
        );
        assert_eq!(
            found(
                algebraic_reconstruct("1.2599210498948731647672106072782283505702514647015", 3, &h)
                    .unwrap()
            ),
            vec![-2, 0, 0, 1]
        );
    }

    #[test]
    fn transcendental_gives_no_guess() {
        let pi = "3.14159265358979323846264338327950288419716939937510";
        assert_eq!(
            algebraic_reconstruct(pi, 2, &BigInt::from(100)).unwrap(),
            ReconstructResult::NoGuess
        );
    }
}
