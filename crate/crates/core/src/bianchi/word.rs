use std::fmt;

use super::BianchiError;
use crate::exactfield::Scalar;
use crate::linalg::Matrix;

/// A word in the generators: `(generator index, ±1)` letters, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse a compact word over single-letter generator names: the
    /// uppercase name is the generator, the lowercase letter its inverse.
    /// `"1"` and `""` denote the identity.
    pub fn parse(s: &str, names: &[char]) -> Result<Self, BianchiError> {
        let bad = || BianchiError::BadWord(s.to_string());
        if s == "1" {
            return Ok(Self::identity());
        }
        let letters = s
            .chars()
            .map(|ch| {
                let upper = ch.to_ascii_uppercase();
                let idx = names.iter().position(|&n| n == upper).ok_or_else(bad)?;
                Ok((idx, if ch.is_ascii_uppercase() { 1 } else { -1 }))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { letters })
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn pow(&self, n: usize) -> Self {
        Self { letters: self.letters.repeat(n) }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Evaluate with precomputed inverses (`inverses[i]` = `images[i]⁻¹`).
    pub fn evaluate<S: Scalar>(&self, images: &[Matrix<S>], inverses: &[Matrix<S>]) -> Matrix<S> {
        let n = images.first().map_or(0, Matrix::rows);
        self.letters.iter().fold(Matrix::identity(n), |acc, &(g, e)| {
            if e > 0 {
                &acc * &images[g]
            } else {
                &acc * &inverses[g]
            }
        })
    }

    /// Compact form over the given names (lowercase for inverses).
    pub fn compact(&self, names: &[char]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(g, e)| if e > 0 { names[g] } else { names[g].to_ascii_lowercase() })
            .collect()
    }

    /// Readable form, e.g. `TU⁻¹A`.
    pub fn pretty(&self, names: &[char]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(g, e)| if e > 0 { names[g].to_string() } else { format!("{}⁻¹", names[g]) })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| if e > 0 { format!("g{g}") } else { format!("g{g}^-1") })
            .collect();
        write!(f, "{}", if parts.is_empty() { "1".into() } else { parts.join(" ") })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let names = ['T', 'U', 'A'];
        let w = Word::parse("ATuAU", &names).unwrap();
        assert_eq!(w.letters, vec![(2, 1), (0, 1), (1, -1), (2, 1), (1, 1)]);
        assert_eq!(w.compact(&names), "ATuAU");
        assert_eq!(w.inverse().compact(&names), "uaUta");
        assert_eq!(w.pretty(&names), "ATU⁻¹AU");
        assert!(Word::parse("X", &names).is_err());
        assert!(Word::parse("1", &names).unwrap().is_identity());
    }
}
