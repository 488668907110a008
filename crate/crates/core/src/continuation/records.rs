use serde::{Deserialize, Serialize};

use super::real::{bits_for_digits, Real};
use super::reconstruct::{FamilyCandidate, Parameter};
use super::schedule::PathPoint;
use crate::bianchi::{matrix_strings, RelatorVerdict, Representation};
use crate::exactfield::{format_rational, parse_rational, ExactString, RationalFunction};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("cannot parse {what} {value:?}")]
    Parse { what: &'static str, value: String },
    #[error("image {0} is not a square matrix")]
    NotSquare(usize),
    #[error("{images} images for {generators} generators")]
    Arity { generators: usize, images: usize },
}

fn parse_err(what: &'static str, value: &str) -> RecordError {
    RecordError::Parse { what, value: value.to_string() }
}

fn to_matrix<S>(
    rows: &[Vec<String>],
    index: usize,
    parse: impl Fn(&str) -> Result<S, RecordError>,
) -> Result<Matrix<S>, RecordError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(RecordError::NotSquare(index));
    }
    let data = rows.iter().flatten().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_vec(n, n, data))
}

fn check_arity(generators: &str, images: usize) -> Result<Vec<char>, RecordError> {
    let names: Vec<char> = generators.chars().collect();
    if names.len() != images {
        return Err(RecordError::Arity { generators: names.len(), images });
    }
    Ok(names)
}

/// A sampled path point with every real entry written at full precision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathPointRecord {
    pub t: String,
    pub residual: String,
    pub iterations: usize,
    pub charpoly_check: bool,
    pub generators: String,
    pub images: Vec<Vec<Vec<String>>>,
}

impl PathPointRecord {
    pub fn from_point(p: &PathPoint) -> Self {
        let decimal = |x: &Real| x.to_decimal(x.decimal_digits());
        Self {
            t: format_rational(&p.t_value),
            residual: p.residual.to_decimal(6),
            iterations: p.iterations,
            charpoly_check: p.charpoly_check,
            generators: p.representation.generator_names.iter().collect(),
            images: p
                .representation
                .images
                .iter()
                .map(|m| m.to_rows().iter().map(|r| r.iter().map(decimal).collect()).collect())
                .collect(),
        }
    }

    pub fn to_point(&self, bits: u32) -> Result<PathPoint, RecordError> {
        let real = |s: &str| Real::parse(s, bits).ok_or_else(|| parse_err("decimal", s));
        let names = check_arity(&self.generators, self.images.len())?;
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(i, rows)| to_matrix(rows, i, real))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PathPoint {
            t_value: parse_rational(&self.t).map_err(|_| parse_err("rational", &self.t))?,
            representation: Representation::new(names, images),
            residual: real(&self.residual)?,
            iterations: self.iterations,
            charpoly_check: self.charpoly_check,
        })
    }
}

/// A traced path: the working precision and the sampled points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathRecord {
    pub d: u64,
    pub precision_digits: u32,
    pub points: Vec<PathPointRecord>,
}

impl PathRecord {
    pub fn new(d: u64, precision_digits: u32, points: &[PathPoint]) -> Self {
        Self { d, precision_digits, points: points.iter().map(PathPointRecord::from_point).collect() }
    }

    pub fn to_points(&self) -> Result<Vec<PathPoint>, RecordError> {
        let bits = bits_for_digits(self.precision_digits);
        self.points.iter().map(|p| p.to_point(bits)).collect()
    }
}

/// A reconstructed family: entries as canonical coefficient lists
/// (`"[n0,n1,...]/[d0,d1,...]"`, constant term first) plus a readable form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub parameter: Parameter,
    pub variable: String,
    pub generators: String,
    pub images: Vec<Vec<Vec<String>>>,
    pub display: Vec<Vec<Vec<String>>>,
    pub samples: Vec<String>,
    pub verdicts: Vec<RelatorVerdict>,
    pub unimodular: bool,
    pub verified: bool,
}

impl FamilyRecord {
    pub fn from_candidate(c: &FamilyCandidate) -> Self {
        Self {
            parameter: c.parameter,
            variable: c.parameter.name().to_string(),
            generators: c.generator_names.iter().collect(),
            images: c.images.iter().map(matrix_strings).collect(),
            display: c
                .images
                .iter()
                .map(|m| m.map(|f| f.display_in(c.parameter.name())).to_rows())
                .collect(),
            samples: c.samples.iter().map(format_rational).collect(),
            verdicts: c.verdicts.clone(),
            unimodular: c.unimodular,
            verified: c.verified,
        }
    }

    pub fn representation(&self) -> Result<Representation<RationalFunction>, RecordError> {
        let names = check_arity(&self.generators, self.images.len())?;
        let parse = |s: &str| RationalFunction::parse_exact(s).map_err(|_| parse_err("rational function", s));
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(i, rows)| to_matrix(rows, i, parse))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Representation::new(names, images))
    }
}
