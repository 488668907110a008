use super::{lift_representation, swan_presentation, BianchiError};
use crate::exactfield::{catalog_tau, QuadImag, QuadReal, Scalar};
use crate::linalg::Matrix;

/// Images of the generators, in presentation order.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<S> {
    pub generator_names: Vec<char>,
    pub images: Vec<Matrix<S>>,
}

impl<S: Scalar> Representation<S> {
    pub fn new(generator_names: Vec<char>, images: Vec<Matrix<S>>) -> Self {
        assert_eq!(generator_names.len(), images.len(), "one image per generator");
        Self { generator_names, images }
    }

    pub fn dimension(&self) -> usize {
        self.images.first().map_or(0, Matrix::rows)
    }

    pub fn num_generators(&self) -> usize {
        self.images.len()
    }

    /// Inverse images; `Err` if some image is singular.
    pub fn inverses(&self) -> Result<Vec<Matrix<S>>, BianchiError> {
        self.images
            .iter()
            .map(|m| m.inverse().ok_or(BianchiError::Singular))
            .collect()
    }

    pub fn image(&self, name: char) -> Option<&Matrix<S>> {
        self.generator_names.iter().position(|&n| n == name).map(|i| &self.images[i])
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Representation<T> {
        Representation {
            generator_names: self.generator_names.clone(),
            images: self.images.iter().map(|m| m.map(&f)).collect(),
        }
    }

    /// `g·ρ·g⁻¹`.
    pub fn conjugate(&self, g: &Matrix<S>, g_inv: &Matrix<S>) -> Self {
        Self {
            generator_names: self.generator_names.clone(),
            images: self.images.iter().map(|m| &(g * m) * g_inv).collect(),
        }
    }
}

fn m2(a: QuadImag, b: QuadImag, c: QuadImag, d: QuadImag) -> Matrix<QuadImag> {
    Matrix::from_vec(2, 2, vec![a, b, c, d])
}

/// The SL(2, 𝒪_d) generator matrices of the Swan catalog, in presentation order.
pub fn sl2_generators(d: u64) -> Result<Representation<QuadImag>, BianchiError> {
    let p = swan_presentation(d)?;
    let tau = catalog_tau(d).expect("catalog d is squarefree");
    let n = |k: i64| QuadImag::from_int(k);
    let images = p
        .generator_names
        .iter()
        .map(|&name| match name {
            'T' => m2(n(1), n(1), n(0), n(1)),
            'U' => m2(n(1), tau.clone(), n(0), n(1)),
            'A' => m2(n(0), n(-1), n(1), n(0)),
            'L' => m2(tau.inv().expect("τ ≠ 0"), n(0), n(0), tau.clone()),
            'B' => match d {
                19 => m2(n(1) - tau.clone(), n(2), n(2), tau.clone()),
                5 => m2(-tau.clone(), n(2), n(2), tau.clone()),
                6 => m2(n(-1) - tau.clone(), n(2) - tau.clone(), n(2), n(1) + tau.clone()),
                _ => unreachable!("B only in d = 5, 6, 19"),
            },
            'C' => match d {
                15 => m2(n(4), n(1) - n(2) * tau.clone(), n(2) * tau.clone() - n(1), n(4)),
                5 => m2(
                    -tau.clone() - n(4),
                    n(-2) * tau.clone(),
                    n(2) * tau.clone(),
                    tau.clone() - n(4),
                ),
                6 => m2(n(5), n(-2) * tau.clone(), n(2) * tau.clone(), n(5)),
                _ => unreachable!("C only in d = 5, 6, 15"),
            },
            other => unreachable!("unknown generator {other}"),
        })
        .collect();
    Ok(Representation::new(p.generator_names, images))
}

/// The lattice embedding Bi(d) → SO(3,1): spin lift of the catalog generators.
pub fn holonomy(d: u64) -> Result<Representation<QuadReal>, BianchiError> {
    lift_representation(&sl2_generators(d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::QuadImag;

    #[test]
    fn determinants_one() {
        for d in super::super::CATALOG {
            let r = sl2_generators(d).unwrap();
            for (name, m) in r.generator_names.iter().zip(&r.images) {
                assert_eq!(m.det(), QuadImag::one(), "d={d} {name}");
            }
        }
    }

    #[test]
    fn printed_matrices() {
        let r = sl2_generators(1).unwrap();
        let l = r.image('L').unwrap();
        assert_eq!(l[(0, 0)], -QuadImag::i());
        assert_eq!(l[(1, 1)], QuadImag::i());
        let t = sl2_generators(7).unwrap();
        assert_eq!(t.images[0], Matrix::from_rationals(&Matrix::from_rows(vec![
            vec![crate::exactfield::rat(1, 1), crate::exactfield::rat(1, 1)],
            vec![crate::exactfield::rat(0, 1), crate::exactfield::rat(1, 1)],
        ])));
    }
}
