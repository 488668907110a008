use serde::Serialize;

use super::{
    lift_representation, sl2_generators, swan_presentation, validate_lifted,
    validate_presentation, BianchiError,
};
use crate::exactfield::ExactString;
use crate::linalg::Matrix;

/// Entries as exact strings, row by row.
pub fn matrix_strings<S: ExactString>(m: &Matrix<S>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(ExactString::to_exact_string).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorEntry {
    pub name: char,
    pub sl2: Vec<Vec<String>>,
    pub so31: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelatorEntry {
    pub lhs: String,
    pub rhs: String,
    pub pretty: String,
    /// `lhs·rhs⁻¹ = sign·I` in SL(2).
    pub sl2_sign: Option<i8>,
    pub lifted_identity: bool,
}

/// Catalog data for one `d`, with exact scalars as strings.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub d: u64,
    pub tau: String,
    pub generators: Vec<GeneratorEntry>,
    pub relators: Vec<RelatorEntry>,
}

pub fn catalog_entry(d: u64) -> Result<CatalogEntry, BianchiError> {
    let p = swan_presentation(d)?;
    let sl2 = sl2_generators(d)?;
    let lifted = lift_representation(&sl2)?;
    let v2 = validate_presentation(&p, &sl2)?;
    let v4 = validate_lifted(&p, &lifted)?;
    let generators = p
        .generator_names
        .iter()
        .enumerate()
        .map(|(i, &name)| GeneratorEntry {
            name,
            sl2: matrix_strings(&sl2.images[i]),
            so31: matrix_strings(&lifted.images[i]),
        })
        .collect();
    let relators = p
        .relators
        .iter()
        .enumerate()
        .map(|(i, rel)| RelatorEntry {
            lhs: rel.lhs.compact(&p.generator_names),
            rhs: rel.rhs.compact(&p.generator_names),
            pretty: p.relator_pretty(i),
            sl2_sign: v2[i].sign,
            lifted_identity: v4[i].pass,
        })
        .collect();
    Ok(CatalogEntry {
        d,
        tau: crate::exactfield::catalog_tau(d)
            .expect("catalog d is squarefree")
            .to_exact_string(),
        generators,
        relators,
    })
}
