use super::{BianchiError, Word};

/// A relation `lhs = rhs`; its residual in a matrix representation is `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub lhs: Word,
    pub rhs: Word,
}

/// A finite presentation with single-letter generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// Catalog key, `None` for presentations built by hand.
    pub d: Option<u64>,
    pub generator_names: Vec<char>,
    pub relators: Vec<Relator>,
}

/// The catalogued values of `d`, in the order of the dimension table.
pub const CATALOG: [u64; 9] = [3, 1, 2, 7, 11, 19, 5, 15, 6];

// Relators as (lhs, rhs) over the compact word syntax; uppercase is a
// generator, lowercase its inverse, "1" the identity. Long power relators
// are kept as powers; commutators and conjugation relators are rewritten
// without inverses where the printed form allows it.
fn table(d: u64) -> Option<(&'static str, Vec<(&'static str, &'static str)>)> {
    Some(match d {
        1 => (
            "TULA",
            vec![
                ("TU", "UT"),
                ("LL", "1"),
                ("TLTL", "1"),
                ("ULUL", "1"),
                ("ALAL", "1"),
                ("AA", "1"),
                ("TAT", "ata"),
                ("UALUALUAL", "1"),
            ],
        ),
        3 => (
            "TULA",
            vec![
                ("TU", "UT"),
                ("LLL", "1"),
                ("ALAL", "1"),
                ("AA", "1"),
                ("TAT", "ata"),
                ("UALUALUAL", "1"),
                ("lUL", "T"),
                ("lTL", "tu"),
            ],
        ),
        2 => ("TUA", vec![("TU", "UT"), ("AA", "1"), ("TAT", "ata"), ("AuAUAuAU", "1")]),
        7 => ("TUA", vec![("TU", "UT"), ("AA", "1"), ("TAT", "ata"), ("ATuAU", "uaUta")]),
        11 => ("TUA", vec![("TU", "UT"), ("AA", "1"), ("TAT", "ata"), ("ATuAUATuAUATuAU", "1")]),
        19 => (
            "TUAB",
            vec![
                ("TU", "UT"),
                ("AA", "1"),
                ("TAT", "ata"),
                ("BBB", "1"),
                ("BtBtBt", "1"),
                ("ABAB", "1"),
                ("AtUBuAtUBu", "1"),
            ],
        ),
        15 => (
            "TUAC",
            vec![("TU", "UT"), ("AC", "CA"), ("AA", "1"), ("TAT", "ata"), ("UCUAT", "TAUCU")],
        ),
        5 => (
            "TUABC",
            vec![
                ("TU", "UT"),
                ("AA", "1"),
                ("TAT", "ata"),
                ("BB", "1"),
                ("ABAB", "1"),
                ("AUBuAUBu", "1"),
                ("ACA", "TCt"),
                ("TCt", "UBuCB"),
            ],
        ),
        6 => (
            "TUABC",
            vec![
                ("TU", "UT"),
                ("AC", "CA"),
                ("AA", "1"),
                ("TAT", "ata"),
                ("BB", "1"),
                ("ATBATBATB", "1"),
                ("ATUBuATUBuATUBu", "1"),
                ("CTUB", "TBCU"),
            ],
        ),
        _ => return None,
    })
}

/// Swan's presentation of Bi(d) = PSL(2, 𝒪_d).
pub fn swan_presentation(d: u64) -> Result<Presentation, BianchiError> {
    let (names, rels) = table(d).ok_or(BianchiError::NotInCatalog(d))?;
    let names: Vec<char> = names.chars().collect();
    Presentation::from_compact(Some(d), &names, &rels)
}

impl Presentation {
    /// Build from compact `(lhs, rhs)` word strings.
    pub fn from_compact(
        d: Option<u64>,
        names: &[char],
        relators: &[(&str, &str)],
    ) -> Result<Self, BianchiError> {
        let relators = relators
            .iter()
            .map(|(l, r)| {
                Ok(Relator { lhs: Word::parse(l, names)?, rhs: Word::parse(r, names)? })
            })
            .collect::<Result<_, BianchiError>>()?;
        Ok(Self { d, generator_names: names.to_vec(), relators })
    }

    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    pub fn relator_string(&self, i: usize) -> String {
        let r = &self.relators[i];
        format!(
            "{}={}",
            r.lhs.compact(&self.generator_names),
            r.rhs.compact(&self.generator_names)
        )
    }

    pub fn relator_pretty(&self, i: usize) -> String {
        let r = &self.relators[i];
        format!(
            "{} = {}",
            r.lhs.pretty(&self.generator_names),
            r.rhs.pretty(&self.generator_names)
        )
    }
}
