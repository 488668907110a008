//! The Swan catalog of Bianchi groups: presentations, SL(2,𝒪_d) generators,
//! the spin lift to SO(3,1) and invariant-form solvers.

mod catalog;
mod forms;
mod generators;
mod presentation;
mod spin;
mod validate;
mod word;

pub use catalog::{catalog_entry, matrix_strings, CatalogEntry, RelatorEntry};
pub use forms::{intertwiners, invariant_form, FormKind, FormSide};
pub use generators::{holonomy, sl2_generators, Representation};
pub use presentation::{swan_presentation, Presentation, Relator, CATALOG};
pub use spin::{lift_representation, spin_lift};
pub use validate::{validate_lifted, validate_presentation, RelatorVerdict};
pub use word::Word;

/// Errors from catalog lookups and representation checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BianchiError {
    #[error("d not in catalog: {0}")]
    NotInCatalog(u64),
    #[error("determinant is not 1")]
    DeterminantNotOne,
    #[error("generator count mismatch: presentation has {presentation}, representation has {representation}")]
    ArityMismatch { presentation: usize, representation: usize },
    #[error("cannot parse word {0:?}")]
    BadWord(String),
    #[error("generator image is not invertible")]
    Singular,
}
