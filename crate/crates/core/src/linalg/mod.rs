//! Dense exact linear algebra, congruence signatures, lattice reduction and
//! algebraic-number reconstruction from decimals.

mod lll;
mod matrix;
mod rank;
mod reconstruct;
mod signature;

pub use lll::{is_lll_reduced, lll_reduce, LatticeBasis, LllError};
pub use matrix::Matrix;
pub use rank::{rank, rank_and_kernel};
pub use reconstruct::{
    algebraic_reconstruct, algebraic_reconstruct_with, parse_decimal, AlgebraicGuess,
    ReconstructConfig, ReconstructResult,
};
pub use signature::{congruence_signature, Inertia, SignatureError};
