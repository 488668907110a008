//! Deformations of Bianchi groups into SL(4,ℝ) and SU(3,1).

pub mod exactfield;
pub mod linalg;
pub mod bianchi;
pub mod tangent;
pub mod continuation;
pub mod family3;

/// Version of this library, recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
