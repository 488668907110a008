//! Numerical continuation along the deformation curve: perturbation, Newton
//! refinement with pinned characteristic polynomial, conjugacy normal form,
//! parameter schedules and exact reconstruction of the family.

mod newton;
mod normalize;
mod numeric;
mod real;
mod reconstruct;
mod records;
mod schedule;
mod settings;

pub use newton::{
    cast_representation, charpoly_coefficients, charpoly_pin, newton_refine, perturb, system_residual,
    Constraint, NewtonError, NewtonOutcome,
};
pub use normalize::{normal_form_exact, normalize_conjugacy, NormalizeError};
pub use numeric::{least_squares, null_vector};
pub use real::{bits_for_digits, working_bits, PrecisionGuard, Real};
pub use reconstruct::{
    fit_rational_function, reconstruct_family, FamilyCandidate, FitConfig, Parameter, ReconstructError,
};
pub use records::{FamilyRecord, PathPointRecord, PathRecord, RecordError};
pub use schedule::{charpoly_matches, linear_schedule, trace_schedule, PathPoint, ScheduleError};
pub use settings::{NewtonSettings, SettingsError};
