//! Sphere constructions of 3-free sets.
//!
//! Vectors with digits in `[-d, d]` and a fixed squared norm `s` read as
//! integers in base `4d+1` cannot contain a 3-term progression: the base
//! is large enough that `x + z = 2y` holds digit by digit, and a sphere
//! contains no midpoint of two of its points. Variants take unions of
//! nearby spheres under extra digit conditions (see [`Variant`]).
//!
//! Counting is exact at any `n`: a suffix table counts vectors by norm, and
//! a walk along the digits of the window bound counts the vectors that fit.

mod count;
mod materialize;
mod obstruction;
mod table;
mod variant;

pub use count::{count_norm, count_within, signed_from_positive, TABLE_BUDGET};
pub use materialize::{materialize_sphere, MATERIALIZE_CAP};
pub use obstruction::{obstruction_check, Clause, Decomposition, ObstructionReport, SingleSquareCase};
pub use table::{DigitMode, Embed, ShellKind};
pub use variant::{best_sphere, offset, sizes_all_s, variant_size, window, Norm, SearchBox, SphereParams, Variant};

#[derive(Debug, thiserror::Error)]
pub enum SphereError {
    #[error("table of {cells} cells exceeds the budget of {limit}")]
    Budget { cells: u64, limit: u64 },
    #[error("n = {0} exceeds the materialization cap; pass force to override")]
    Cap(u64),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error(transparent)]
    Core(#[from] apcore::ApError),
}
