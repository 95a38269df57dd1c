//! Core vocabulary for subsets of `{1, ..., n}` without three-term
//! arithmetic progressions.
//!
//! * [`ApSet`] is a sorted set with its universe bound, plus the set-file
//!   format used across the toolkit.
//! * [`is_three_free`] is the reference predicate every construction and
//!   search result is checked against.
//! * [`SearchState`] is the incremental forbidden-bit engine used by the
//!   backtracking search, with [`forbidden_recompute`] as its oracle.
//! * [`SzTable`] records exact values and bounds on `sz(n)`.

mod apset;
mod bits;
mod error;
pub mod known;
mod state;
mod table;

pub use apset::{find_progression, is_three_free, ApSet};
pub use bits::Bits256;
pub use error::ApError;
pub use state::{forbidden_recompute, SearchState, MAX_N};
pub use table::{Kind, SzEntry, SzTable};

/// Arbitrary-precision cardinality used by the counting constructions.
pub type BigCount = num_bigint::BigUint;
