//! Exact values of `sz(n)`, the size of the largest subset of `[n]` with no
//! three-term arithmetic progression, by backtracking over bit prefixes.
//!
//! The pipeline follows three phases:
//!
//! 1. every 3-free window of length `L` ([`NumTable::new`]);
//! 2. for each window, the best number of ones in every extension of
//!    length `j <= m` ([`gather`]);
//! 3. a depth-first search per `n` that only asks whether `sz(n-1) + 1` is
//!    reachable, pruned by the window table and by known `sz` values
//!    ([`sz_final`]).
//!
//! Every set of size `sz(n-1) + 1` in `[n]` must contain both 1 and `n`, so
//! the searches pin both endpoints. [`sz_basic`] is the table-free variant
//! and [`sz_exhaustive`] the brute-force oracle.
//!
//! The heuristic builders ([`greedy_cover_set`], [`random_set`]) and the
//! concatenation families ([`ETable`]) live here too.

mod concat;
mod engine;
mod enumerate;
mod heuristics;
mod num;
mod search;
pub mod window;

pub use concat::{e_table, ETable};
pub use engine::Pruning;
pub use enumerate::{enumerate_tight, Enumeration};
pub use heuristics::{greedy_cover_set, random_set, RandomMethod};
pub use num::{gather, gather_with, GatherOptions, NumTable};
pub use search::{basic_table, compute_table, sz_basic, sz_exhaustive, sz_final, Found, PruneContext, RunReport};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid window parameters L = {l}, m = {m}")]
    Parameters { l: usize, m: usize },
    #[error("n = {0} is outside the supported range")]
    OutOfRange(usize),
    #[error("sz values for 0..{n} are required, only {have} given")]
    MissingTable { n: usize, have: usize },
    #[error("no witness for n = {0} to carry forward")]
    MissingWitness(usize),
    #[error("node budget exhausted; levels 0..={completed} are complete")]
    Budget { completed: usize },
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Core(#[from] apcore::ApError),
}
