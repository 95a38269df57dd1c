//! Bounds on `sz(n)`, the size of the largest 3-free subset of `[n]`.
//!
//! Upper bounds come from splitting `[n]` into blocks, from a quantitative
//! form of Roth's theorem, and from integer programs exported as text for
//! an external solver. Lower bounds come from the thirds method: two large
//! 3-free sets at the ends of `[n]` and whatever still fits in the middle.

mod aof;
mod lp;
mod roth;
mod split;
mod thirds;

pub use aof::{a_of, AOf};
pub use lp::{good_prefix, good_prefixes, lp_export, lp_export_all, Constraint, LpModel, LpOptions, Sense};
pub use roth::{decimal, roth_min_n, RothBound, RothQuery};
pub use split::{density_upper, splitting_table, splitting_upper};
pub use thirds::{base_family, fill_middle, record_witnesses, thirds_search, FamilyOptions, RECORD_WITNESSES};

#[derive(Debug, thiserror::Error)]
pub enum BoundsError {
    #[error("no N satisfies the inequality: the denominator c(c-eps) - (c+eps)(m^2/2M^2 + 4 eps) is not positive")]
    Infeasible,
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("the table has no exact value for n = {0}")]
    TableGap(u64),
    #[error(transparent)]
    Search(#[from] exact_search::SearchError),
    #[error(transparent)]
    Core(#[from] apcore::ApError),
}
