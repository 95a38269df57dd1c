//! Reports over the whole toolkit: exact values, the digit and sphere
//! constructions, bounds, method comparisons and the `c` exponent.
//!
//! The `apfree` binary is a thin layer over this library.

mod compare;
mod config;
mod estimate;
mod tables;

pub use compare::{compare, compare_row, crossovers, order_string, sphere_box, CompareOptions, ComparisonRow, Crossover, Method};
pub use config::{Budget, Config, Tier, DEFAULT_CONFIG};
pub use estimate::{c_estimate, ln_big};
pub use tables::{exact_table, roth_rows, table, Report, RothRow, ROTH_GRID, TABLE_IDS};

use num_bigint::BigUint;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("config: {0}")]
    Config(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("no table {0}; tables are numbered 1 to 16")]
    NoTable(u32),
    #[error("cannot read {0:?} as a number")]
    Number(String),
    #[error(transparent)]
    Search(#[from] exact_search::SearchError),
    #[error(transparent)]
    Bounds(#[from] bounds::BoundsError),
    #[error(transparent)]
    Sphere(#[from] sphere::SphereError),
}

/// Three significant digits (`1.45e76`) above 10^4, exact below.
pub fn sci(v: &BigUint) -> String {
    let s = v.to_string();
    if s.len() <= 4 {
        return s;
    }
    let lead: u64 = s[..4].parse().unwrap();
    let (mut m, mut e) = ((lead + 5) / 10, s.len() - 1);
    if m >= 1000 {
        m /= 10;
        e += 1;
    }
    format!("{}.{:02}e{e}", m / 100, m % 100)
}

/// Reads `12345`, `10^9` or `1e9`.
pub fn parse_n(s: &str) -> Result<BigUint, ReportError> {
    let bad = || ReportError::Number(s.to_string());
    let pow = |base: &str, exp: &str| -> Result<BigUint, ReportError> {
        let b: BigUint = base.trim().parse().map_err(|_| bad())?;
        let e: u32 = exp.trim().parse().map_err(|_| bad())?;
        Ok(b.pow(e))
    };
    if let Some((b, e)) = s.split_once('^') {
        return pow(b, e);
    }
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        return Ok(pow(m, "1")? * pow("10", e)?);
    }
    s.trim().parse().map_err(|_| bad())
}

/// `10^e` for powers of ten, the decimal below 10^4, else [`sci`].
pub fn label_n(n: &BigUint) -> String {
    let s = n.to_string();
    if s.len() > 1 && s.starts_with('1') && s[1..].bytes().all(|b| b == b'0') {
        return format!("10^{}", s.len() - 1);
    }
    sci(n)
}

/// `10^e`.
pub fn ten_pow(e: u32) -> BigUint {
    BigUint::from(10u8).pow(e)
}
