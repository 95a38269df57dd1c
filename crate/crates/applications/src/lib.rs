//! Two uses of 3-free sets.
//!
//! * [`queens_diag`]: the fewest queens on the main diagonal of an `n x n`
//!   board that attack every square is `n - sz(ceil(n/2))`.
//! * [`matching_graph`]: a 3-free `A` in `[k]` yields a bipartite graph on
//!   `[3k] x [3k]` that is the union of `k` induced matchings
//!   `M_i = {(a+i, a+2i) : a in A}`.

use apcore::{ApSet, SzTable};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt::Write;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("need n >= 2, got {0}")]
    TooSmall(u64),
    #[error("the table does not reach {0}")]
    OutOfTable(u64),
    #[error("set universe {universe} is larger than k = {k}")]
    NotInK { universe: u64, k: u64 },
}

/// `diag(n)`, exact when `sz(ceil(n/2))` is known and bracketed otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Diag {
    Exact { value: u64 },
    Between { lo: u64, hi: u64 },
}

pub fn queens_diag(n: u64, table: &SzTable) -> Result<Diag, AppError> {
    if n < 2 {
        return Err(AppError::TooSmall(n));
    }
    let h = n.div_ceil(2);
    let (lo, hi) = match (table.lower(h), table.upper(h)) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(AppError::OutOfTable(h)),
    };
    Ok(if lo == hi { Diag::Exact { value: n - lo } } else { Diag::Between { lo: n - hi, hi: n - lo } })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingGraph {
    pub k: u64,
    /// `matchings[i - 1]` is `M_i`, as (left, right) vertex pairs in `[3k]`.
    pub matchings: Vec<Vec<(u64, u64)>>,
}

/// Two edges of `M_i` that are not an induced pair in the union graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub i: u64,
    pub first: (u64, u64),
    pub second: (u64, u64),
}

pub fn matching_graph(a: &ApSet, k: u64) -> Result<MatchingGraph, AppError> {
    if a.elements().last().is_some_and(|&m| m > k) {
        return Err(AppError::NotInK { universe: a.universe(), k });
    }
    let matchings = (1..=k).map(|i| a.elements().iter().map(|&x| (x + i, x + 2 * i)).collect()).collect();
    Ok(MatchingGraph { k, matchings })
}

impl MatchingGraph {
    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Distinct edges of the union graph.
    pub fn edges(&self) -> HashSet<(u64, u64)> {
        self.matchings.iter().flatten().copied().collect()
    }

    /// Every pair of edges in some `M_i` that shares a vertex or is joined
    /// by another edge of the union (brute force).
    pub fn violations(&self) -> Vec<Violation> {
        let all = self.edges();
        let mut out = Vec::new();
        for (idx, m) in self.matchings.iter().enumerate() {
            for (p, &e) in m.iter().enumerate() {
                for &f in &m[p + 1..] {
                    let touching = e.0 == f.0 || e.1 == f.1;
                    if touching || all.contains(&(e.0, f.1)) || all.contains(&(f.0, e.1)) {
                        out.push(Violation { i: idx as u64 + 1, first: e, second: f });
                    }
                }
            }
        }
        out
    }

    pub fn is_induced(&self) -> bool {
        self.violations().is_empty()
    }

    /// One `i left right` line per edge, grouped by matching.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (idx, m) in self.matchings.iter().enumerate() {
            for &(u, v) in m {
                writeln!(s, "{} {u} {v}", idx + 1).unwrap();
            }
        }
        s
    }
}
