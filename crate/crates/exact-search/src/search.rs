use crate::engine::{Bounds, Dfs, Pruning};
use crate::num::NumTable;
use crate::window;
use crate::SearchError;
use apcore::{ApSet, SearchState, SzTable, MAX_N};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

/// One exact computation, as written to the JSON run report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub n: u64,
    pub value: u64,
    pub nodes_visited: u64,
    pub elapsed_ms: u128,
    pub pruning_flags: Pruning,
}

/// Result of one `sz(n)` search.
#[derive(Clone, Debug)]
pub struct Found {
    pub value: u64,
    pub witness: ApSet,
    pub report: RunReport,
}

/// Everything FINAL needs for one `n`.
pub struct PruneContext<'a> {
    /// `sz[i]` for `0 <= i < n`, exact.
    pub sz_known: &'a [u64],
    pub num: &'a NumTable,
    pub pruning: Pruning,
    /// Explore the whole pruned tree instead of stopping at the first hit.
    pub full: bool,
}

impl PruneContext<'_> {
    pub fn target(&self) -> u64 {
        self.sz_known.last().copied().unwrap_or(0) + 1
    }
}

fn set_of(st: &SearchState, n: usize) -> ApSet {
    ApSet::verified(n as u64, st.chosen()).expect("search produced a 3-free set")
}

fn check_known(n: usize, known: &[u64]) -> Result<(), SearchError> {
    if n == 0 || n > MAX_N {
        return Err(SearchError::OutOfRange(n));
    }
    if known.len() < n {
        return Err(SearchError::MissingTable { n, have: known.len() });
    }
    Ok(())
}

/// BASIC2 with endpoint pinning: decides whether `sz(n) = sz(n-1) + 1`
/// using only the prefix test `#(alpha) + sz(n - |alpha|) >= sz(n-1) + 1`.
///
/// `known[i] = sz(i)` for `i < n`; `prev_witness` is returned when the
/// value does not grow.
pub fn sz_basic(n: usize, known: &[u64], prev_witness: Option<&ApSet>, pruning: Pruning) -> Result<Found, SearchError> {
    check_known(n, known)?;
    let start = Instant::now();
    let target = known[n - 1] + 1;
    let (hit, nodes) = if n == 1 {
        (Some(ApSet::new(1, vec![1]).unwrap()), 0)
    } else {
        let never = AtomicBool::new(false);
        let prune = Pruning { pot: false, t2: false, ..pruning };
        let bounds = Bounds { num: None, num_levels: 0, sz: &known[..n], prune };
        let mut dfs = Dfs::new(n, 0, target as u32, bounds, &never);
        let st = SearchState::new(n)?.extend(true)?;
        dfs.run(st, 0);
        (dfs.found.map(|s| set_of(&s, n)), dfs.nodes)
    };
    finish(n, target, hit, prev_witness, nodes, start, pruning)
}

fn finish(
    n: usize,
    target: u64,
    hit: Option<ApSet>,
    prev_witness: Option<&ApSet>,
    nodes: u64,
    start: Instant,
    pruning: Pruning,
) -> Result<Found, SearchError> {
    let (value, witness) = match hit {
        Some(w) => (target, w),
        None => {
            let w = prev_witness.ok_or(SearchError::MissingWitness(n - 1))?;
            (target - 1, w.with_universe(n as u64)?)
        }
    };
    Ok(Found {
        value,
        witness,
        report: RunReport {
            n: n as u64,
            value,
            nodes_visited: nodes,
            elapsed_ms: start.elapsed().as_millis(),
            pruning_flags: pruning,
        },
    })
}

/// Phase III: FINAL over all roots `sigma` in `SZ(L)` that start with 1,
/// run in parallel; the first hit cancels the other roots.
pub fn sz_final(n: usize, ctx: &PruneContext, prev_witness: Option<&ApSet>) -> Result<Found, SearchError> {
    check_known(n, ctx.sz_known)?;
    let start = Instant::now();
    let target = ctx.target();
    let num = ctx.num;
    let l = num.l();
    if n <= l {
        // every candidate is a window prefix
        let hit = num.windows().iter().find(|&&k| {
            window::bit(k, 1, l) && window::bit(k, n, l) && (k >> (l - n)).count_ones() as u64 >= target
        });
        let hit = hit.map(|&k| ApSet::new(n as u64, window::elements(k >> (l - n), n)).unwrap());
        return finish(n, target, hit, prev_witness, 0, start, ctx.pruning);
    }
    let cancel = AtomicBool::new(false);
    let roots: Vec<u32> = num.windows().iter().copied().filter(|&k| window::bit(k, 1, l)).collect();
    let results: Vec<(Option<SearchState>, u64)> = roots
        .par_iter()
        .map(|&key| {
            if cancel.load(Ordering::Relaxed) {
                return (None, 0);
            }
            let bounds = Bounds { num: Some(num), num_levels: num.levels(), sz: ctx.sz_known, prune: ctx.pruning };
            let mut dfs = Dfs::new(n, l, target as u32, bounds, &cancel);
            dfs.full = ctx.full;
            let st = window::state_of(key, l, n);
            let r = n - l;
            let ub = root_upper(num, ctx, key, r);
            if (st.ones() as u64).saturating_add(ub) < target {
                return (None, 1);
            }
            dfs.run(st, key);
            if dfs.found.is_some() && !ctx.full {
                cancel.store(true, Ordering::Relaxed);
            }
            (dfs.found, dfs.nodes + 1)
        })
        .collect();
    let nodes = results.iter().map(|r| r.1).sum();
    let hit = results.into_iter().find_map(|r| r.0).map(|s| set_of(&s, n));
    finish(n, target, hit, prev_witness, nodes, start, ctx.pruning)
}

fn root_upper(num: &NumTable, ctx: &PruneContext, key: u32, r: usize) -> u64 {
    let p = ctx.pruning;
    if p.pot && r <= num.levels() {
        return num.get(key, r) as u64;
    }
    let mut ub = u64::MAX;
    if p.t1 && r < ctx.sz_known.len() {
        ub = ub.min(ctx.sz_known[r]);
    }
    let m = num.m();
    if p.t2 && r > m && m <= num.levels() && r - m < ctx.sz_known.len() {
        ub = ub.min(num.get(key, m) as u64 + ctx.sz_known[r - m]);
    }
    ub
}

/// Exact `sz(1..=n_max)` with witnesses: gathers the NUM table, then runs
/// FINAL for each `n` in turn. Returns the table and one report per `n`.
pub fn compute_table(n_max: usize, num: &NumTable, pruning: Pruning) -> Result<(SzTable, Vec<RunReport>), SearchError> {
    let mut known = vec![0u64];
    let mut table = SzTable::new();
    let mut reports = Vec::with_capacity(n_max);
    let mut prev: Option<ApSet> = None;
    for n in 1..=n_max {
        let ctx = PruneContext { sz_known: &known, num, pruning, full: false };
        let f = sz_final(n, &ctx, prev.as_ref())?;
        known.push(f.value);
        table.set_exact(n as u64, f.value, "backtracking", Some(f.witness.clone()));
        reports.push(f.report);
        prev = Some(f.witness);
    }
    Ok((table, reports))
}

/// [`sz_basic`] for `1..=n_max` in order.
pub fn basic_table(n_max: usize, pruning: Pruning) -> Result<(Vec<u64>, Vec<ApSet>), SearchError> {
    let mut known = vec![0u64];
    let mut wits: Vec<ApSet> = Vec::new();
    for n in 1..=n_max {
        let f = sz_basic(n, &known, wits.last(), pruning)?;
        known.push(f.value);
        wits.push(f.witness);
    }
    Ok((known, wits))
}

/// `sz(n)` by checking every subset of `[n]` (`n <= 30`).
pub fn sz_exhaustive(n: usize) -> u64 {
    assert!(n <= 30, "exhaustive enumeration is limited to n <= 30");
    let mut best = 0;
    for m in 0u32..(1u32 << n) {
        let c = m.count_ones();
        if c > best && (1..=n / 2).all(|d| m & (m >> d) & (m >> (2 * d)) == 0) {
            best = c;
        }
    }
    best as u64
}
