//! The depth-first extension search shared by GATHER, FINAL and BASIC2.
//!
//! A run extends a fixed prefix over `[n]` with position `n` pinned to 1,
//! looking for a 3-free string with at least `target` ones. Because `n` is
//! pinned, every chosen `x` also forbids the midpoint `(x + n) / 2`; those
//! positions are tracked in a separate `anchor` mask.

use crate::num::NumTable;
use crate::window;
use apcore::{Bits256, SearchState};
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, Ordering};

/// Which potential tests prune the search. `pot` is the NUM lookup used
/// while the remaining length fits in the table; `t1`-`t3` apply beyond it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pruning {
    pub pot: bool,
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning { pot: true, t1: true, t2: true, t3: false }
    }
}

impl Pruning {
    pub fn none() -> Self {
        Pruning { pot: false, t1: false, t2: false, t3: false }
    }
}

pub(crate) struct Bounds<'a> {
    pub num: Option<&'a NumTable>,
    /// NUM(., r) may be used for `r <= num_levels`.
    pub num_levels: usize,
    /// `sz[r]` for `r < sz.len()`.
    pub sz: &'a [u64],
    pub prune: Pruning,
}

pub(crate) struct Dfs<'a> {
    pub n: usize,
    pub l: usize,
    pub target: u32,
    pub bounds: Bounds<'a>,
    pub cancel: &'a AtomicBool,
    /// Keep searching after a hit (node-count experiments).
    pub full: bool,
    pub nodes: u64,
    pub found: Option<SearchState>,
    pub cancelled: bool,
}

impl<'a> Dfs<'a> {
    pub fn new(n: usize, l: usize, target: u32, bounds: Bounds<'a>, cancel: &'a AtomicBool) -> Self {
        Dfs { n, l, target, bounds, cancel, full: false, nodes: 0, found: None, cancelled: false }
    }

    /// Anchor mask for the chosen positions of `st`.
    pub fn anchor_of(&self, st: &SearchState) -> Bits256 {
        let mut a = Bits256::zero();
        for x in st.prefix_bits().iter_ones() {
            if (x + self.n).is_multiple_of(2) {
                a.set((x + self.n) / 2);
            }
        }
        a
    }

    /// Runs from a prefix state (length < n, `n` not yet placed). A hit is
    /// left in `found`; `cancel` is only read, so peers decide whether a
    /// hit ends their work.
    pub fn run(&mut self, st: SearchState, key: u32) -> bool {
        if st.len() >= self.n || st.is_forbidden(self.n) {
            return false;
        }
        let anchor = self.anchor_of(&st);
        self.dfs(st, key, anchor)
    }

    /// Upper bound on the ones in the `r` positions after `st`, the last of
    /// which is the anchor.
    #[inline]
    fn upper(&self, st: &SearchState, key: u32, anchor: &Bits256, r: usize) -> u32 {
        let b = &self.bounds;
        let mut ub = u32::MAX;
        let windowed = self.l > 0 && st.len() >= self.l;
        match b.num {
            Some(t) if windowed && b.prune.pot && r <= b.num_levels => {
                ub = t.get(key, r);
            }
            _ => {
                if b.prune.t1 && r < b.sz.len() {
                    ub = ub.min(b.sz[r] as u32);
                }
                if let Some(t) = b.num {
                    let m = t.m();
                    if windowed && b.prune.t2 && r > m && m <= b.num_levels && r - m < b.sz.len() {
                        ub = ub.min(t.get(key, m) + b.sz[r - m] as u32);
                    }
                }
            }
        }
        if b.prune.t3 {
            let p = st.len() + 1;
            let free = Bits256::range(p, self.n - 1)
                .and_not(st.forbidden_bits())
                .and_not(*anchor)
                .count();
            ub = ub.min(free + 1);
        }
        ub
    }

    #[inline]
    fn ok(&self, st: &SearchState, key: u32, anchor: &Bits256, r: usize) -> bool {
        let ub = self.upper(st, key, anchor, r);
        ub == u32::MAX || st.ones() as u32 + ub >= self.target
    }

    fn dfs(&mut self, st: SearchState, key: u32, anchor: Bits256) -> bool {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.cancel.load(Ordering::Relaxed) {
            self.cancelled = true;
            return true;
        }
        let p = st.len() + 1;
        if p == self.n {
            if st.ones() as u32 + 1 >= self.target {
                if self.found.is_none() {
                    self.found = Some(st.extend_unchecked(true));
                }
                if !self.full {
                    return true;
                }
            }
            return false;
        }
        let r = self.n - p;
        if !st.is_forbidden(p) && !anchor.get(p) {
            let st1 = st.extend_unchecked(true);
            let key1 = window::push(key, true, self.l);
            let mut an1 = anchor;
            if (p + self.n).is_multiple_of(2) {
                an1.set((p + self.n) / 2);
            }
            if self.ok(&st1, key1, &an1, r) && self.dfs(st1, key1, an1) {
                return true;
            }
        }
        let st0 = st.extend_unchecked(false);
        let key0 = window::push(key, false, self.l);
        if self.ok(&st0, key0, &anchor, r) && self.dfs(st0, key0, anchor) {
            return true;
        }
        false
    }
}
