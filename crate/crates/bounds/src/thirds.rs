use crate::BoundsError;
use apcore::{ApSet, Bits256, SzTable, MAX_N};
use exact_search::enumerate_tight;
use rayon::prelude::*;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Which tight 3-free sets feed the thirds method.
#[derive(Clone, Debug)]
pub struct FamilyOptions {
    /// Keep sets within `slack` of `sz(m)`.
    pub slack: u64,
    /// Universe sizes `n/3 - spread ..= n/3 + spread`; `None` means `ceil(ln(n/3))`.
    pub spread: Option<u64>,
    /// Largest universe to enumerate (and at most the exact part of the table).
    pub m_max: u64,
    /// Sets kept per universe size.
    pub limit: usize,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions { slack: 1, spread: None, m_max: 66, limit: 200_000 }
    }
}

/// 3-free sets `A` of `[m]` with `1, m` in `A` and `|A| >= sz(m) - slack`,
/// for every `m` near `n/3`.
pub fn base_family(n: u64, table: &SzTable, opts: &FamilyOptions) -> Result<Vec<ApSet>, BoundsError> {
    let third = n / 3;
    let spread = opts.spread.unwrap_or_else(|| (third.max(2) as f64).ln().ceil() as u64);
    let top = opts.m_max.min(table.exact_prefix()).min(third + spread);
    let lo = third.saturating_sub(spread).max(1);
    if lo > top {
        return Ok(Vec::new());
    }
    let sz: Vec<u64> = (0..=top).map(|i| table.exact(i).unwrap()).collect();
    let per_m: Vec<Result<Vec<ApSet>, BoundsError>> = (lo..=top)
        .into_par_iter()
        .map(|m| {
            let min = sz[m as usize].saturating_sub(opts.slack);
            Ok(enumerate_tight(m as usize, min, &sz, opts.limit)?.sets)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_m {
        out.extend(r?);
    }
    Ok(out)
}

/// Explicit record sets for `n = 204, 227, 233` found by the thirds method.
pub const RECORD_WITNESSES: [(u64, &str); 3] = [
    (204, "1 3 8 9 11 16 20 22 25 26 38 40 45 46 48 53 57 59 62 63 127 132 134 135 139 140 147 149 150 152 156 179 181 182 186 187 189 194 198 200 203 204"),
    (227, "1 2 6 8 12 17 19 20 24 25 27 43 45 51 54 55 58 60 64 72 76 79 129 145 147 154 155 159 160 167 169 170 172 176 201 202 206 208 212 217 219 220 224 225 227"),
    (233, "1 4 5 11 13 14 16 26 29 30 35 50 52 58 61 62 68 73 76 77 80 82 97 137 152 154 157 158 161 166 172 173 176 182 184 199 204 205 208 218 220 221 223 229 230 233"),
];

/// The record sets, parsed and checked.
pub fn record_witnesses() -> Result<Vec<ApSet>, BoundsError> {
    RECORD_WITNESSES
        .iter()
        .map(|&(n, s)| {
            let elems = s.split_whitespace().map(|t| t.parse().map_err(|_| BoundsError::Parameters(t.into()))).collect::<Result<Vec<u64>, _>>()?;
            Ok(ApSet::verified(n, elems)?)
        })
        .collect()
}

fn mask(elems: impl IntoIterator<Item = usize>) -> Bits256 {
    let mut b = Bits256::default();
    for e in elems {
        b.set(e);
    }
    b
}

/// One base set placed at the left or right end of `[n]`.
struct Placed {
    elems: Vec<usize>,
    set: Bits256,
    /// Positions in `[n]` completing a progression with two of `elems`.
    reach: Bits256,
}

impl Placed {
    fn new(a: &ApSet, n: usize, right: bool) -> Self {
        let shift = if right { n - a.universe() as usize } else { 0 };
        let elems: Vec<usize> = a.elements().iter().map(|&e| e as usize + shift).collect();
        let mut reach = Bits256::default();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i + 1..] {
                if (x + y) % 2 == 0 {
                    reach.set((x + y) / 2);
                }
                if 2 * y - x <= n {
                    reach.set(2 * y - x);
                }
                if 2 * x > y {
                    reach.set(2 * x - y);
                }
            }
        }
        Placed { set: mask(elems.iter().copied()), elems, reach }
    }
}

/// Largest set of positions from `cands` that keeps `base` 3-free. Each
/// candidate must already be compatible with `base` on its own.
/// Exhaustive up to `budget` candidates, greedy (ascending) beyond.
pub fn fill_middle(base: &[usize], cands: &[usize], budget: usize) -> Vec<usize> {
    let n_bound = base.iter().chain(cands).copied().max().unwrap_or(0);
    let block = |chosen: &[usize], c: usize, f: &mut Vec<bool>| {
        for &e in chosen {
            let (lo, hi) = if e < c { (e, c) } else { (c, e) };
            if 2 * hi - lo <= n_bound {
                f[2 * hi - lo] = true;
            }
            if 2 * lo > hi {
                f[2 * lo - hi] = true;
            }
            if (lo + hi) % 2 == 0 {
                f[(lo + hi) / 2] = true;
            }
        }
    };
    if cands.len() > budget {
        let mut f = vec![false; n_bound + 1];
        let mut all = base.to_vec();
        let mut got = Vec::new();
        for &c in cands {
            if !f[c] {
                block(&all, c, &mut f);
                all.push(c);
                got.push(c);
            }
        }
        return got;
    }
    struct Dfs<'a> {
        cands: &'a [usize],
        best: Vec<usize>,
    }
    impl Dfs<'_> {
        fn go(&mut self, i: usize, all: &mut Vec<usize>, got: &mut Vec<usize>, f: &[bool], block: &dyn Fn(&[usize], usize, &mut Vec<bool>)) {
            let left = self.cands[i..].iter().filter(|&&c| !f[c]).count();
            if got.len() + left <= self.best.len() {
                return;
            }
            let Some(off) = self.cands[i..].iter().position(|&c| !f[c]) else {
                self.best = got.clone();
                return;
            };
            let j = i + off;
            let c = self.cands[j];
            let mut g = f.to_vec();
            block(all, c, &mut g);
            all.push(c);
            got.push(c);
            self.go(j + 1, all, got, &g, block);
            all.pop();
            got.pop();
            self.go(j + 1, all, got, f, block);
        }
    }
    let mut d = Dfs { cands, best: Vec::new() };
    let mut all = base.to_vec();
    d.go(0, &mut all, &mut Vec::new(), &vec![false; n_bound + 1], &block);
    d.best
}

fn better(a: &[u64], b: &[u64]) -> bool {
    a.len() > b.len() || a.len() == b.len() && a < b
}

/// Best `A ∪ (B shifted to end at n) ∪ middle` over all pairs from `family`
/// with `|universe(A)| + |universe(B)| <= n`. Ties go to the
/// lexicographically smallest element list. The result is verified 3-free.
pub fn thirds_search(n: u64, family: &[ApSet], middle_budget: usize) -> Result<Option<ApSet>, BoundsError> {
    if n as usize > MAX_N {
        return Err(BoundsError::Parameters(format!("n = {n} exceeds {MAX_N}")));
    }
    let nu = n as usize;
    let fits: Vec<&ApSet> = family.iter().filter(|a| a.universe() < n).collect();
    let left: Vec<Placed> = fits.iter().map(|a| Placed::new(a, nu, false)).collect();
    let right: Vec<Placed> = fits.iter().map(|a| Placed::new(a, nu, true)).collect();
    let all = Bits256::range(1, nu);
    let best_len = AtomicUsize::new(0);
    let found = (0..fits.len())
        .into_par_iter()
        .filter_map(|i| {
            let a = &left[i];
            let mut local: Option<Vec<u64>> = None;
            for (j, b) in right.iter().enumerate() {
                if fits[i].universe() + fits[j].universe() > n {
                    continue;
                }
                if !a.reach.and(b.set).is_zero() || !b.reach.and(a.set).is_zero() {
                    continue;
                }
                let used = a.set.or(b.set);
                let free = all.and_not(used).and_not(a.reach).and_not(b.reach);
                let base_len = a.elems.len() + b.elems.len();
                if base_len + (free.count() as usize) < best_len.load(Ordering::Relaxed) {
                    continue;
                }
                let mut cross = Bits256::default();
                for &x in &a.elems {
                    for &y in &b.elems {
                        if (x + y) % 2 == 0 {
                            cross.set((x + y) / 2);
                        }
                        if 2 * y - x <= nu {
                            cross.set(2 * y - x);
                        }
                        if 2 * x > y {
                            cross.set(2 * x - y);
                        }
                    }
                }
                if !cross.and(used).is_zero() {
                    continue;
                }
                let cands: Vec<usize> = free.and_not(cross).iter_ones().collect();
                if base_len + cands.len() < best_len.load(Ordering::Relaxed) {
                    continue;
                }
                let base: Vec<usize> = a.elems.iter().chain(&b.elems).copied().collect();
                let mid = fill_middle(&base, &cands, middle_budget);
                let mut elems: Vec<u64> = base.iter().chain(&mid).map(|&e| e as u64).collect();
                elems.sort_unstable();
                best_len.fetch_max(elems.len(), Ordering::Relaxed);
                if local.as_ref().is_none_or(|l| better(&elems, l)) {
                    local = Some(elems);
                }
            }
            local
        })
        .reduce_with(|x, y| if better(&y, &x) { y } else { x });
    match found {
        None => Ok(None),
        Some(elems) => Ok(Some(ApSet::verified(n, elems)?)),
    }
}
