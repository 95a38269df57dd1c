//! The concatenation method: the families `E(n, k)` of 3-free subsets of
//! `[n]` that contain both 1 and `n` and have `k` elements.
//!
//! A member of `E(n, k)` splits at `h = ceil(n / 2)` into a low part whose
//! maximum is `x <= h`, a member of `E(x, .)`, and a high part whose minimum
//! is `y > h`, a `(y - 1)`-translate of a member of `E(n - y + 1, .)`. The
//! split is unique, so pairing all low and high parts and keeping the
//! 3-free unions enumerates `E(n, .)` without repetition.

use crate::SearchError;

/// Members of `E(n, .)` as bit masks (bit `i - 1` for element `i`).
#[derive(Clone, Debug)]
pub struct ETable {
    sets: Vec<Vec<u64>>,
}

#[inline]
fn three_free_mask(m: u64) -> bool {
    let mut d = 1;
    while (m >> (2 * d)) != 0 {
        if m & (m >> d) & (m >> (2 * d)) != 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl ETable {
    /// Builds `E(n, .)` for `1 <= n <= n_max` (`n_max <= 64`), failing when
    /// the stored families exceed `max_sets` in total.
    pub fn build(n_max: usize, max_sets: usize) -> Result<Self, SearchError> {
        if n_max > 64 {
            return Err(SearchError::OutOfRange(n_max));
        }
        let mut sets: Vec<Vec<u64>> = vec![Vec::new(); n_max + 1];
        let mut stored = 0usize;
        if n_max >= 1 {
            sets[1].push(1);
            stored = 1;
        }
        for n in 2..=n_max {
            let h = n.div_ceil(2);
            let mut out = Vec::new();
            for x in 1..=h {
                for y in h + 1..=n {
                    let hi_len = n - y + 1;
                    for &a in &sets[x] {
                        for &b in &sets[hi_len] {
                            let u = a | (b << (y - 1));
                            if three_free_mask(u) {
                                out.push(u);
                            }
                        }
                    }
                }
            }
            stored += out.len();
            if stored > max_sets {
                return Err(SearchError::Budget { completed: n - 1 });
            }
            sets[n] = out;
        }
        Ok(ETable { sets })
    }

    pub fn n_max(&self) -> usize {
        self.sets.len().saturating_sub(1)
    }

    /// `|E(n, k)|`.
    pub fn count(&self, n: usize, k: usize) -> u64 {
        self.sets
            .get(n)
            .map_or(0, |v| v.iter().filter(|m| m.count_ones() as usize == k).count() as u64)
    }

    /// `counts[k] = |E(n, k)|` for `k <= n`.
    pub fn counts(&self, n: usize) -> Vec<u64> {
        let mut c = vec![0u64; n + 1];
        if let Some(v) = self.sets.get(n) {
            for m in v {
                c[m.count_ones() as usize] += 1;
            }
        }
        c
    }

    /// Largest `k` with `E(n, k)` non-empty.
    pub fn max_k(&self, n: usize) -> usize {
        self.sets.get(n).map_or(0, |v| v.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0))
    }

    /// `sz(n) = max over n' <= n of max_k(n')`, since every largest set is a
    /// translate of some member of `E(n', .)`.
    pub fn sz(&self, n: usize) -> usize {
        (1..=n.min(self.n_max())).map(|i| self.max_k(i)).max().unwrap_or(0)
    }

    /// Members of `E(n, k)` as element lists.
    pub fn members(&self, n: usize, k: usize) -> Vec<Vec<u64>> {
        self.sets
            .get(n)
            .into_iter()
            .flatten()
            .filter(|m| m.count_ones() as usize == k)
            .map(|&m| (0..64).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
            .collect()
    }
}

/// `|E(n, k)|` for `n <= n_max`, `k <= k_max`, as `table[n][k]`.
pub fn e_table(n_max: usize, k_max: usize) -> Result<Vec<Vec<u64>>, SearchError> {
    let t = ETable::build(n_max, 50_000_000)?;
    Ok((0..=n_max)
        .map(|n| (0..=k_max).map(|k| t.count(n, k)).collect())
        .collect())
}
