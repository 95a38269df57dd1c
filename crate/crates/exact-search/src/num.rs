use crate::engine::{Bounds, Dfs, Pruning};
use crate::window;
use crate::SearchError;
use apcore::MAX_N;
use rayon::prelude::*;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

const MAGIC: &[u8; 8] = b"APNUMTAB";
const VERSION: u32 = 1;
const DENSE_MAX_L: usize = 20;

/// `NUM(sigma, j)`: the most ones a length-`j` extension of the 3-free
/// window `sigma` can carry while the whole string stays 3-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumTable {
    l: usize,
    m: usize,
    keys: Vec<u32>,
    dense: Option<Vec<u32>>,
    /// Levels `0..=levels` are filled.
    levels: usize,
    /// `num[idx * (m + 1) + j]`
    num: Vec<u8>,
}

/// Limits for [`gather`]. `max_nodes` is checked between levels.
#[derive(Clone, Copy, Debug, Default)]
pub struct GatherOptions {
    pub max_nodes: Option<u64>,
    pub pruning: Option<Pruning>,
}

impl NumTable {
    /// Phase I: every 3-free window of length `l`, with level 0 filled.
    pub fn new(l: usize, m: usize) -> Result<Self, SearchError> {
        if l == 0 || l > window::MAX_L || l + m > MAX_N {
            return Err(SearchError::Parameters { l, m });
        }
        let keys = window::all_three_free(l);
        let dense = (l <= DENSE_MAX_L).then(|| {
            let mut d = vec![u32::MAX; 1 << l];
            for (i, &k) in keys.iter().enumerate() {
                d[k as usize] = i as u32;
            }
            d
        });
        let num = vec![0u8; keys.len() * (m + 1)];
        Ok(NumTable { l, m, keys, dense, levels: 0, num })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Highest `j` filled so far.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn is_complete(&self) -> bool {
        self.levels == self.m
    }

    /// The windows `SZ(L)` in key order.
    pub fn windows(&self) -> &[u32] {
        &self.keys
    }

    #[inline]
    pub fn index(&self, key: u32) -> Option<usize> {
        match &self.dense {
            Some(d) => d.get(key as usize).copied().filter(|&i| i != u32::MAX).map(|i| i as usize),
            None => self.keys.binary_search(&key).ok(),
        }
    }

    /// `NUM(key, j)`; `key` must be a 3-free window and `j <= levels`.
    #[inline]
    pub fn get(&self, key: u32, j: usize) -> u32 {
        debug_assert!(j <= self.levels);
        let idx = self.index(key).expect("window is 3-free");
        self.num[idx * (self.m + 1) + j] as u32
    }

    pub fn lookup(&self, key: u32, j: usize) -> Option<u32> {
        if j > self.levels {
            return None;
        }
        self.index(key).map(|i| self.num[i * (self.m + 1) + j] as u32)
    }

    /// `sz(n)` for every `n <= L + levels` read off the table.
    pub fn sz_values(&self) -> Vec<u64> {
        let top = self.l + self.levels;
        let mut out = vec![0u64; top + 1];
        for (i, &k) in self.keys.iter().enumerate() {
            let mut c = 0u64;
            for p in 1..=self.l {
                c += window::bit(k, p, self.l) as u64;
                out[p] = out[p].max(c);
            }
            let base = k.count_ones() as u64;
            for j in 1..=self.levels {
                let v = base + self.num[i * (self.m + 1) + j] as u64;
                out[self.l + j] = out[self.l + j].max(v);
            }
        }
        out
    }

    /// Phase II up to level `upto` (clamped to `m`).
    pub fn extend(&mut self, upto: usize, opts: GatherOptions) -> Result<u64, SearchError> {
        let upto = upto.min(self.m);
        let total = AtomicU64::new(0);
        let prune = opts.pruning.unwrap_or_default();
        while self.levels < upto {
            let j = self.levels + 1;
            let never = AtomicBool::new(false);
            let next: Vec<u8> = (0..self.keys.len())
                .into_par_iter()
                .map(|idx| {
                    let prev = self.num[idx * (self.m + 1) + j - 1];
                    let (hit, nodes) = self.try_raise(idx, j, prev as u32, prune, &never);
                    total.fetch_add(nodes, Ordering::Relaxed);
                    prev + hit as u8
                })
                .collect();
            for (idx, v) in next.into_iter().enumerate() {
                self.num[idx * (self.m + 1) + j] = v;
            }
            self.levels = j;
            if let Some(max) = opts.max_nodes {
                if total.load(Ordering::Relaxed) > max && self.levels < upto {
                    return Err(SearchError::Budget { completed: self.levels });
                }
            }
        }
        Ok(total.into_inner())
    }

    /// Whether `sigma` has a length-`j` extension with `prev + 1` ones.
    /// Such an extension must end in a 1, so position `L + j` is pinned.
    fn try_raise(&self, idx: usize, j: usize, prev: u32, prune: Pruning, cancel: &AtomicBool) -> (bool, u64) {
        let key = self.keys[idx];
        let n = self.l + j;
        let st = window::state_of(key, self.l, n);
        let bounds = Bounds { num: Some(self), num_levels: j - 1, sz: &[], prune };
        let target = key.count_ones() + prev + 1;
        let mut dfs = Dfs::new(n, self.l, target, bounds, cancel);
        dfs.run(st, key);
        (dfs.found.is_some(), dfs.nodes)
    }

    /// Writes the versioned binary cache.
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        f.write_all(MAGIC)?;
        for v in [VERSION, self.l as u32, self.m as u32, self.levels as u32, self.keys.len() as u32] {
            f.write_all(&v.to_le_bytes())?;
        }
        for k in &self.keys {
            f.write_all(&k.to_le_bytes())?;
        }
        f.write_all(&self.num)?;
        f.flush()
    }

    /// Reads a cache written by [`NumTable::save`] for the same `(l, m)`.
    pub fn load(path: &Path, l: usize, m: usize) -> Result<Self, SearchError> {
        let bad = |why: &str| SearchError::Cache(format!("{}: {why}", path.display()));
        let mut bytes = Vec::new();
        std::fs::File::open(path)
            .and_then(|mut f| f.read_to_end(&mut bytes))
            .map_err(|e| bad(&e.to_string()))?;
        if bytes.len() < 28 || &bytes[..8] != MAGIC {
            return Err(bad("not a NUM cache"));
        }
        let word = |i: usize| u32::from_le_bytes(bytes[8 + 4 * i..12 + 4 * i].try_into().unwrap()) as usize;
        if word(0) != VERSION as usize {
            return Err(bad("unsupported version"));
        }
        if word(1) != l || word(2) != m {
            return Err(bad("built for different (L, m)"));
        }
        let mut t = NumTable::new(l, m)?;
        let levels = word(3);
        let count = word(4);
        if count != t.keys.len() || levels > m {
            return Err(bad("inconsistent header"));
        }
        let keys_at = 28;
        let num_at = keys_at + 4 * count;
        if bytes.len() != num_at + count * (m + 1) {
            return Err(bad("truncated"));
        }
        for (i, k) in t.keys.iter().enumerate() {
            let at = keys_at + 4 * i;
            if u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap()) != *k {
                return Err(bad("window list mismatch"));
            }
        }
        t.num.copy_from_slice(&bytes[num_at..]);
        t.levels = levels;
        Ok(t)
    }

    /// Loads `dir/num_L{l}_m{m}.bin` if present, extends it to `m` and
    /// writes it back.
    pub fn cached(dir: &Path, l: usize, m: usize, opts: GatherOptions) -> Result<Self, SearchError> {
        let path = dir.join(format!("num_L{l}_m{m}.bin"));
        let mut t = match NumTable::load(&path, l, m) {
            Ok(t) => t,
            Err(_) => NumTable::new(l, m)?,
        };
        if !t.is_complete() {
            let res = t.extend(m, opts);
            std::fs::create_dir_all(dir).map_err(|e| SearchError::Cache(e.to_string()))?;
            t.save(&path).map_err(|e| SearchError::Cache(e.to_string()))?;
            res?;
        }
        Ok(t)
    }
}

/// Phases I and II: `SZ(L)` and `NUM(sigma, j)` for `j <= m`.
pub fn gather(l: usize, m: usize) -> Result<NumTable, SearchError> {
    gather_with(l, m, GatherOptions::default())
}

pub fn gather_with(l: usize, m: usize, opts: GatherOptions) -> Result<NumTable, SearchError> {
    let mut t = NumTable::new(l, m)?;
    t.extend(m, opts)?;
    Ok(t)
}
