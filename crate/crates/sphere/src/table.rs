//! Suffix-count tables: `t[j][state][norm]` is the number of ways to fill
//! `j` more coordinates from `state` so that their squares add to `norm`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::ops::AddAssign;

/// Counter type of a table: `u128` when it cannot overflow, else `BigUint`.
pub(crate) trait Cnt: Clone + Zero + for<'a> AddAssign<&'a Self> + Send + Sync {
    fn big(&self) -> BigUint;
    fn sub(&self, o: &Self) -> Self;
}

impl Cnt for u128 {
    fn big(&self) -> BigUint {
        BigUint::from(*self)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
}

impl Cnt for BigUint {
    fn big(&self) -> BigUint {
        self.clone()
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
}

/// Which digits a coordinate may take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DigitMode {
    /// `-d..=d`
    Signed,
    /// `-d..=d` without 0
    NonzeroSigned,
    /// `0..=d`
    Nonneg,
    /// `1..=d`
    Positive,
}

impl DigitMode {
    pub fn digits(self, d: i64) -> Vec<i64> {
        match self {
            DigitMode::Signed => (-d..=d).collect(),
            DigitMode::NonzeroSigned => (-d..=d).filter(|&x| x != 0).collect(),
            DigitMode::Nonneg => (0..=d).collect(),
            DigitMode::Positive => (1..=d).collect(),
        }
    }
}

/// How a vector becomes an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Embed {
    /// Base `4d+1` with balanced digits `-2d..=2d`.
    Balanced,
    /// Base `2d+1` with standard digits `0..=2d`.
    Standard,
}

impl Embed {
    pub fn base(self, d: i64) -> i64 {
        match self {
            Embed::Balanced => 4 * d + 1,
            Embed::Standard => 2 * d + 1,
        }
    }

    fn low_digit(self, d: i64) -> i64 {
        match self {
            Embed::Balanced => -2 * d,
            Embed::Standard => 0,
        }
    }
}

/// A family of vectors: digit set, optional pairwise condition, embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShellKind {
    pub mode: DigitMode,
    /// No two coordinates with `±x_i ± x_j = 2`.
    pub c2: bool,
    pub embed: Embed,
}

pub(crate) struct Table<C> {
    pub d: i64,
    pub smax: usize,
    pub digits: Vec<i64>,
    /// `next[state][|x|]`
    pub next: Vec<Vec<Option<usize>>>,
    pub t: Vec<Vec<Vec<C>>>,
}

/// States of the pairwise condition as sets of used absolute values.
fn automaton(d: i64, c2: bool) -> Vec<Vec<Option<usize>>> {
    if !c2 {
        return vec![vec![Some(0); d as usize + 1]];
    }
    let mut ids: HashMap<u64, usize> = HashMap::from([(0, 0)]);
    let mut masks = vec![0u64];
    let mut next = Vec::new();
    let mut i = 0;
    while i < masks.len() {
        let m = masks[i];
        let row = (0..=d)
            .map(|a| {
                let bad = (a == 1 && m & 2 != 0)
                    || (a >= 2 && m >> (a - 2) & 1 != 0)
                    || (a + 2 <= d && m >> (a + 2) & 1 != 0);
                if bad {
                    return None;
                }
                let nm = m | 1 << a;
                let len = ids.len();
                Some(*ids.entry(nm).or_insert_with(|| {
                    masks.push(nm);
                    len
                }))
            })
            .collect();
        next.push(row);
        i += 1;
    }
    next
}

pub(crate) fn use_u128(d: i64, kmax: usize) -> bool {
    (kmax as f64) * ((2 * d + 1) as f64).log2() < 120.0
}

impl<C: Cnt + From<u8>> Table<C> {
    pub fn build(d: i64, kmax: usize, shell: ShellKind) -> Table<C> {
        let smax = kmax * (d * d) as usize;
        let digits = shell.mode.digits(d);
        let next = automaton(d, shell.c2);
        let mut mult = vec![0u8; d as usize + 1];
        for &x in &digits {
            mult[x.unsigned_abs() as usize] += 1;
        }
        let states = next.len();
        let mut t: Vec<Vec<Vec<C>>> = Vec::with_capacity(kmax + 1);
        let mut base = vec![vec![C::zero(); smax + 1]; states];
        for row in base.iter_mut() {
            row[0] = C::from(1);
        }
        t.push(base);
        for j in 1..=kmax {
            let prev = &t[j - 1];
            let reach = (j - 1) * (d * d) as usize;
            let mut cur = vec![vec![C::zero(); smax + 1]; states];
            for (st, row) in cur.iter_mut().enumerate() {
                for a in 0..=d as usize {
                    let (m, Some(ns)) = (mult[a], next[st][a]) else { continue };
                    if m == 0 {
                        continue;
                    }
                    let sq = a * a;
                    if sq > smax {
                        continue;
                    }
                    for v in 0..=reach.min(smax - sq) {
                        let p = &prev[ns][v];
                        if p.is_zero() {
                            continue;
                        }
                        for _ in 0..m {
                            row[v + sq] += p;
                        }
                    }
                }
            }
            t.push(cur);
        }
        Table { d, smax, digits, next, t }
    }

    /// Vectors of length `k` with every norm, counted at once.
    pub fn total(&self, k: usize) -> Vec<C> {
        self.t[k][0].clone()
    }

    /// For every norm, the number of length-`k` vectors whose embedded value
    /// is at most `bound`.
    pub fn count_le(&self, k: usize, embed: Embed, bound: &BigInt) -> Vec<C> {
        let d = self.d;
        let b = BigInt::from(embed.base(d));
        let bk = b.pow(k as u32);
        let lowd = embed.low_digit(d);
        // values range over [lowd * R, (b - 1 + lowd) * R] with R = (b^k - 1)/(b - 1)
        let rep = (&bk - 1) / (&b - 1);
        let lo = &rep * lowd;
        let hi = &rep * (embed.base(d) - 1 + lowd);
        if *bound >= hi {
            return self.total(k);
        }
        let mut out = vec![C::zero(); self.smax + 1];
        if *bound < lo {
            return out;
        }
        // digits of the bound, most significant first
        let mut v = bound - &lo;
        let mut ds = vec![0i64; k];
        for slot in ds.iter_mut().rev() {
            let (q, r) = v.div_rem(&b);
            *slot = r.to_i64().unwrap() + lowd;
            v = q;
        }
        let (mut st, mut used) = (0usize, 0usize);
        for (i, &top) in ds.iter().enumerate() {
            let left = k - i - 1;
            let rows = &self.t[left];
            for &x in self.digits.iter().take_while(|&&x| x < top) {
                let Some(ns) = self.next[st][x.unsigned_abs() as usize] else { continue };
                let shift = used + (x * x) as usize;
                if shift > self.smax {
                    continue;
                }
                let reach = (left * (d * d) as usize).min(self.smax - shift);
                for (dst, src) in out[shift..].iter_mut().zip(&rows[ns][..=reach]) {
                    *dst += src;
                }
            }
            // follow the bound's own digit, if it is allowed
            let step = if self.digits.contains(&top) { self.next[st][top.unsigned_abs() as usize] } else { None };
            match step {
                Some(ns) if used + (top * top) as usize <= self.smax => {
                    st = ns;
                    used += (top * top) as usize;
                }
                _ => return out,
            }
        }
        out[used] += &C::from(1);
        out
    }

    /// Counts with value in `[lo, hi]`, for every norm.
    pub fn count_between(&self, k: usize, embed: Embed, lo: &BigInt, hi: &BigInt) -> Vec<C> {
        if hi < lo {
            return vec![C::zero(); self.smax + 1];
        }
        let a = self.count_le(k, embed, hi);
        let below = lo - BigInt::one();
        if below.sign() == Sign::Minus && embed == Embed::Standard {
            return a;
        }
        let b = self.count_le(k, embed, &below);
        a.iter().zip(&b).map(|(x, y)| x.sub(y)).collect()
    }
}
