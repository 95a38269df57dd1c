use apcore::SzTable;
use serde::Serialize;

/// `a(m)`, the least `n` with `sz(n) >= m`, as far as a table pins it down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AOf {
    Exact { n: u64 },
    /// `lo <= a(m) <= hi`.
    Between { lo: u64, hi: u64 },
    /// No `n` in the table is known to reach `m`.
    AtLeast { lo: u64 },
}

/// `sz(n) >= m` iff `a(m) <= n`, so `a(m)` is bracketed by the first `n`
/// whose upper bound reaches `m` and the first whose lower bound does.
/// Bounds are monotone-normalized first.
pub fn a_of(table: &SzTable, m: u64) -> AOf {
    if m <= 1 {
        return AOf::Exact { n: m };
    }
    let mut t = table.clone();
    t.normalize();
    let top = t.max_n();
    let lo = (1..=top).find(|&n| t.upper(n).unwrap() >= m);
    let hi = (1..=top).find(|&n| t.lower(n).unwrap() >= m);
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo == hi => AOf::Exact { n: lo },
        (Some(lo), Some(hi)) => AOf::Between { lo, hi },
        (Some(lo), None) => AOf::AtLeast { lo },
        // sz(n) <= n, so a(m) >= m in any case
        (None, _) => AOf::AtLeast { lo: (top + 1).max(m) },
    }
}
