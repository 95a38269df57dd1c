use crate::apset::ApSet;
use serde::{Deserialize, Serialize};

/// Whether `sz(n)` is pinned down or only bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Exact,
    Bounded,
}

/// What is known about `sz(n)` for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzEntry {
    pub n: u64,
    pub lower: u64,
    pub upper: u64,
    pub lower_src: String,
    pub upper_src: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<ApSet>,
}

impl SzEntry {
    pub fn exact(n: u64, value: u64, src: &str) -> Self {
        SzEntry {
            n,
            lower: value,
            upper: value,
            lower_src: src.to_string(),
            upper_src: src.to_string(),
            witness: None,
        }
    }

    pub fn bounded(n: u64, lower: u64, upper: u64, lower_src: &str, upper_src: &str) -> Self {
        SzEntry {
            n,
            lower,
            upper,
            lower_src: lower_src.to_string(),
            upper_src: upper_src.to_string(),
            witness: None,
        }
    }

    pub fn kind(&self) -> Kind {
        if self.lower == self.upper {
            Kind::Exact
        } else {
            Kind::Bounded
        }
    }

    pub fn value(&self) -> Option<u64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Records for `n = 1..=len`, indexed by `n`.
///
/// Entries are kept contiguous; missing `n` are filled with the trivial
/// bracket `[min(n, 1), n]` so lookups never fail inside the range.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzTable {
    entries: Vec<SzEntry>,
}

impl SzTable {
    pub fn new() -> Self {
        SzTable::default()
    }

    /// Exact table from `values[i] = sz(i + 1)`.
    pub fn from_exact(values: &[u64], src: &str) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .map(|(i, &v)| SzEntry::exact(i as u64 + 1, v, src))
            .collect();
        SzTable { entries }
    }

    pub fn max_n(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: u64) -> Option<&SzEntry> {
        if n == 0 {
            return None;
        }
        self.entries.get(n as usize - 1)
    }

    pub fn entries(&self) -> &[SzEntry] {
        &self.entries
    }

    /// `sz(0) = 0` is answered without a record.
    pub fn exact(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return Some(0);
        }
        self.get(n).and_then(SzEntry::value)
    }

    pub fn lower(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return Some(0);
        }
        self.get(n).map(|e| e.lower)
    }

    pub fn upper(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return Some(0);
        }
        self.get(n).map(|e| e.upper)
    }

    /// Largest `m` such that every `n <= m` is exact.
    pub fn exact_prefix(&self) -> u64 {
        self.entries.iter().take_while(|e| e.lower == e.upper).count() as u64
    }

    fn grow_to(&mut self, n: u64) {
        while self.max_n() < n {
            let m = self.max_n() + 1;
            self.entries.push(SzEntry::bounded(m, 1, m, "trivial", "trivial"));
        }
    }

    /// Inserts or overwrites the record for `entry.n`.
    pub fn set(&mut self, entry: SzEntry) {
        assert!(entry.n >= 1, "sz tables start at n = 1");
        assert!(entry.lower <= entry.upper, "lower bound above upper bound at n = {}", entry.n);
        self.grow_to(entry.n);
        let n = entry.n;
        self.entries[n as usize - 1] = entry;
    }

    pub fn set_exact(&mut self, n: u64, value: u64, src: &str, witness: Option<ApSet>) {
        let mut e = SzEntry::exact(n, value, src);
        e.witness = witness;
        self.set(e);
    }

    /// Raises the lower bound at `n` if `value` improves it.
    pub fn raise_lower(&mut self, n: u64, value: u64, src: &str, witness: Option<ApSet>) -> bool {
        self.grow_to(n);
        let e = &mut self.entries[n as usize - 1];
        if value > e.lower && value <= e.upper {
            e.lower = value;
            e.lower_src = src.to_string();
            e.witness = witness;
            return true;
        }
        false
    }

    /// Lowers the upper bound at `n` if `value` improves it.
    pub fn lower_upper(&mut self, n: u64, value: u64, src: &str) -> bool {
        self.grow_to(n);
        let e = &mut self.entries[n as usize - 1];
        if value < e.upper && value >= e.lower {
            e.upper = value;
            e.upper_src = src.to_string();
            return true;
        }
        false
    }

    /// Propagates the monotonicity facts `sz(n) <= sz(n+1) <= sz(n) + 1`
    /// through both bounds until nothing changes.
    pub fn normalize(&mut self) {
        loop {
            let before: Vec<(u64, u64)> = self.entries.iter().map(|e| (e.lower, e.upper)).collect();
            self.normalize_pass();
            if self.entries.iter().map(|e| (e.lower, e.upper)).eq(before) {
                break;
            }
        }
    }

    fn normalize_pass(&mut self) {
        let len = self.entries.len();
        for i in 1..len {
            let prev_lower = self.entries[i - 1].lower;
            let prev_upper = self.entries[i - 1].upper;
            let e = &mut self.entries[i];
            if e.lower < prev_lower {
                e.lower = prev_lower;
                e.lower_src = format!("monotone from {}", i);
            }
            if e.upper > prev_upper + 1 {
                e.upper = prev_upper + 1;
                e.upper_src = format!("step from {}", i);
            }
        }
        for i in (0..len.saturating_sub(1)).rev() {
            let next_upper = self.entries[i + 1].upper;
            let next_lower = self.entries[i + 1].lower;
            let e = &mut self.entries[i];
            if e.upper > next_upper {
                e.upper = next_upper;
                e.upper_src = format!("monotone from {}", i + 2);
            }
            if next_lower > 0 && e.lower + 1 < next_lower {
                e.lower = next_lower - 1;
                e.lower_src = format!("step from {}", i + 2);
            }
        }
    }

    /// Checks `lower <= upper` everywhere and the normalized monotonicity
    /// facts; returns the first offending `n`.
    pub fn check(&self) -> Result<(), u64> {
        for (i, e) in self.entries.iter().enumerate() {
            if e.lower > e.upper || e.n != i as u64 + 1 {
                return Err(e.n);
            }
            if let Some(w) = &e.witness {
                if w.len() as u64 != e.lower || w.universe() > e.n {
                    return Err(e.n);
                }
            }
            if i > 0 {
                let p = &self.entries[i - 1];
                if e.lower < p.lower || e.upper < p.upper || e.upper > p.upper + 1 {
                    return Err(e.n);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_table_queries() {
        let t = SzTable::from_exact(&[1, 2, 2, 3, 4], "search");
        assert_eq!(t.exact(0), Some(0));
        assert_eq!(t.exact(4), Some(3));
        assert_eq!(t.exact(6), None);
        assert_eq!(t.exact_prefix(), 5);
        assert_eq!(t.get(5).unwrap().kind(), Kind::Exact);
        assert!(t.check().is_ok());
    }

    #[test]
    fn normalization_tightens() {
        let mut t = SzTable::from_exact(&[1, 2, 2, 3], "search");
        t.set(SzEntry::bounded(5, 1, 9, "a", "b"));
        t.set(SzEntry::bounded(6, 4, 4, "w", "w"));
        t.normalize();
        assert_eq!((t.lower(5), t.upper(5)), (Some(3), Some(4)));
        assert!(t.check().is_ok());
    }

    #[test]
    fn gaps_are_trivial() {
        let mut t = SzTable::new();
        t.set_exact(3, 2, "x", None);
        assert_eq!(t.get(2).unwrap().upper, 2);
        assert!(t.raise_lower(2, 2, "pair", None));
        assert!(!t.lower_upper(2, 1, "bad"));
    }
}
