use crate::error::ApError;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt::Write as _;

/// A set of integers in `[1, n]`, stored ascending.
///
/// Construction validates order and range but not 3-freeness; call
/// [`ApSet::verified`] or [`is_three_free`] for that.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ApSet {
    n: u64,
    elems: Vec<u64>,
}

impl ApSet {
    pub fn new(n: u64, elems: Vec<u64>) -> Result<Self, ApError> {
        let mut prev = 0u64;
        for (i, &v) in elems.iter().enumerate() {
            if v == 0 || v > n {
                return Err(ApError::OutOfRange { value: v, n });
            }
            if i > 0 && v <= prev {
                return Err(ApError::NotAscending { value: v });
            }
            prev = v;
        }
        Ok(ApSet { n, elems })
    }

    /// Sorts and deduplicates before validating the range.
    pub fn from_unsorted(n: u64, mut elems: Vec<u64>) -> Result<Self, ApError> {
        elems.sort_unstable();
        elems.dedup();
        Self::new(n, elems)
    }

    /// Like [`ApSet::new`] but also rejects sets containing a 3-AP.
    pub fn verified(n: u64, elems: Vec<u64>) -> Result<Self, ApError> {
        let s = Self::new(n, elems)?;
        match find_progression(&s.elems) {
            Some((x, y, z)) => Err(ApError::NotThreeFree(x, y, z)),
            None => Ok(s),
        }
    }

    pub fn empty(n: u64) -> Self {
        ApSet { n, elems: Vec::new() }
    }

    pub fn universe(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    /// Same elements viewed inside a larger (or equal) universe.
    pub fn with_universe(&self, n: u64) -> Result<Self, ApError> {
        Self::new(n, self.elems.clone())
    }

    /// Adds `t` to every element and to the universe bound.
    pub fn shifted(&self, t: u64) -> ApSet {
        ApSet {
            n: self.n + t,
            elems: self.elems.iter().map(|&v| v + t).collect(),
        }
    }

    /// One decimal per line, ascending, trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(self.elems.len() * 4);
        for v in &self.elems {
            writeln!(out, "{v}").unwrap();
        }
        out
    }

    /// Parses the set-file format against the universe bound `n`.
    pub fn parse(text: &str, n: u64) -> Result<Self, ApError> {
        if !text.is_empty() && !text.ends_with('\n') {
            return Err(ApError::Parse {
                line: text.lines().count(),
                reason: "missing trailing newline".into(),
            });
        }
        let mut elems = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if line.is_empty() || !line.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ApError::Parse {
                    line: line_no,
                    reason: format!("expected a decimal integer, got {line:?}"),
                });
            }
            let v: u64 = line.parse().map_err(|e| ApError::Parse {
                line: line_no,
                reason: format!("{e}"),
            })?;
            if let Some(&last) = elems.last() {
                if v == last {
                    return Err(ApError::Parse { line: line_no, reason: format!("duplicate {v}") });
                }
                if v < last {
                    return Err(ApError::Parse { line: line_no, reason: format!("{v} after {last}") });
                }
            }
            elems.push(v);
        }
        Self::new(n, elems)
    }

    /// Parses a set file whose universe is taken to be its largest element.
    pub fn parse_tight(text: &str) -> Result<Self, ApError> {
        let probe = Self::parse(text, u64::MAX)?;
        let n = probe.elems.last().copied().unwrap_or(0);
        Ok(ApSet { n, elems: probe.elems })
    }
}

/// Returns some progression `x < y < z` with `x + z = 2y` if one exists.
///
/// Checks every pair `x < y` for membership of `2y - x`: `O(|s|^2)` lookups.
pub fn find_progression(elems: &[u64]) -> Option<(u64, u64, u64)> {
    if elems.len() < 3 {
        return None;
    }
    let max = *elems.iter().max().unwrap();
    if max <= 1 << 22 {
        let mut member = vec![false; max as usize + 1];
        for &v in elems {
            member[v as usize] = true;
        }
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        for (i, &x) in sorted.iter().enumerate() {
            for &y in &sorted[i + 1..] {
                let z = 2 * y - x;
                if z > max {
                    break;
                }
                if member[z as usize] {
                    return Some((x, y, z));
                }
            }
        }
        None
    } else {
        let member: HashSet<u64> = elems.iter().copied().collect();
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        for (i, &x) in sorted.iter().enumerate() {
            for &y in &sorted[i + 1..] {
                let z = 2 * y - x;
                if z > max {
                    break;
                }
                if member.contains(&z) {
                    return Some((x, y, z));
                }
            }
        }
        None
    }
}

pub fn is_three_free(s: &ApSet) -> bool {
    find_progression(&s.elems).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(!is_three_free(&ApSet::new(3, vec![1, 2, 3]).unwrap()));
        assert!(is_three_free(&ApSet::empty(5)));
        assert!(is_three_free(&ApSet::new(7, vec![7]).unwrap()));
        assert!(is_three_free(&ApSet::new(5, vec![1, 2, 4, 5]).unwrap()));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(ApSet::new(5, vec![2, 1]), Err(ApError::NotAscending { .. })));
        assert!(matches!(ApSet::new(5, vec![0]), Err(ApError::OutOfRange { .. })));
        assert!(matches!(ApSet::new(5, vec![6]), Err(ApError::OutOfRange { .. })));
        assert!(matches!(ApSet::new(5, vec![3, 3]), Err(ApError::NotAscending { .. })));
    }

    #[test]
    fn round_trip() {
        let s = ApSet::new(8, vec![1, 3, 8]).unwrap();
        assert_eq!(s.serialize(), "1\n3\n8\n");
        assert_eq!(ApSet::parse("1\n3\n8\n", 8).unwrap(), s);
        assert_eq!(ApSet::parse("", 4).unwrap(), ApSet::empty(4));
        assert_eq!(ApSet::empty(4).serialize(), "");
    }

    #[test]
    fn parse_errors() {
        assert!(ApSet::parse("1\n1\n", 5).is_err());
        assert!(ApSet::parse("3\n2\n", 5).is_err());
        assert!(ApSet::parse("1\n9\n", 5).is_err());
        assert!(ApSet::parse("1\n2", 5).is_err());
        assert!(ApSet::parse("1\n#x\n", 5).is_err());
        assert!(ApSet::parse(" 1\n", 5).is_err());
    }

    #[test]
    fn large_values_use_hash_path() {
        let big = 1u64 << 40;
        let s = ApSet::new(big * 3, vec![big, 2 * big, 3 * big]).unwrap();
        assert_eq!(find_progression(s.elements()), Some((big, 2 * big, 3 * big)));
        let t = ApSet::new(big * 3, vec![big, 2 * big, 3 * big - 1]).unwrap();
        assert!(is_three_free(&t));
    }
}
