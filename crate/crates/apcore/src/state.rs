use crate::bits::Bits256;
use crate::error::ApError;

/// Largest universe the fixed-width engine supports (bit 0 is unused).
pub const MAX_N: usize = 255;

/// A backtracking node: a 0/1 prefix over positions `1..=len` of `[n]`
/// together with the positions in `len+1..=n` that the prefix forbids.
///
/// `forbidden(f)` holds iff some chosen `x < y <= len` has `2y - x = f`.
/// Appending is a shift-and-OR: the engine keeps the chosen positions
/// mirrored around the next position, so the new forbidden bits for a
/// chosen `p` are that mirror shifted left by `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchState {
    n: usize,
    len: usize,
    ones: usize,
    prefix: Bits256,
    // bit d set iff position (len + 1 - d) is chosen, d >= 1
    mirror: Bits256,
    forbidden: Bits256,
    universe: Bits256,
}

impl SearchState {
    pub fn new(n: usize) -> Result<Self, ApError> {
        if n > MAX_N {
            return Err(ApError::TooLarge { n: n as u64, max: MAX_N as u64 });
        }
        Ok(SearchState {
            n,
            len: 0,
            ones: 0,
            prefix: Bits256::zero(),
            mirror: Bits256::zero(),
            forbidden: Bits256::zero(),
            universe: Bits256::range(1, n),
        })
    }

    /// Builds the state for a whole prefix by repeated extension.
    pub fn from_prefix(prefix: &[bool], n: usize) -> Result<Self, ApError> {
        let mut st = SearchState::new(n)?;
        for &b in prefix {
            st = st.extend(b)?;
        }
        Ok(st)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    pub fn prefix_bits(&self) -> Bits256 {
        self.prefix
    }

    pub fn chosen(&self) -> Vec<u64> {
        self.prefix.iter_ones().map(|p| p as u64).collect()
    }

    /// Forbidden positions in `len+1..=n` as a bit array indexed by position.
    pub fn forbidden_bits(&self) -> Bits256 {
        self.forbidden.and(Bits256::range(self.len + 1, self.n))
    }

    #[inline]
    pub fn is_forbidden(&self, pos: usize) -> bool {
        pos > self.len && pos <= self.n && self.forbidden.get(pos)
    }

    /// `result[f]` for `f` in `0..=n`; only entries above `len` can be true.
    pub fn forbidden_vec(&self) -> Vec<bool> {
        (0..=self.n).map(|f| self.is_forbidden(f)).collect()
    }

    /// Number of positions in `len+1..=n` that are not forbidden.
    pub fn free_count(&self) -> usize {
        Bits256::range(self.len + 1, self.n).and_not(self.forbidden).count() as usize
    }

    /// Whether appending a 1 keeps the prefix 3-free.
    #[inline]
    pub fn can_take(&self) -> bool {
        self.len < self.n && !self.forbidden.get(self.len + 1)
    }

    /// Appends one bit. Appending 1 on a forbidden position is a caller bug
    /// and is reported as [`ApError::ForbiddenExtension`].
    pub fn extend(&self, bit: bool) -> Result<Self, ApError> {
        if self.len >= self.n {
            return Err(ApError::StateFull(self.n));
        }
        if bit && !self.can_take() {
            return Err(ApError::ForbiddenExtension(self.len + 1));
        }
        Ok(self.extend_unchecked(bit))
    }

    /// [`SearchState::extend`] without the checks, for hot loops that
    /// already tested [`SearchState::can_take`].
    #[inline]
    pub fn extend_unchecked(&self, bit: bool) -> Self {
        let p = self.len + 1;
        let mut next = *self;
        next.len = p;
        if bit {
            next.forbidden = self.forbidden.or(self.mirror.shl(p)).and(self.universe);
            next.prefix.set(p);
            next.ones += 1;
        }
        next.mirror = self.mirror.shl(1);
        if bit {
            next.mirror.set(1);
        }
        next
    }
}

/// Reference oracle for the engine: the forbidden array of `prefix` inside
/// `[n]`, computed from scratch. `result[f]` for `f` in `0..=n`.
pub fn forbidden_recompute(prefix: &[bool], n: usize) -> Vec<bool> {
    let len = prefix.len();
    let chosen: Vec<usize> = (1..=len).filter(|&p| prefix[p - 1]).collect();
    let mut out = vec![false; n + 1];
    for (i, &x) in chosen.iter().enumerate() {
        for &y in &chosen[i + 1..] {
            let f = 2 * y - x;
            if f > len && f <= n {
                out[f] = true;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.bytes().map(|b| b == b'1').collect()
    }

    #[test]
    fn oracle_examples() {
        assert!(forbidden_recompute(&bits("1"), 5).iter().all(|&b| !b));
        let f = forbidden_recompute(&bits("11"), 5);
        assert_eq!(f.iter().positions(), vec![3]);
        let f = forbidden_recompute(&bits("101"), 9);
        assert_eq!(f.iter().positions(), vec![5]);
    }

    #[test]
    fn extend_examples() {
        let s0 = SearchState::new(5).unwrap();
        let s1 = s0.extend(true).unwrap();
        assert_eq!(s1.forbidden_vec().iter().positions(), Vec::<usize>::new());
        let s2 = s1.extend(true).unwrap();
        assert_eq!(s2.forbidden_vec().iter().positions(), vec![3]);
        assert_eq!(s2.extend(true), Err(ApError::ForbiddenExtension(3)));
        let s3 = s2.extend(false).unwrap();
        assert_eq!(s3.len(), 3);
        assert!(s3.forbidden_vec().iter().all(|&b| !b));
        assert_eq!(s3.free_count(), 2);
    }

    #[test]
    fn full_state_rejects() {
        let mut s = SearchState::new(2).unwrap();
        s = s.extend(true).unwrap().extend(true).unwrap();
        assert_eq!(s.extend(false), Err(ApError::StateFull(2)));
        assert!(SearchState::new(MAX_N + 1).is_err());
    }

    #[test]
    fn top_of_range() {
        let mut s = SearchState::new(MAX_N).unwrap();
        for p in 1..=MAX_N {
            let take = p == 1 || p == 128;
            s = s.extend(take && s.can_take()).unwrap();
            if p == 128 {
                assert!(s.is_forbidden(255));
            }
        }
        assert_eq!(s.ones(), 2);
    }

    trait Positions {
        fn positions(self) -> Vec<usize>;
    }
    impl<'a, I: Iterator<Item = &'a bool>> Positions for I {
        fn positions(self) -> Vec<usize> {
            self.enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
        }
    }
}
