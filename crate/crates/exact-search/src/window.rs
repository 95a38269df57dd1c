//! Length-`L` bit windows packed into a `u32`, first position in the most
//! significant of the `L` bits, so sliding right is `(key << 1 | b) & mask`.

use apcore::SearchState;

pub const MAX_L: usize = 30;

#[inline]
pub fn mask(l: usize) -> u32 {
    if l >= 32 {
        u32::MAX
    } else {
        (1u32 << l) - 1
    }
}

#[inline]
pub fn push(key: u32, bit: bool, l: usize) -> u32 {
    ((key << 1) | bit as u32) & mask(l)
}

/// Bit for position `i` (1-based) of a length-`l` window.
#[inline]
pub fn bit(key: u32, i: usize, l: usize) -> bool {
    (key >> (l - i)) & 1 == 1
}

pub fn ones(key: u32) -> u32 {
    key.count_ones()
}

/// Whether appending a 1 to the length-`len` string `key` (last bit = LSB)
/// keeps it 3-free, given `key` itself is.
#[inline]
pub fn can_append_one(key: u32, len: usize) -> bool {
    let mut d = 1;
    while 2 * d <= len {
        if (key >> (d - 1)) & (key >> (2 * d - 1)) & 1 == 1 {
            return false;
        }
        d += 1;
    }
    true
}

/// All 3-free strings of length `l`, built by the append recurrence,
/// returned sorted by key.
pub fn all_three_free(l: usize) -> Vec<u32> {
    assert!(l <= MAX_L, "window length {l} exceeds {MAX_L}");
    let mut cur = vec![0u32];
    for len in 0..l {
        let mut next = Vec::with_capacity(cur.len() * 2);
        for &k in &cur {
            next.push(k << 1);
            if can_append_one(k, len) {
                next.push((k << 1) | 1);
            }
        }
        cur = next;
    }
    cur.sort_unstable();
    cur
}

/// Search state for the window read as positions `1..=l` of `[n]`.
pub fn state_of(key: u32, l: usize, n: usize) -> SearchState {
    let mut st = SearchState::new(n).expect("window universe within engine range");
    for i in 1..=l {
        st = st.extend_unchecked(bit(key, i, l));
    }
    st
}

pub fn elements(key: u32, l: usize) -> Vec<u64> {
    (1..=l).filter(|&i| bit(key, i, l)).map(|i| i as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_three_free_strings() {
        // number of 3-free subsets of [l], counted independently by masks
        for l in 0..=14usize {
            let brute = (0u32..1 << l)
                .filter(|&m| (1..=l).all(|d| m & (m >> d) & (m >> (2 * d)) == 0))
                .count();
            assert_eq!(all_three_free(l).len(), brute, "l = {l}");
        }
    }

    #[test]
    fn push_slides() {
        let k = 0b1011;
        assert_eq!(push(k, true, 4), 0b0111);
        assert!(bit(0b1000, 1, 4));
        assert_eq!(elements(0b1101, 4), vec![1, 2, 4]);
    }
}
