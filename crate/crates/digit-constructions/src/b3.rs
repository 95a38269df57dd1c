use crate::digits_be;
use apcore::{ApSet, BigCount};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `|A|` where `A` is the set of `m` in `[0, n-1]` written with base-3
/// digits 0 and 1 only; the set itself lives in `[1, n]` after the shift.
pub fn b3_size(n: &BigUint) -> BigCount {
    if n.is_zero() {
        return BigUint::zero();
    }
    count_upto(&(n - 1u32))
}

/// Members of `[0, x]` with base-3 digits in `{0, 1}`, by a digit walk.
fn count_upto(x: &BigUint) -> BigCount {
    let ds = digits_be(x, 3);
    let len = ds.len();
    let mut total = BigUint::zero();
    for (i, &d) in ds.iter().enumerate() {
        let free = BigUint::one() << (len - i - 1);
        match d {
            0 => {}
            1 => total += free,
            _ => return total + (free << 1),
        }
    }
    total + 1u32
}

/// The recurrence `S(0) = 1`,
/// `S(x) = 2^(k-1) + (2^(k-1) if 1...1 (k ones) <= x else S(x - 3^(k-1)))`
/// for `x` with `k` base-3 digits, counting `[0, x]`. Returns `S(n - 1)`.
pub fn b3_size_recurrence(n: &BigUint) -> BigCount {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut x = n - 1u32;
    let mut acc = BigUint::zero();
    loop {
        if x.is_zero() {
            return acc + 1u32;
        }
        let k = digits_be(&x, 3).len();
        let half = BigUint::one() << (k - 1);
        let top = BigUint::from(3u32).pow(k as u32 - 1);
        let ones = (&top * 3u32 - 1u32) / 2u32;
        if ones <= x {
            return acc + (half << 1);
        }
        acc += half;
        x -= top;
    }
}

/// The B3 set inside `[1, n]`.
pub fn b3_set(n: u64) -> ApSet {
    let mut out = Vec::new();
    let mut stack = vec![0u64];
    // each member m spawns 3m and 3m + 1
    while let Some(m) = stack.pop() {
        if m >= n {
            continue;
        }
        out.push(m + 1);
        if m > 0 {
            stack.push(3 * m);
        }
        stack.push(3 * m + 1);
    }
    ApSet::from_unsorted(n, out).expect("members are in range")
}
