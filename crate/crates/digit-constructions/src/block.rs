use apcore::{ApSet, BigCount};
use num_bigint::BigUint;
use num_traits::One;

/// Largest `r` with `2^(r(r+1)/2) - 1 <= n` (at least 1 for `n >= 1`).
pub fn block_r(n: &BigUint) -> u64 {
    let bits = (n + 1u32).bits() - 1; // floor(log2(n + 1))
    let mut r = 0u64;
    while (r + 1) * (r + 2) / 2 <= bits {
        r += 1;
    }
    r
}

/// Size `2^((r-2)(r-3)/2)` of Moser's set (1 when `r <= 3`), with `r`.
pub fn block_size(n: &BigUint) -> (BigCount, u64) {
    let r = block_r(n);
    let e = if r <= 3 { 0 } else { (r - 2) * (r - 3) / 2 };
    (BigUint::one() << e, r)
}

fn offset(i: u64) -> u64 {
    i * (i - 1) / 2
}

/// Whether `v` (unshifted, so `0` may be a member) is in the `r`-block set.
pub fn block_member(v: &BigUint, r: u64) -> bool {
    if r < 3 {
        return v.bits() == 0;
    }
    if v.bits() > r * (r + 1) / 2 {
        return false;
    }
    let block = |i: u64| -> BigUint { (v >> offset(i)) & ((BigUint::one() << i) - 1u32) };
    let mut sum = BigUint::from(0u32);
    for i in 1..=r - 2 {
        let x = block(i);
        if x.bit(i - 1) {
            return false;
        }
        sum += &x * &x;
    }
    (v >> offset(r - 1)) == sum
}

/// Moser's set in `[1, n]` (members shifted by one).
pub fn block_set(n: u64) -> ApSet {
    let (_, r) = block_size(&BigUint::from(n));
    if r <= 3 {
        return ApSet::new(n, vec![1]).expect("n >= 1");
    }
    let mut out = Vec::new();
    // x_i ranges over [0, 2^(i-1)), blocks placed at offset i(i-1)/2
    let total: u64 = 1 << ((r - 2) * (r - 3) / 2);
    for code in 0..total {
        let (mut c, mut v, mut sq) = (code, 0u64, 0u64);
        for i in 2..=r - 2 {
            let x = c & ((1 << (i - 1)) - 1);
            c >>= i - 1;
            v |= x << offset(i);
            sq += x * x;
        }
        v |= sq << offset(r - 1);
        out.push(v + 1);
    }
    ApSet::from_unsorted(n, out).expect("members are in range")
}
