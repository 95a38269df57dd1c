use crate::digits_be;
use apcore::{ApSet, BigCount};
use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Zero;

/// Number of base-5 digits of `n - 1` (at least one).
pub fn digits_of(n: &BigUint) -> usize {
    if n.is_zero() {
        return 1;
    }
    digits_be(&(n - 1u32), 5).len()
}

/// Strings of `p` digits from `{0, 1, 2}` with exactly `t` ones.
fn free(p: usize, t: usize) -> BigUint {
    if t > p {
        return BigUint::zero();
    }
    binomial(BigUint::from(p), BigUint::from(t)) << (p - t)
}

/// `m` in `[0, n-1]` whose base-5 digits lie in `{0, 1, 2}` with exactly
/// `ones` digits equal to 1 (leading zeros are not digits of `m`, but they
/// are zeros, so they never add ones).
pub fn b5_count(n: &BigUint, ones: usize) -> BigCount {
    if n.is_zero() {
        return BigUint::zero();
    }
    let ds = digits_be(&(n - 1u32), 5);
    let len = ds.len();
    let mut total = BigUint::zero();
    let mut used = 0usize;
    for (i, &d) in ds.iter().enumerate() {
        let rest = len - i - 1;
        for g in 0..d.min(3) {
            let u = used + (g == 1) as usize;
            if u <= ones {
                total += free(rest, ones - u);
            }
        }
        if d > 2 {
            return total;
        }
        used += (d == 1) as usize;
        if used > ones {
            return total;
        }
    }
    if used == ones {
        total += 1u32;
    }
    total
}

/// Best count over the number of ones; ties go to fewer ones.
pub fn b5_size(n: &BigUint) -> (BigCount, usize) {
    let len = digits_of(n);
    let mut best = (BigUint::zero(), 0usize);
    for ones in 0..=len {
        let c = b5_count(n, ones);
        if c > best.0 {
            best = (c, ones);
        }
    }
    best
}

/// The B5 set with `ones` ones, shifted into `[1, n]`.
pub fn b5_set(n: u64, ones: usize) -> ApSet {
    let mut out = Vec::new();
    // (value, ones used, place value of the next digit)
    let mut stack = vec![(0u64, 0usize, 1u64)];
    while let Some((v, u, place)) = stack.pop() {
        if u == ones && v < n {
            out.push(v + 1);
        }
        if place >= n || place > u64::MAX / 5 {
            continue;
        }
        stack.push((v, u, place * 5));
        if u < ones && v + place < n {
            stack.push((v + place, u + 1, place * 5));
        }
        if v + 2 * place < n {
            stack.push((v + 2 * place, u, place * 5));
        }
    }
    out.sort_unstable();
    out.dedup();
    ApSet::new(n, out).expect("members are in range")
}

/// Length-`k` strings over `{-1, 0, 1}` with exactly `zeros` zeros: the
/// balanced-digit form of the base-5 family, a unit-radius sphere instance.
pub fn b5_balanced_count(k: usize, zeros: usize) -> BigCount {
    if zeros > k {
        return BigUint::zero();
    }
    binomial(BigUint::from(k), BigUint::from(zeros)) << (k - zeros)
}
