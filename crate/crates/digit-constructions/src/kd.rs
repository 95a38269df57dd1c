use crate::digits_be;
use apcore::{ApSet, BigCount};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// The winning Salem-Spencer parameters at some `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KdParams {
    pub d: usize,
    pub k: usize,
    /// How many times each digit `0..d` occurs.
    pub composition: Vec<usize>,
    #[serde(serialize_with = "crate::decimal")]
    pub size: BigCount,
}

fn multinomial(c: &[usize]) -> BigUint {
    let mut out = BigUint::one();
    let mut total = 0u64;
    for &m in c {
        for j in 1..=m as u64 {
            total += 1;
            out = out * total / j;
        }
    }
    out
}

/// Strings of length `k` over digits `0..d` with digit counts `comp`
/// whose base-`(2d-1)` value is at most `n` (leading zeros allowed).
pub fn kd_count(n: &BigUint, d: usize, comp: &[usize]) -> BigCount {
    assert_eq!(comp.len(), d, "composition must cover digits 0..d");
    let k: usize = comp.iter().sum();
    let base = (2 * d - 1) as u32;
    if *n >= BigUint::from(base).pow(k as u32) {
        return multinomial(comp);
    }
    let mut ds = digits_be(n, base);
    while ds.len() < k {
        ds.insert(0, 0);
    }
    let mut rem = comp.to_vec();
    let mut left = k as u64;
    let mut total = BigUint::zero();
    for &digit in &ds {
        let digit = digit as usize;
        // M(rem - e_g) = M(rem) * rem[g] / left
        let m = multinomial(&rem);
        for g in 0..digit.min(d) {
            if rem[g] > 0 {
                total += &m * rem[g] / left;
            }
        }
        if digit >= d || rem[digit] == 0 {
            return total;
        }
        rem[digit] -= 1;
        left -= 1;
    }
    total + 1u32
}

/// Best equal-composition Salem-Spencer set inside `[1, n]`.
///
/// Searches `d >= 2` and lengths `k` that are multiples of `d`; ties go
/// to the smaller `d`, then the smaller `k`.
pub fn kd_size(n: &BigUint) -> KdParams {
    let mut best = KdParams { d: 2, k: 2, composition: vec![1, 1], size: BigUint::zero() };
    let mut d = 2usize;
    loop {
        let base = (2 * d - 1) as u32;
        let len = if n.is_zero() { 1 } else { digits_be(n, base).len() };
        let kmax = len * d / (d - 1);
        if kmax < d {
            break;
        }
        for k in (d..=kmax).step_by(d) {
            let comp = vec![k / d; d];
            let size = kd_count(n, d, &comp);
            if size > best.size {
                best = KdParams { d, k, composition: comp, size };
            }
        }
        d += 1;
    }
    best
}

/// Materializes the strings counted by [`kd_count`] as integers in `[1, n]`.
pub fn kd_set(n: u64, p: &KdParams) -> ApSet {
    let base = (2 * p.d - 1) as u64;
    let mut out = Vec::new();
    let mut rem = p.composition.clone();
    fn walk(v: u128, left: u32, rem: &mut [usize], base: u128, n: u128, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(v as u64);
            return;
        }
        for g in 0..rem.len() {
            // smallest completion of the prefix; digits run upward, so stop once it overshoots
            let next = v * base + g as u128;
            if next.saturating_mul(base.saturating_pow(left - 1)) > n {
                return;
            }
            if rem[g] > 0 {
                rem[g] -= 1;
                walk(next, left - 1, rem, base, n, out);
                rem[g] += 1;
            }
        }
    }
    walk(0, p.k as u32, &mut rem, base as u128, n as u128, &mut out);
    ApSet::new(n, out).expect("walk emits sorted values in range")
}

