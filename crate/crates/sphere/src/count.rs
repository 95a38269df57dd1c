use crate::table::{DigitMode, Embed, ShellKind, Table};
use crate::SphereError;
use apcore::BigCount;
use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::Zero;

/// Largest `k * (k d^2)` table accepted by the public counting functions.
pub const TABLE_BUDGET: u64 = 200_000_000;

fn check_budget(d: usize, k: usize) -> Result<(), SphereError> {
    let cells = (k as u64 + 1) * (k as u64 * (d * d) as u64 + 1);
    if cells > TABLE_BUDGET {
        return Err(SphereError::Budget { cells, limit: TABLE_BUDGET });
    }
    Ok(())
}

/// Number of `k`-vectors with digits from `mode` (bound `d`) and squared
/// norm exactly `s`.
pub fn count_norm(d: usize, k: usize, s: usize, mode: DigitMode) -> Result<BigCount, SphereError> {
    check_budget(d, k)?;
    if s > k * d * d {
        return Ok(BigUint::zero());
    }
    let shell = ShellKind { mode, c2: false, embed: Embed::Balanced };
    Ok(Table::<BigUint>::build(d as i64, k, shell).t[k][0][s].clone())
}

/// Like [`count_norm`], restricted to vectors whose base-`(4d+1)` value
/// (balanced digits) has absolute value at most `bound`.
pub fn count_within(d: usize, k: usize, s: usize, mode: DigitMode, bound: &BigUint) -> Result<BigCount, SphereError> {
    check_budget(d, k)?;
    if s > k * d * d {
        return Ok(BigUint::zero());
    }
    let shell = ShellKind { mode, c2: false, embed: Embed::Balanced };
    let t = Table::<BigUint>::build(d as i64, k, shell);
    let hi = BigInt::from(bound.clone());
    Ok(t.count_between(k, Embed::Balanced, &-hi.clone(), &hi)[s].clone())
}

/// The signed count rebuilt from positive-digit counts: choose the `m`
/// non-zero places, their signs, then positive digits for them.
pub fn signed_from_positive(d: usize, k: usize, s: usize) -> Result<BigCount, SphereError> {
    let mut total = BigUint::zero();
    for m in 0..=k {
        let pos = count_norm(d, m, s, DigitMode::Positive)?;
        total += binomial(BigUint::from(k), BigUint::from(m)) * (BigUint::from(1u32) << m) * pos;
    }
    Ok(total)
}
