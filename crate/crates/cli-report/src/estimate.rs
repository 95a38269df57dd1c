use crate::ReportError;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Natural log of a big integer, from its leading 64 bits.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `c` such that `size = n^(1 - c / sqrt(log2 n))`.
pub fn c_estimate(n: &BigUint, size: &BigUint) -> Result<f64, ReportError> {
    if size.is_zero() || *size <= BigUint::from(1u8) || size >= n {
        return Err(ReportError::Degenerate(format!("size {size} for n = {n}")));
    }
    let ln_n = ln_big(n);
    let ratio = ln_big(size) / ln_n;
    Ok((1.0 - ratio) * (ln_n / std::f64::consts::LN_2).sqrt())
}
