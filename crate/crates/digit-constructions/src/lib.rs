//! Closed-form 3-free families:
//!
//! * [`b3`]: integers whose base-3 digits are all 0 or 1;
//! * [`b5`]: base-5 digits in `{0, 1, 2}` with a fixed number of ones;
//! * [`kd`]: Salem-Spencer sets, base `2d - 1` with every digit `0..d`
//!   used equally often;
//! * [`block`]: Moser's construction on variable-length binary blocks.
//!
//! Every method counts its set exactly with [`BigCount`] for `n` of any
//! size and materializes it for moderate `n`. Counting is done over
//! `{0, ..., n-1}` and sets are shifted by one into `{1, ..., n}`, except
//! KD whose members are positive by construction.

pub mod b3;
pub mod b5;
pub mod block;
pub mod kd;

use apcore::{ApSet, BigCount};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

pub use b3::{b3_set, b3_size, b3_size_recurrence};
pub use b5::{b5_balanced_count, b5_count, b5_set, b5_size};
pub use block::{block_member, block_r, block_set, block_size};
pub use kd::{kd_count, kd_set, kd_size, KdParams};

/// Universe bound above which materialization is refused unless forced.
pub const MATERIALIZE_CAP: u64 = 100_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("n = {0} exceeds the materialization cap; pass force to override")]
    TooLarge(BigUint),
    #[error("n must be at least {min}")]
    TooSmall { min: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    B3,
    B5,
    Kd,
    Block,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::B3, Method::B5, Method::Kd, Method::Block];

    pub fn name(self) -> &'static str {
        match self {
            Method::B3 => "b3",
            Method::B5 => "b5",
            Method::Kd => "kd",
            Method::Block => "block",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s.to_ascii_lowercase())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Params {
    None {},
    B5 { ones: usize, digits: usize },
    Kd { d: usize, k: usize, composition: Vec<usize> },
    Block { r: u64 },
}

/// Size, parameters and (optionally) the set built by one method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub method: Method,
    #[serde(serialize_with = "decimal")]
    pub n: BigCount,
    #[serde(serialize_with = "decimal")]
    pub size: BigCount,
    pub params: Params,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<ApSet>,
}

fn decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Runs `method` at `n`, materializing when asked.
pub fn construct(method: Method, n: &BigUint, materialize: bool, force: bool) -> Result<ConstructionResult, ConstructionError> {
    if *n < BigUint::from(1u32) {
        return Err(ConstructionError::TooSmall { min: 1 });
    }
    let small = || -> Result<u64, ConstructionError> {
        match n.to_u64() {
            Some(v) if force || v <= MATERIALIZE_CAP => Ok(v),
            _ => Err(ConstructionError::TooLarge(n.clone())),
        }
    };
    let (size, params, set) = match method {
        Method::B3 => {
            let set = if materialize { Some(b3_set(small()?)) } else { None };
            (b3_size(n), Params::None {}, set)
        }
        Method::B5 => {
            let (size, ones) = b5_size(n);
            let digits = b5::digits_of(n);
            let set = if materialize { Some(b5_set(small()?, ones)) } else { None };
            (size, Params::B5 { ones, digits }, set)
        }
        Method::Kd => {
            let p = kd_size(n);
            let set = if materialize { Some(kd_set(small()?, &p)) } else { None };
            let params = Params::Kd { d: p.d, k: p.k, composition: p.composition.clone() };
            (p.size, params, set)
        }
        Method::Block => {
            let (size, r) = block_size(n);
            let set = if materialize { Some(block_set(small()?)) } else { None };
            (size, Params::Block { r }, set)
        }
    };
    Ok(ConstructionResult { method, n: n.clone(), size, params, set })
}

/// Digits of `v` in `base`, most significant first (`[0]` for zero).
pub(crate) fn digits_be(v: &BigUint, base: u32) -> Vec<u32> {
    let mut d = v.to_radix_be(base).into_iter().map(u32::from).collect::<Vec<_>>();
    if d.is_empty() {
        d.push(0);
    }
    d
}
