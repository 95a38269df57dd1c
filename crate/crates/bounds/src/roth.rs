use crate::BoundsError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Inputs to the Roth-type bound: `sz(2m+1) <= c(2m+1)` is assumed known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RothQuery {
    pub m: u64,
    pub c: BigRational,
    pub big_m: u64,
    pub epsilon: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RothBound {
    /// Least `N` with `(m^2 N / 2M^2 + 4 eps N + 4mM + 1)(c + eps) < c(c - eps) N`.
    pub n: u64,
    /// `floor((c - eps) N)`, so `sz(N) <= bound`.
    pub bound: u64,
}

/// Parses a decimal such as `0.26733` or `3` into an exact rational.
pub fn decimal(s: &str) -> Result<BigRational, BoundsError> {
    let bad = || BoundsError::Parameters(format!("not a decimal: {s:?}"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

impl RothQuery {
    pub fn new(m: u64, c: &str, big_m: u64, epsilon: &str) -> Result<Self, BoundsError> {
        Ok(RothQuery { m, c: decimal(c)?, big_m, epsilon: decimal(epsilon)? })
    }
}

/// Solves the Roth inequality for the least `N`, exactly.
pub fn roth_min_n(q: &RothQuery) -> Result<RothBound, BoundsError> {
    if q.m == 0 || q.big_m == 0 {
        return Err(BoundsError::Parameters("m and M must be positive".into()));
    }
    if !q.epsilon.is_positive() || !q.c.is_positive() || q.c >= BigRational::one() {
        return Err(BoundsError::Parameters("need 0 < c < 1 and eps > 0".into()));
    }
    let (c, eps) = (&q.c, &q.epsilon);
    if c <= eps {
        return Err(BoundsError::Infeasible);
    }
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let a = int(q.m * q.m) / int(2 * q.big_m * q.big_m) + int(4) * eps;
    let b = int(4 * q.m * q.big_m + 1);
    let den = c * (c - eps) - &a * (c + eps);
    if den <= BigRational::zero() {
        return Err(BoundsError::Infeasible);
    }
    // strict inequality: N > b(c+eps)/den
    let n = (b * (c + eps) / den).floor() + BigRational::one();
    let bound = ((c - eps) * &n).floor();
    let too_big = || BoundsError::Parameters("N does not fit in 64 bits".into());
    Ok(RothBound {
        n: n.to_integer().to_u64().ok_or_else(too_big)?,
        bound: bound.to_integer().to_u64().ok_or_else(too_big)?,
    })
}
