use crate::table::{DigitMode, Embed};
use crate::variant::{offset, window, SphereParams};
use crate::SphereError;
use apcore::ApSet;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Largest universe materialized without `force`.
pub const MATERIALIZE_CAP: u64 = 10_000_000;

struct Walk<'a> {
    digits: &'a [i64],
    c2: bool,
    base: i128,
    lo: i128,
    hi: i128,
    /// `pow[r]` = base^r
    pow: Vec<i128>,
    /// extreme digit values, for interval pruning
    dmin: i128,
    dmax: i128,
    out: Vec<i128>,
}

impl Walk<'_> {
    fn c2_ok(used: u64, a: i64) -> bool {
        !((a == 1 && used & 2 != 0) || (a >= 2 && used >> (a - 2) & 1 != 0) || used >> (a + 2) & 1 != 0)
    }

    fn go(&mut self, left: usize, value: i128, norm: i64, used: u64) {
        if left == 0 {
            if norm == 0 && (self.lo..=self.hi).contains(&value) {
                self.out.push(value);
            }
            return;
        }
        let p = self.pow[left - 1];
        let rep = (p - 1) / (self.base - 1);
        for i in 0..self.digits.len() {
            let x = self.digits[i];
            if x * x > norm || (self.c2 && !Self::c2_ok(used, x.abs())) {
                continue;
            }
            let v = value * self.base + x as i128;
            let (vmin, vmax) = (v * p + self.dmin * rep, v * p + self.dmax * rep);
            if vmax < self.lo || vmin > self.hi {
                continue;
            }
            self.go(left - 1, v, norm - x * x, used | 1 << x.abs());
        }
    }
}

/// Vectors of one shell whose embedded value lies in the window, as values.
fn shell_values(d: usize, k: usize, norm: usize, mode: DigitMode, c2: bool, embed: Embed, lo: i128, hi: i128) -> Vec<i128> {
    let digits = mode.digits(d as i64);
    let base = embed.base(d as i64) as i128;
    let mut pow = vec![1i128];
    for _ in 0..k {
        pow.push(pow.last().unwrap().saturating_mul(base));
    }
    let mut w = Walk {
        dmin: *digits.first().unwrap() as i128,
        dmax: *digits.last().unwrap() as i128,
        digits: &digits,
        c2,
        base,
        lo,
        hi,
        pow,
        out: Vec::new(),
    };
    w.go(k, 0, norm as i64, 0);
    w.out
}

/// Enumerates the variant's members and moves them into `[1, n]`.
pub fn materialize_sphere(p: &SphereParams, n: u64, force: bool) -> Result<ApSet, SphereError> {
    if n > MATERIALIZE_CAP && !force {
        return Err(SphereError::Cap(n));
    }
    let embed = p.variant.embed();
    if (p.k as f64) * (embed.base(p.d as i64) as f64).log2() > 120.0 {
        return Err(SphereError::Params("vectors too long to materialize".into()));
    }
    let (lo, hi) = window(embed, &BigUint::from(n));
    let (lo, hi) = (lo.to_i128().unwrap(), hi.to_i128().unwrap());
    let shift = offset(embed, n);
    let mut vals = Vec::new();
    for (kind, norm) in p.variant.parts() {
        let t = norm.of(p.s);
        if t > p.k * p.d * p.d || (p.variant == crate::Variant::Far && p.s == 0) {
            continue;
        }
        vals.extend(shell_values(p.d, p.k, t, kind.mode, kind.c2, embed, lo, hi));
    }
    let members = vals.into_iter().map(|v| (v + shift) as u64).collect();
    Ok(ApSet::from_unsorted(n, members)?)
}
