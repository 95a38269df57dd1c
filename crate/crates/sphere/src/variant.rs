use crate::table::{use_u128, Cnt, DigitMode, Embed, ShellKind, Table};
use crate::SphereError;
use apcore::BigCount;
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

/// Which union of spheres to build. Every shell is intersected with the
/// window of values that fits the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// The sphere of norm `s`.
    Plain,
    /// Norm `s` plus the all-non-zero part of norm `s+1`, as literally
    /// stated. Not 3-free in general; kept for comparison with published counts.
    Nz,
    /// All-non-zero part of norm `s` plus the full sphere of norm `s+1`.
    NzInner,
    /// Behrend-style: non-negative digits in base `2d+1`, norms `s` and `s+1`.
    Nn,
    /// Signed norm `s` plus non-negative norm `s+1`, base `4d+1`.
    NnSigned,
    /// Norm `s`, non-zero norm `s+1`, non-zero and C2 norm `s+2`, as stated.
    Cond,
    /// Non-zero norms `s` and `s+1` plus the C2 part of norm `s+2`.
    CondInner,
    /// Norm `s` plus the non-negative part of norm `10s`.
    Far,
}

impl Variant {
    pub const ALL: [Variant; 8] = [
        Variant::Plain,
        Variant::Nz,
        Variant::NzInner,
        Variant::Nn,
        Variant::NnSigned,
        Variant::Cond,
        Variant::CondInner,
        Variant::Far,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Nz => "nz",
            Variant::NzInner => "nz-inner",
            Variant::Nn => "nn",
            Variant::NnSigned => "nn-signed",
            Variant::Cond => "cond",
            Variant::CondInner => "cond-inner",
            Variant::Far => "far",
        }
    }

    pub fn parse(s: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name() == s.to_ascii_lowercase())
    }

    pub fn embed(self) -> Embed {
        if self == Variant::Nn {
            Embed::Standard
        } else {
            Embed::Balanced
        }
    }

    /// The shells `(family, norm as a function of s)` whose union is the set.
    pub fn parts(self) -> Vec<(ShellKind, Norm)> {
        let e = self.embed();
        let sh = |mode, c2| ShellKind { mode, c2, embed: e };
        use DigitMode::*;
        use Norm::*;
        match self {
            Variant::Plain => vec![(sh(Signed, false), Plus(0))],
            Variant::Nz => vec![(sh(Signed, false), Plus(0)), (sh(NonzeroSigned, false), Plus(1))],
            Variant::NzInner => vec![(sh(NonzeroSigned, false), Plus(0)), (sh(Signed, false), Plus(1))],
            Variant::Nn => vec![(sh(Nonneg, false), Plus(0)), (sh(Nonneg, false), Plus(1))],
            Variant::NnSigned => vec![(sh(Signed, false), Plus(0)), (sh(Nonneg, false), Plus(1))],
            Variant::Cond => vec![
                (sh(Signed, false), Plus(0)),
                (sh(NonzeroSigned, false), Plus(1)),
                (sh(NonzeroSigned, true), Plus(2)),
            ],
            Variant::CondInner => vec![
                (sh(NonzeroSigned, false), Plus(0)),
                (sh(NonzeroSigned, false), Plus(1)),
                (sh(Signed, true), Plus(2)),
            ],
            Variant::Far => vec![(sh(Signed, false), Plus(0)), (sh(Nonneg, false), Times(10))],
        }
    }

    fn min_s(self) -> usize {
        // s = 0 would put the zero vector in both FAR shells
        (self == Variant::Far) as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    Plus(usize),
    Times(usize),
}

impl Norm {
    pub fn of(self, s: usize) -> usize {
        match self {
            Norm::Plus(j) => s + j,
            Norm::Times(m) => s * m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SphereParams {
    pub d: usize,
    pub k: usize,
    pub s: usize,
    pub variant: Variant,
}

/// The `(d, k)` region searched by [`best_sphere`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub d_max: usize,
    /// `k` runs up to `K0 + k_extra`, where `K0` is the least `k` with
    /// `base^k > n` (longer vectors are truncated by the window).
    pub k_extra: usize,
}

impl SearchBox {
    /// Grows with `log10(n)^2 / 10`; the optimal `d` stays far below this
    /// in every case we have measured.
    pub fn for_n(n: &BigUint) -> SearchBox {
        let e = n.to_string().len() as f64;
        let d_max = ((e * e / 10.0).ceil() as usize).clamp(8, 64);
        SearchBox { d_max, k_extra: 2 }
    }
}

/// Integer window `[lo, hi]` that the embedded values must fall in.
pub fn window(embed: Embed, n: &BigUint) -> (BigInt, BigInt) {
    let n = BigInt::from(n.clone());
    match embed {
        Embed::Balanced => {
            let h: BigInt = (&n - 1) / 2;
            (-h.clone(), h)
        }
        Embed::Standard => (BigInt::from(1), n),
    }
}

/// Shift taking the window into `[1, n]`.
pub fn offset(embed: Embed, n: u64) -> i128 {
    match embed {
        Embed::Balanced => (n / 2) as i128 + 1,
        Embed::Standard => 0,
    }
}

fn k_limit(embed: Embed, d: usize, n: &BigUint, extra: usize) -> usize {
    let b = BigUint::from(embed.base(d as i64) as u64);
    let mut k0 = 1;
    let mut p = b.clone();
    while p <= *n {
        p *= &b;
        k0 += 1;
    }
    k0 + extra
}

/// Sizes of the variant for every `s` (index `s`), at fixed `d` and `k`.
fn sizes_for<C: Cnt + From<u8>>(
    tables: &HashMap<ShellKind, Table<C>>,
    variant: Variant,
    k: usize,
    d: usize,
    n: &BigUint,
) -> Vec<BigUint> {
    let (lo, hi) = window(variant.embed(), n);
    let mut within: HashMap<ShellKind, Vec<C>> = HashMap::new();
    for (kind, _) in variant.parts() {
        within.entry(kind).or_insert_with(|| tables[&kind].count_between(k, kind.embed, &lo, &hi));
    }
    let top = k * d * d;
    (0..=top)
        .map(|s| {
            if s < variant.min_s() {
                return BigUint::zero();
            }
            let mut acc = C::zero();
            for (kind, norm) in variant.parts() {
                let t = norm.of(s);
                if t <= top {
                    acc += &within[&kind][t];
                }
            }
            acc.big()
        })
        .collect()
}

fn best_for_d<C: Cnt + From<u8>>(variant: Variant, d: usize, kmax: usize, n: &BigUint) -> (BigUint, usize, usize) {
    let mut tables = HashMap::new();
    for (kind, _) in variant.parts() {
        tables.entry(kind).or_insert_with(|| Table::<C>::build(d as i64, kmax, kind));
    }
    let mut best = (BigUint::zero(), 0, 0);
    for k in 1..=kmax {
        for (s, v) in sizes_for(&tables, variant, k, d, n).into_iter().enumerate() {
            if v > best.0 {
                best = (v, k, s);
            }
        }
    }
    best
}

/// All sizes at one `(d, k)`: entry `s` is the size of the variant at `s`.
pub fn sizes_all_s(variant: Variant, d: usize, k: usize, n: &BigUint) -> Vec<BigCount> {
    fn go<C: Cnt + From<u8>>(variant: Variant, d: usize, k: usize, n: &BigUint) -> Vec<BigUint> {
        let mut tables = HashMap::new();
        for (kind, _) in variant.parts() {
            tables.entry(kind).or_insert_with(|| Table::<C>::build(d as i64, k, kind));
        }
        sizes_for(&tables, variant, k, d, n)
    }
    if use_u128(d as i64, k) {
        go::<u128>(variant, d, k, n)
    } else {
        go::<BigUint>(variant, d, k, n)
    }
}

/// Size of one concrete instance inside `[1, n]`.
pub fn variant_size(p: &SphereParams, n: &BigUint) -> BigCount {
    sizes_all_s(p.variant, p.d, p.k, n).get(p.s).cloned().unwrap_or_default()
}

/// Best `(d, k, s)` for the variant inside `[1, n]`; ties go to the
/// smallest `d`, then `k`, then `s`.
pub fn best_sphere(n: &BigUint, variant: Variant, search: SearchBox) -> Result<(SphereParams, BigCount), SphereError> {
    if n.is_zero() {
        return Err(SphereError::Params("n must be positive".into()));
    }
    let per_d: Vec<(BigUint, usize, usize, usize)> = (1..=search.d_max)
        .into_par_iter()
        .map(|d| {
            let kmax = k_limit(variant.embed(), d, n, search.k_extra);
            let (v, k, s) = if use_u128(d as i64, kmax) {
                best_for_d::<u128>(variant, d, kmax, n)
            } else {
                best_for_d::<BigUint>(variant, d, kmax, n)
            };
            (v, d, k, s)
        })
        .collect();
    let mut best = per_d[0].clone();
    for c in per_d.into_iter().skip(1) {
        if c.0 > best.0 {
            best = c;
        }
    }
    let (size, d, k, s) = best;
    Ok((SphereParams { d, k, s, variant }, size))
}
