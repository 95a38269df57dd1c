use crate::{label_n, sci, Budget};
use digit_constructions::{b3_size, b5_size, block_size, kd_size};
use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use sphere::{best_sphere, SearchBox, SphereParams, Variant};

/// The methods compared, in column order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Method {
    B3,
    B5,
    KD,
    BL,
    SP,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::B3, Method::B5, Method::KD, Method::BL, Method::SP];

    pub fn name(self) -> &'static str {
        match self {
            Method::B3 => "B3",
            Method::B5 => "B5",
            Method::KD => "KD",
            Method::BL => "BL",
            Method::SP => "SP",
        }
    }
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn decimals<S: Serializer>(v: &[Option<BigUint>; 5], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<Option<String>> = v.iter().map(|x| x.as_ref().map(BigUint::to_string)).collect();
    strs.serialize(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow {
    #[serde(serialize_with = "decimal")]
    pub n: BigUint,
    /// Indexed like [`Method::ALL`]; `None` when the cell was not run.
    #[serde(serialize_with = "decimals")]
    pub sizes: [Option<BigUint>; 5],
    pub sphere: Option<SphereParams>,
    /// Set when the sphere search was limited to `d <= cap`.
    pub sphere_cap: Option<usize>,
    pub order: String,
}

/// `a > b` flipping to true between two consecutive rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossover {
    pub winner: Method,
    pub loser: Method,
    /// Index of the first row where `winner > loser`.
    pub row: usize,
}

impl Crossover {
    pub fn label(&self) -> String {
        format!("{}>{} !!!", self.winner.name(), self.loser.name())
    }
}

/// Ranks by exact size, largest first; equal sizes are joined with `=`
/// in column order. Methods without a size are left out.
pub fn order_string(sizes: &[Option<BigUint>; 5]) -> String {
    let mut known: Vec<(Method, &BigUint)> =
        Method::ALL.iter().zip(sizes).filter_map(|(&m, s)| s.as_ref().map(|s| (m, s))).collect();
    known.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(&b.0)));
    let mut out = String::new();
    for (i, (m, s)) in known.iter().enumerate() {
        if i > 0 {
            out.push(if known[i - 1].1 == *s { '=' } else { '>' });
        }
        out.push_str(m.name());
    }
    out
}

/// Which columns to fill and how far the sphere search may go.
#[derive(Clone, Debug)]
pub struct CompareOptions {
    /// Sphere cells only for `n` with at most this many digits.
    pub sphere_digits: usize,
    pub sphere_full_digits: usize,
    pub sphere_d_cap: usize,
    pub variant: Variant,
}

impl CompareOptions {
    pub fn from_budget(b: &Budget) -> Self {
        CompareOptions {
            sphere_digits: usize::MAX,
            sphere_full_digits: b.sphere_full_digits,
            sphere_d_cap: b.sphere_d_cap,
            variant: Variant::NzInner,
        }
    }
}

/// The sphere search region used by reports at `n`, and the cap if one applies.
pub fn sphere_box(n: &BigUint, full_digits: usize, d_cap: usize) -> (SearchBox, Option<usize>) {
    let mut b = SearchBox::for_n(n);
    if n.to_string().len() > full_digits && b.d_max > d_cap {
        b.d_max = d_cap;
        return (b, Some(d_cap));
    }
    (b, None)
}

pub fn compare_row(n: &BigUint, opts: &CompareOptions) -> ComparisonRow {
    let mut sizes: [Option<BigUint>; 5] = Default::default();
    sizes[0] = Some(b3_size(n));
    sizes[1] = Some(b5_size(n).0);
    sizes[2] = Some(kd_size(n).size);
    sizes[3] = Some(block_size(n).0);
    let (mut sphere, mut sphere_cap) = (None, None);
    if n.to_string().len() <= opts.sphere_digits {
        let (bx, cap) = sphere_box(n, opts.sphere_full_digits, opts.sphere_d_cap);
        // a budget failure leaves the cell empty rather than guessing
        if let Ok((p, size)) = best_sphere(n, opts.variant, bx) {
            sizes[4] = Some(size);
            sphere = Some(p);
            sphere_cap = cap;
        }
    }
    let order = order_string(&sizes);
    ComparisonRow { n: n.clone(), sizes, sphere, sphere_cap, order }
}

pub fn compare(ns: &[BigUint], opts: &CompareOptions) -> Vec<ComparisonRow> {
    ns.iter().map(|n| compare_row(n, opts)).collect()
}

/// Every pair whose order flips to `winner > loser` from one row to the
/// next, comparing only rows where both sizes are known.
pub fn crossovers(rows: &[ComparisonRow]) -> Vec<Crossover> {
    let mut out = Vec::new();
    for (wi, &w) in Method::ALL.iter().enumerate() {
        for (li, &l) in Method::ALL.iter().enumerate() {
            if wi == li {
                continue;
            }
            let mut prev: Option<bool> = None;
            for (r, row) in rows.iter().enumerate() {
                let (Some(a), Some(b)) = (&row.sizes[wi], &row.sizes[li]) else { continue };
                let ahead = a > b;
                if ahead && prev == Some(false) {
                    out.push(Crossover { winner: w, loser: l, row: r });
                }
                prev = Some(ahead);
            }
        }
    }
    out.sort_by_key(|c| (c.row, c.winner, c.loser));
    out
}

impl ComparisonRow {
    pub fn cells(&self) -> Vec<String> {
        let mut v = vec![label_n(&self.n)];
        for s in &self.sizes {
            v.push(s.as_ref().map_or_else(|| "-".to_string(), sci));
        }
        v.push(self.order.clone());
        v
    }
}
