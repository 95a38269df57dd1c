use crate::BoundsError;
use apcore::{SearchState, SzTable, MAX_N};
use serde::Serialize;
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }
}

/// `sum of x_j over vars  sense  rhs`; variables are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub name: String,
    pub vars: Vec<usize>,
    pub sense: Sense,
    pub rhs: i64,
}

/// 0/1 program: maximize `x_1 + ... + x_n` subject to `constraints`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LpModel {
    pub n: usize,
    pub t: Option<u64>,
    pub prefix: Option<Vec<bool>>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOptions {
    /// Progressions of length `window_min..=window_max` get `<= sz(i)` rows.
    pub window_min: usize,
    pub window_max: usize,
    pub prefix_len: usize,
    /// Fixes `x_1..x_L`; `None` leaves the prefix free.
    pub prefix: Option<Vec<bool>>,
}

impl Default for LpOptions {
    fn default() -> Self {
        LpOptions { window_min: 20, window_max: 186, prefix_len: 30, prefix: None }
    }
}

fn ap(a: usize, d: usize, len: usize) -> Vec<usize> {
    (0..len).map(|j| a + j * d).collect()
}

/// Builds the model for `[n]`, optionally with target `t` and a fixed prefix.
pub fn lp_export(n: usize, t: Option<u64>, table: &SzTable, opts: &LpOptions) -> Result<LpModel, BoundsError> {
    if n == 0 || n > MAX_N {
        return Err(BoundsError::Parameters(format!("n = {n} outside 1..={MAX_N}")));
    }
    if let Some(t) = t {
        if t > n as u64 {
            return Err(BoundsError::Parameters(format!("target {t} exceeds n = {n}")));
        }
    }
    let mut rows = Vec::new();
    for d in 1..n {
        for a in 1..=n.saturating_sub(2 * d) {
            rows.push(Constraint {
                name: format!("ap3_{a}_{d}"),
                vars: ap(a, d, 3),
                sense: Sense::Le,
                rhs: 2,
            });
        }
    }
    for i in opts.window_min.max(3)..=opts.window_max.min(n) {
        let s = table.exact(i as u64).ok_or(BoundsError::TableGap(i as u64))? as i64;
        for d in 1..=(n - 1) / (i - 1) {
            for a in 1..=n - (i - 1) * d {
                let vars = ap(a, d, i);
                if let Some(t) = t {
                    let rest = t as i64 - s;
                    if rest > 0 {
                        let comp = (1..=n).filter(|j| !vars.contains(j)).collect();
                        rows.push(Constraint {
                            name: format!("low{i}_{a}_{d}"),
                            vars: comp,
                            sense: Sense::Ge,
                            rhs: rest,
                        });
                    }
                }
                rows.push(Constraint { name: format!("ap{i}_{a}_{d}"), vars, sense: Sense::Le, rhs: s });
            }
        }
    }
    if let Some(t) = t {
        rows.push(Constraint { name: "target".into(), vars: (1..=n).collect(), sense: Sense::Eq, rhs: t as i64 });
    }
    if let Some(p) = &opts.prefix {
        if p.len() > n {
            return Err(BoundsError::Parameters("prefix longer than n".into()));
        }
        for (i, &b) in p.iter().enumerate() {
            rows.push(Constraint {
                name: format!("fix{}", i + 1),
                vars: vec![i + 1],
                sense: Sense::Eq,
                rhs: b as i64,
            });
        }
        if let Some(t) = t {
            let ones = p.iter().filter(|&&b| b).count() as i64;
            if p.len() < n {
                rows.push(Constraint {
                    name: "suffix".into(),
                    vars: (p.len() + 1..=n).collect(),
                    sense: Sense::Ge,
                    rhs: t as i64 - ones,
                });
            }
        }
    }
    Ok(LpModel { n, t, prefix: opts.prefix.clone(), constraints: rows })
}

/// Whether `sigma` is 3-free, starts with 1, and leaves every prefix
/// `tau_i` able to reach `t`: `#tau_i + sz(n - i) >= t`.
pub fn good_prefix(sigma: &[bool], n: usize, t: u64, table: &SzTable) -> bool {
    if sigma.first() != Some(&true) || sigma.len() > n || n > MAX_N {
        return false;
    }
    let Ok(mut st) = SearchState::new(n) else { return false };
    for (i, &b) in sigma.iter().enumerate() {
        if b && !st.can_take() {
            return false;
        }
        st = st.extend_unchecked(b);
        let room = table.upper((n - i - 1) as u64).unwrap_or((n - i - 1) as u64);
        if st.ones() as u64 + room < t {
            return false;
        }
    }
    true
}

/// Every GOOD prefix of length `len`, in lexicographic order (0 before 1).
pub fn good_prefixes(n: usize, t: u64, len: usize, table: &SzTable) -> Result<Vec<Vec<bool>>, BoundsError> {
    if len == 0 || len > n || n > MAX_N {
        return Err(BoundsError::Parameters(format!("prefix length {len} invalid for n = {n}")));
    }
    fn walk(st: SearchState, bits: &mut Vec<bool>, len: usize, t: u64, table: &SzTable, out: &mut Vec<Vec<bool>>) {
        let n = st.n();
        let i = st.len();
        let room = table.upper((n - i) as u64).unwrap_or((n - i) as u64);
        if st.ones() as u64 + room < t {
            return;
        }
        if i == len {
            out.push(bits.clone());
            return;
        }
        for b in [false, true] {
            if b && !st.can_take() || i == 0 && !b {
                continue;
            }
            bits.push(b);
            walk(st.extend_unchecked(b), bits, len, t, table, out);
            bits.pop();
        }
    }
    let mut out = Vec::new();
    walk(SearchState::new(n)?, &mut Vec::new(), len, t, table, &mut out);
    Ok(out)
}

/// One model per GOOD prefix of length `opts.prefix_len`.
pub fn lp_export_all(n: usize, t: u64, table: &SzTable, opts: &LpOptions) -> Result<Vec<LpModel>, BoundsError> {
    good_prefixes(n, t, opts.prefix_len.min(n), table)?
        .into_iter()
        .map(|p| lp_export(n, Some(t), table, &LpOptions { prefix: Some(p), ..opts.clone() }))
        .collect()
}

fn sum(vars: &[usize]) -> String {
    let terms: Vec<String> = vars.iter().map(|v| format!("x{v}")).collect();
    terms.join(" + ")
}

impl LpModel {
    /// The model in LP file format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match (self.t, &self.prefix) {
            (Some(t), Some(p)) => {
                let bits: String = p.iter().map(|&b| if b { '1' } else { '0' }).collect();
                writeln!(s, "\\ 3-free subsets of [{}], target {t}, prefix {bits}", self.n).unwrap();
            }
            (Some(t), None) => writeln!(s, "\\ 3-free subsets of [{}], target {t}", self.n).unwrap(),
            _ => writeln!(s, "\\ 3-free subsets of [{}]", self.n).unwrap(),
        }
        writeln!(s, "Maximize").unwrap();
        writeln!(s, " obj: {}", sum(&(1..=self.n).collect::<Vec<_>>())).unwrap();
        writeln!(s, "Subject To").unwrap();
        for c in &self.constraints {
            writeln!(s, " {}: {} {} {}", c.name, sum(&c.vars), c.sense.symbol(), c.rhs).unwrap();
        }
        writeln!(s, "Bounds").unwrap();
        for v in 1..=self.n {
            writeln!(s, " 0 <= x{v} <= 1").unwrap();
        }
        writeln!(s, "Binary").unwrap();
        let vars: Vec<String> = (1..=self.n).map(|v| format!("x{v}")).collect();
        writeln!(s, " {}", vars.join(" ")).unwrap();
        writeln!(s, "End").unwrap();
        s
    }
}
