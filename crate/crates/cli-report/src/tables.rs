use crate::compare::{compare_row, crossovers, sphere_box, CompareOptions};
use crate::{c_estimate, sci, ten_pow, Budget, ReportError};
use apcore::known::known_table;
use apcore::SzTable;
use bounds::{base_family, density_upper, roth_min_n, splitting_table, thirds_search, FamilyOptions, RothQuery};
use digit_constructions::block_size;
use exact_search::{compute_table, gather, NumTable, Pruning};
use num_bigint::BigUint;
use serde::Serialize;
use sphere::{best_sphere, Variant};

pub const TABLE_IDS: std::ops::RangeInclusive<u32> = 1..=16;

/// One rendered table. Cells the budget cannot afford read `skipped`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: u32,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub skipped: usize,
}

impl Report {
    fn new(id: u32, title: &str, columns: &[&str]) -> Self {
        Report {
            id,
            title: title.to_string(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            skipped: 0,
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.skipped += row.iter().filter(|c| *c == "skipped").count();
        self.rows.push(row);
    }

    /// Left-aligned columns separated by two spaces.
    pub fn to_text(&self) -> String {
        let mut width: Vec<usize> = self.columns.iter().map(String::len).collect();
        for r in &self.rows {
            for (i, c) in r.iter().enumerate() {
                width[i] = width[i].max(c.len());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{c:<w$}", w = width[i])).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = format!("Table {}: {}\n", self.id, self.title);
        s += &line(&self.columns);
        s += &(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  ") + "\n");
        for r in &self.rows {
            s += &line(r);
        }
        for n in &self.notes {
            s += &format!("note: {n}\n");
        }
        s
    }
}

/// Exact `sz(1..=upto)` by search, or `None` past the budget.
pub fn exact_table(budget: &Budget, upto: usize) -> Result<Option<SzTable>, ReportError> {
    if upto > budget.exact_max {
        return Ok(None);
    }
    let num = match &budget.cache_dir {
        Some(dir) => NumTable::cached(dir, budget.gather_l, budget.gather_m, Default::default())?,
        None => gather(budget.gather_l, budget.gather_m)?,
    };
    Ok(Some(compute_table(upto, &num, Pruning::default())?.0))
}

fn sz_rows(id: u32, lo: u64, hi: u64, budget: &Budget) -> Result<Report, ReportError> {
    let title = format!("sz(n) for n = {lo}..{hi} by backtracking");
    let mut r = Report::new(id, &title, &["n", "sz", "witness"]);
    let reach = (hi as usize).min(budget.exact_max);
    let t = if reach >= lo as usize { exact_table(budget, reach)? } else { None };
    for n in lo..=hi {
        match t.as_ref().and_then(|t| t.get(n)) {
            Some(e) => {
                let w = e.witness.as_ref().map(|w| format!("{:?}", w.elements())).unwrap_or_default();
                r.push(vec![n.to_string(), e.lower.to_string(), w]);
            }
            None => r.push(vec![n.to_string(), "skipped".into(), String::new()]),
        }
    }
    if reach < hi as usize {
        r.notes.push(format!("tier {} searches up to n = {}", budget.tier.name(), budget.exact_max));
    }
    Ok(r)
}

fn brackets(budget: &Budget) -> Result<Report, ReportError> {
    let mut r = Report::new(3, "Lower and upper bounds on sz(n) for n = 187..250", &["n", "low", "high", "split", "thirds"]);
    let known = known_table();
    let exact = SzTable::from_exact(&apcore::known::SZ_EXACT, "exact");
    let split = splitting_table(&exact, 250);
    let opts = FamilyOptions::default();
    for n in 187..=250u64 {
        let thirds = if budget.thirds {
            let fam = base_family(n, &known, &opts)?;
            thirds_search(n, &fam, 20)?.map_or("-".to_string(), |s| s.len().to_string())
        } else {
            "skipped".to_string()
        };
        r.push(vec![
            n.to_string(),
            known.lower(n).unwrap().to_string(),
            known.upper(n).unwrap().to_string(),
            split[n as usize].to_string(),
            thirds,
        ]);
    }
    r.notes.push("low/high are the published brackets; split is the splitting recurrence over exact values 1..186".into());
    Ok(r)
}

fn block_c() -> Result<Report, ReportError> {
    let mut r = Report::new(4, "The value of c for the block construction", &["n", "size", "r", "c"]);
    for e in (100..=300).step_by(20) {
        let n = ten_pow(e);
        let (size, rr) = block_size(&n);
        r.push(vec![format!("10^{e}"), sci(&size), rr.to_string(), format!("{:.6}", c_estimate(&n, &size)?)]);
    }
    Ok(r)
}

fn sphere_params(budget: &Budget) -> Result<Report, ReportError> {
    let mut r = Report::new(5, "Sphere parameters d, k, s maximizing the set size", &["n", "size", "d", "k", "s"]);
    let exps: Vec<u32> = (10..=20).chain((25..=65).step_by(5)).collect();
    for e in exps {
        if e as usize + 1 > budget.sphere_digits {
            r.push(vec![format!("10^{e}"), "skipped".into(), String::new(), String::new(), String::new()]);
            continue;
        }
        let n = ten_pow(e);
        let (bx, cap) = sphere_box(&n, budget.sphere_full_digits, budget.sphere_d_cap);
        let (p, size) = best_sphere(&n, Variant::Plain, bx)?;
        let mut size_cell = sci(&size);
        if let Some(c) = cap {
            size_cell += &format!(" (d<={c})");
        }
        r.push(vec![format!("10^{e}"), size_cell, p.d.to_string(), p.k.to_string(), p.s.to_string()]);
    }
    Ok(r)
}

fn sphere_c(budget: &Budget) -> Result<Report, ReportError> {
    let mut r = Report::new(6, "The value of c for the sphere construction (non-zero inner shell)", &["n", "size", "c"]);
    for e in 1..=65u32 {
        if e as usize + 1 > budget.sphere_digits {
            r.push(vec![format!("10^{e}"), "skipped".into(), String::new()]);
            continue;
        }
        let n = ten_pow(e);
        let (bx, cap) = sphere_box(&n, budget.sphere_full_digits, budget.sphere_d_cap);
        let (_, size) = best_sphere(&n, Variant::NzInner, bx)?;
        let mut size_cell = sci(&size);
        if let Some(c) = cap {
            size_cell += &format!(" (d<={c})");
        }
        r.push(vec![format!("10^{e}"), size_cell, format!("{:.6}", c_estimate(&n, &size)?)]);
    }
    Ok(r)
}

fn sphere_variants() -> Result<Report, ReportError> {
    let mut r = Report::new(7, "Sphere variants", &["n", "NZ", "PLAIN", "NN", "NZ-INNER", "best of NZ/PLAIN/NN"]);
    for e in 1..=16u32 {
        let n = ten_pow(e);
        let bx = sphere::SearchBox::for_n(&n);
        let mut cells = vec![format!("10^{e}")];
        let mut best = (BigUint::default(), "");
        for v in [Variant::Nz, Variant::Plain, Variant::Nn, Variant::NzInner] {
            let (_, size) = best_sphere(&n, v, bx)?;
            cells.push(sci(&size));
            if v != Variant::NzInner && size > best.0 {
                best = (size, v.name());
            }
        }
        cells.push(best.1.to_uppercase());
        r.push(cells);
    }
    r.notes.push("NZ is the union as literally stated and is not 3-free in general; NZ-INNER is the provably 3-free union".into());
    Ok(r)
}

const COMPARE_TITLES: [&str; 6] = [
    "B3 vs B5 vs KD vs BL vs SP: the first crossovers",
    "B3 beats KD",
    "BL overcomes B5",
    "BL gaining on KD",
    "BL beats KD",
    "The order settles",
];

fn comparison(id: u32, budget: &Budget) -> Result<Report, ReportError> {
    let k = id - 8 ;
    let (lo, hi) = (k * 20 + 1, (k * 20 + 20).min(119));
    let mut r = Report::new(id, COMPARE_TITLES[k as usize], &["n", "B3", "B5", "KD", "BL", "SP", "ORDER"]);
    let opts = CompareOptions::from_budget(budget);
    // one row before the range so a crossover at its first row shows
    let first = lo.saturating_sub(1).max(1);
    let rows: Vec<_> = (first..=hi).map(|e| compare_row(&ten_pow(e), &opts)).collect();
    let cross = crossovers(&rows);
    for (i, row) in rows.iter().enumerate() {
        if first < lo && i == 0 {
            continue;
        }
        for c in cross.iter().filter(|c| c.row == i) {
            let mut blank = vec![String::new(); 6];
            blank.push(c.label());
            r.rows.push(blank);
        }
        let mut cells = row.cells();
        if row.sizes[4].is_none() {
            cells[5] = "skipped".into();
            r.skipped += 1;
        } else if let Some(c) = row.sphere_cap {
            cells[5] += &format!(" (d<={c})");
        }
        r.rows.push(cells);
    }
    r.notes.push("SP is the non-zero inner sphere union; a (d<=c) mark means the sphere search was capped, so SP is a lower bound".into());
    Ok(r)
}

/// `(M, eps)` inputs for the Roth tables, with `m = 50`, `c = 0.26733`.
pub const ROTH_GRID: [&[(u64, &str)]; 3] = [
    &[
        (120, "0.001429"), (121, "0.002144"), (122, "0.002859"), (123, "0.003573"), (125, "0.004288"),
        (126, "0.005003"), (127, "0.005717"), (128, "0.006432"), (129, "0.007147"), (130, "0.007861"),
        (132, "0.008576"), (133, "0.009290"), (134, "0.010005"), (136, "0.010720"), (137, "0.011435"),
        (138, "0.012149"), (140, "0.012864"), (142, "0.013578"), (143, "0.014293"), (145, "0.015008"),
        (146, "0.015722"), (148, "0.016437"), (150, "0.017152"), (152, "0.017866"), (154, "0.018581"),
    ],
    &[
        (156, "0.019296"), (158, "0.020010"), (160, "0.020725"), (163, "0.021440"), (165, "0.022154"),
        (167, "0.022869"), (170, "0.023584"), (173, "0.024298"), (176, "0.025013"), (179, "0.025728"),
        (182, "0.026442"), (185, "0.027157"), (189, "0.027872"), (192, "0.028586"), (196, "0.029301"),
        (200, "0.030015"), (205, "0.030730"), (210, "0.031445"), (215, "0.032159"), (220, "0.032874"),
        (226, "0.033589"),
    ],
    &[
        (233, "0.034303"), (240, "0.035018"), (247, "0.035733"), (256, "0.036447"), (265, "0.037162"),
        (275, "0.037877"), (287, "0.038591"), (300, "0.039306"), (316, "0.040021"), (334, "0.040735"),
        (355, "0.041450"), (381, "0.042165"), (414, "0.042879"), (457, "0.043594"), (516, "0.044309"),
        (607, "0.045023"), (774, "0.045738"), (999, "0.046453"),
    ],
];

#[derive(Clone, Debug, Serialize)]
pub struct RothRow {
    pub n: u64,
    pub big_m: u64,
    pub epsilon: String,
    pub roth: u64,
    pub elem: u64,
}

/// Roth bound and density estimate for each grid point of `ROTH_GRID[part]`.
pub fn roth_rows(part: usize) -> Result<Vec<RothRow>, ReportError> {
    let exact = SzTable::from_exact(&apcore::known::SZ_EXACT, "exact");
    ROTH_GRID[part]
        .iter()
        .map(|&(big_m, eps)| {
            let b = roth_min_n(&RothQuery::new(50, "0.26733", big_m, eps)?)?;
            let elem = density_upper(&exact, b.n, 101).expect("sz(101) is exact");
            Ok(RothRow { n: b.n, big_m, epsilon: eps.to_string(), roth: b.bound, elem })
        })
        .collect()
}

fn roth(id: u32) -> Result<Report, ReportError> {
    let ranges = ["N < 300,000", "300,000 < N < 1,000,000", "N > 1,000,000"];
    let part = (id - 14) as usize;
    let title = format!("Upper bounds for sz(N): Roth vs density of [101], {}", ranges[part]);
    let mut r = Report::new(id, &title, &["N", "M", "eps", "Roth", "Elem", "Improvement"]);
    for row in roth_rows(part)? {
        let gain = 100.0 * (row.elem as f64 - row.roth as f64) / row.elem as f64;
        r.push(vec![
            row.n.to_string(),
            row.big_m.to_string(),
            row.epsilon,
            row.roth.to_string(),
            row.elem.to_string(),
            format!("{gain:.1}%"),
        ]);
    }
    r.notes.push("m = 50, c = 0.26733; Elem = round(N * sz(101) / 101)".into());
    Ok(r)
}

/// Builds table `id` within `budget`.
pub fn table(id: u32, budget: &Budget) -> Result<Report, ReportError> {
    match id {
        1 => sz_rows(1, 1, 100, budget),
        2 => sz_rows(2, 101, 186, budget),
        3 => brackets(budget),
        4 => block_c(),
        5 => sphere_params(budget),
        6 => sphere_c(budget),
        7 => sphere_variants(),
        8..=13 => comparison(id, budget),
        14..=16 => roth(id),
        _ => Err(ReportError::NoTable(id)),
    }
}
