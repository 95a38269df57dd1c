use anyhow::{bail, Context, Result};
use apcore::{is_three_free, ApSet};
use clap::{Args, Parser, Subcommand};
use cli_report::*;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;
use std::path::PathBuf;

/// Toolkit for large 3-AP-free subsets of {1..n}.
#[derive(Parser)]
#[command(name = "apfree", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Plain key = value file with budget tiers.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// ci, desk or overnight; overrides the config file.
    #[arg(long, global = true)]
    tier: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact sz(n) by backtracking.
    Sz {
        #[arg(long)]
        n: usize,
        /// Report every value 1..=n.
        #[arg(long)]
        all: bool,
    },
    /// Digit and block constructions (b3, b5, kd, bl).
    Construct {
        #[arg(long)]
        method: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        materialize: bool,
        #[arg(long)]
        force: bool,
    },
    /// Best sphere construction for one variant.
    Sphere {
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "nz-inner")]
        variant: String,
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        materialize: bool,
        #[arg(long)]
        force: bool,
    },
    /// Compare all methods at each n, with crossovers.
    Compare {
        #[arg(long, num_args = 1.., required = true)]
        n: Vec<String>,
    },
    /// The exponent c with size = n^(1 - c/sqrt(log2 n)).
    C {
        #[arg(long)]
        n: String,
        #[arg(long)]
        size: String,
    },
    /// Upper and lower bounds: splitting, Roth, thirds, LP export, a(m).
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Applications: diagonal queens and induced matchings.
    #[command(subcommand)]
    Apps(AppsCmd),
    /// Render one of the report tables 1..16.
    Table {
        #[arg(long)]
        id: u32,
    },
    /// Check a set file (one element per line) against [n].
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Splitting upper bound from the exact values 1..186.
    Split {
        #[arg(long)]
        n: u64,
    },
    /// Roth-type bound: least N and sz(N) <= bound.
    Roth {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        c: String,
        #[arg(long = "M")]
        big_m: u64,
        #[arg(long)]
        eps: String,
    },
    /// Thirds-method lower bound.
    Thirds(ThirdsArgs),
    /// Export 0/1 programs, one per admissible prefix.
    Lp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 30)]
        prefix_len: usize,
        #[arg(long, default_value_t = 20)]
        window_min: usize,
        #[arg(long, default_value_t = 186)]
        window_max: usize,
    },
    /// a(m), the least n with sz(n) >= m.
    AOf {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Args)]
struct ThirdsArgs {
    #[arg(long)]
    n: u64,
    /// Directory of base sets (one file per set); enumerated when absent.
    #[arg(long)]
    bases: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    slack: u64,
    #[arg(long)]
    spread: Option<u64>,
    #[arg(long, default_value_t = 66)]
    m_max: u64,
    #[arg(long, default_value_t = 20)]
    middle_budget: usize,
}

#[derive(Subcommand)]
enum AppsCmd {
    /// Fewest diagonal queens covering an n x n board.
    Queens {
        #[arg(long)]
        n: u64,
    },
    /// Union-of-induced-matchings graph from a 3-free set in [k].
    Matching {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: u64,
    },
}

fn out(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
    }
}

fn small(n: &BigUint) -> Result<u64> {
    n.to_u64().context("n too large to materialize")
}

fn budget(cli: &Cli) -> Result<Budget> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => match std::fs::read_to_string("apfree.conf") {
            Ok(text) => Config::parse(&text)?,
            Err(_) => Config::parse(DEFAULT_CONFIG)?,
        },
    };
    let tier = match &cli.tier {
        Some(t) => Tier::parse(t).with_context(|| format!("unknown tier {t:?}"))?,
        None => cfg.tier()?,
    };
    Ok(cfg.budget(tier)?)
}

fn run(cli: &Cli) -> Result<bool> {
    let json = cli.json;
    match &cli.cmd {
        Cmd::Sz { n, all } => {
            let b = budget(cli)?;
            let t = exact_table(&Budget { exact_max: (*n).max(b.exact_max), ..b }, *n)?.context("no table")?;
            let rows: Vec<_> = if *all { t.entries().to_vec() } else { vec![t.get(*n as u64).unwrap().clone()] };
            let text = rows
                .iter()
                .map(|e| format!("sz({}) = {}  {:?}\n", e.n, e.lower, e.witness.as_ref().map(|w| w.elements().to_vec()).unwrap_or_default()))
                .collect();
            out(json, json!(rows), text);
        }
        Cmd::Construct { method, n, materialize, force } => {
            let m = digit_constructions::Method::parse(method).with_context(|| format!("unknown method {method:?}"))?;
            let r = digit_constructions::construct(m, &parse_n(n)?, *materialize, *force)?;
            if let Some(s) = &r.set {
                if !is_three_free(s) {
                    bail!("materialized set is not 3-free");
                }
            }
            out(json, json!(r), format!("{} at n = {}: size {} ({:?})", m.name(), r.n, r.size, r.params));
        }
        Cmd::Sphere { n, variant, d_max, materialize, force } => {
            let v = sphere::Variant::parse(variant).with_context(|| format!("unknown variant {variant:?}"))?;
            let n = parse_n(n)?;
            let mut bx = sphere::SearchBox::for_n(&n);
            if let Some(d) = d_max {
                bx.d_max = *d;
            }
            let (p, size) = sphere::best_sphere(&n, v, bx)?;
            let mut ok = true;
            let mut set = None;
            if *materialize {
                let s = sphere::materialize_sphere(&p, small(&n)?, *force)?;
                ok = is_three_free(&s) && BigUint::from(s.len()) == size;
                set = Some(s);
            }
            let text = format!("{} at n = {n}: size {size} (d = {}, k = {}, s = {}){}", v.name(), p.d, p.k, p.s, if ok { "" } else { "  MATERIALIZED SET FAILS" });
            out(json, json!({"n": n.to_string(), "size": size.to_string(), "params": p, "valid": ok, "set": set}), text);
            return Ok(ok);
        }
        Cmd::Compare { n } => {
            let b = budget(cli)?;
            let ns = n.iter().map(|s| parse_n(s)).collect::<Result<Vec<_>, _>>()?;
            let rows = compare(&ns, &CompareOptions::from_budget(&b));
            let cross = crossovers(&rows);
            let mut text = String::new();
            for (i, r) in rows.iter().enumerate() {
                for c in cross.iter().filter(|c| c.row == i) {
                    text += &format!("    {}\n", c.label());
                }
                text += &r.cells().join("  ");
                text.push('\n');
            }
            out(json, json!({"rows": rows, "crossovers": cross}), text);
        }
        Cmd::C { n, size } => {
            let c = c_estimate(&parse_n(n)?, &parse_n(size)?)?;
            out(json, json!({"c": c}), format!("{c:.6}"));
        }
        Cmd::Bounds(b) => return bounds_cmd(b, json),
        Cmd::Apps(a) => match a {
            AppsCmd::Queens { n } => {
                let d = applications::queens_diag(*n, &apcore::known::known_table())?;
                out(json, json!(d), format!("{d:?}"));
            }
            AppsCmd::Matching { set, k } => {
                let text = std::fs::read_to_string(set)?;
                let a = ApSet::parse(&text, *k)?;
                let g = applications::matching_graph(&a, *k)?;
                let v = g.violations();
                out(json, json!({"graph": g, "violations": v}), g.to_text());
                return Ok(v.is_empty());
            }
        },
        Cmd::Table { id } => {
            let r = table(*id, &budget(cli)?)?;
            out(json, json!(r), r.to_text());
        }
        Cmd::Verify { file, n } => {
            let s = ApSet::parse(&std::fs::read_to_string(file)?, *n)?;
            let p = apcore::find_progression(s.elements());
            let text = match p {
                None => format!("3-free, size {}", s.len()),
                Some((a, b, c)) => format!("progression {a}, {b}, {c}"),
            };
            out(json, json!({"size": s.len(), "three_free": p.is_none()}), text);
            return Ok(p.is_none());
        }
    }
    Ok(true)
}

fn bounds_cmd(b: &BoundsCmd, json: bool) -> Result<bool> {
    let exact = apcore::SzTable::from_exact(&apcore::known::SZ_EXACT, "exact");
    let known = apcore::known::known_table();
    match b {
        BoundsCmd::Split { n } => {
            let u = bounds::splitting_upper(&exact, *n);
            out(json, json!({"n": n, "upper": u}), format!("sz({n}) <= {u}"));
        }
        BoundsCmd::Roth { m, c, big_m, eps } => {
            let r = bounds::roth_min_n(&bounds::RothQuery::new(*m, c, *big_m, eps)?)?;
            out(json, json!(r), format!("N = {}, sz(N) <= {}", r.n, r.bound));
        }
        BoundsCmd::Thirds(a) => {
            let family = match &a.bases {
                Some(dir) => {
                    let mut v = Vec::new();
                    let mut paths: Vec<_> = std::fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<Result<_, _>>()?;
                    paths.sort();
                    for p in paths {
                        v.push(ApSet::parse_tight(&std::fs::read_to_string(&p)?).with_context(|| p.display().to_string())?);
                    }
                    v
                }
                None => {
                    let opts = bounds::FamilyOptions { slack: a.slack, spread: a.spread, m_max: a.m_max, ..Default::default() };
                    bounds::base_family(a.n, &known, &opts)?
                }
            };
            let best = bounds::thirds_search(a.n, &family, a.middle_budget)?;
            let text = match &best {
                Some(s) => format!("sz({}) >= {}  {:?}", a.n, s.len(), s.elements()),
                None => "no pair of base sets fits".to_string(),
            };
            out(json, json!({"n": a.n, "family": family.len(), "set": best}), text);
        }
        BoundsCmd::Lp { n, t, out: dir, prefix_len, window_min, window_max } => {
            let opts = bounds::LpOptions { window_min: *window_min, window_max: *window_max, prefix_len: *prefix_len, prefix: None };
            let models = match t {
                Some(t) => bounds::lp_export_all(*n, *t, &known, &opts)?,
                None => vec![bounds::lp_export(*n, None, &known, &opts)?],
            };
            match dir {
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let mut index = String::new();
                    for (i, m) in models.iter().enumerate() {
                        let name = format!("model_{i:05}.lp");
                        std::fs::write(dir.join(&name), m.to_text())?;
                        let prefix: String = m.prefix.iter().flatten().map(|&b| if b { '1' } else { '0' }).collect();
                        index += &format!("{name} {prefix}\n");
                    }
                    std::fs::write(dir.join("index.txt"), &index)?;
                    out(json, json!({"models": models.len(), "dir": dir}), format!("wrote {} models to {}", models.len(), dir.display()));
                }
                None => {
                    let text: String = models.iter().map(|m| m.to_text()).collect();
                    out(json, json!(models), text);
                }
            }
        }
        BoundsCmd::AOf { m } => {
            let a = bounds::a_of(&known, *m);
            out(json, json!(a), format!("a({m}): {a:?}"));
        }
    }
    Ok(true)
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
