use crate::ReportError;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// How much work a run may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Ci,
    Desk,
    Overnight,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Ci => "ci",
            Tier::Desk => "desk",
            Tier::Overnight => "overnight",
        }
    }

    pub fn parse(s: &str) -> Option<Tier> {
        [Tier::Ci, Tier::Desk, Tier::Overnight].into_iter().find(|t| t.name() == s)
    }
}

/// Limits for one tier.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Budget {
    pub tier: Tier,
    /// Exact search runs for `n <= exact_max`.
    pub exact_max: usize,
    pub gather_l: usize,
    pub gather_m: usize,
    /// Sphere cells run for `n` with at most this many decimal digits.
    pub sphere_digits: usize,
    /// Above `sphere_full_digits` digits the sphere search stops at `d <= sphere_d_cap`.
    pub sphere_full_digits: usize,
    pub sphere_d_cap: usize,
    /// Whether the thirds method runs for the bounds table.
    pub thirds: bool,
    pub cache_dir: Option<PathBuf>,
}

/// Contents used when no config file is given.
pub const DEFAULT_CONFIG: &str = "\
# apfree budget tiers: <tier>.<key> = <value>
tier = ci

ci.exact_max = 100
ci.gather_l = 12
ci.gather_m = 60
ci.sphere_digits = 21
ci.sphere_full_digits = 21
ci.sphere_d_cap = 8
ci.thirds = false

desk.exact_max = 110
desk.gather_l = 12
desk.gather_m = 60
desk.sphere_digits = 66
desk.sphere_full_digits = 31
desk.sphere_d_cap = 12
desk.thirds = true

overnight.exact_max = 186
overnight.gather_l = 14
overnight.gather_m = 80
overnight.sphere_digits = 66
overnight.sphere_full_digits = 66
overnight.sphere_d_cap = 64
overnight.thirds = true
";

/// Plain `key = value` settings; `#` starts a comment.
#[derive(Clone, Debug, Default)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, ReportError> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| ReportError::Config(format!("line {}: expected key = value", i + 1)))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn load(path: &Path) -> Result<Config, ReportError> {
        let text = std::fs::read_to_string(path).map_err(|e| ReportError::Config(format!("{}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn tier(&self) -> Result<Tier, ReportError> {
        let name = self.get("tier").unwrap_or("ci");
        Tier::parse(name).ok_or_else(|| ReportError::Config(format!("unknown tier {name:?}")))
    }

    /// Settings for `tier`; missing keys fall back to the built-in defaults.
    pub fn budget(&self, tier: Tier) -> Result<Budget, ReportError> {
        let defaults = Config::parse(DEFAULT_CONFIG)?;
        let raw = |key: &str| {
            let full = format!("{}.{key}", tier.name());
            self.get(&full).or_else(|| defaults.values.get(&full).map(String::as_str)).map(str::to_string)
        };
        let num = |key: &str| -> Result<usize, ReportError> {
            let v = raw(key).ok_or_else(|| ReportError::Config(format!("missing {}.{key}", tier.name())))?;
            v.parse().map_err(|_| ReportError::Config(format!("{}.{key}: not a number: {v:?}", tier.name())))
        };
        let thirds = match raw("thirds").as_deref() {
            Some("true") => true,
            Some("false") | None => false,
            Some(v) => return Err(ReportError::Config(format!("{}.thirds: expected true or false, got {v:?}", tier.name()))),
        };
        Ok(Budget {
            tier,
            exact_max: num("exact_max")?,
            gather_l: num("gather_l")?,
            gather_m: num("gather_m")?,
            sphere_digits: num("sphere_digits")?,
            sphere_full_digits: num("sphere_full_digits")?,
            sphere_d_cap: num("sphere_d_cap")?,
            thirds,
            cache_dir: self.get("cache_dir").map(PathBuf::from),
        })
    }
}

impl Budget {
    pub fn of(tier: Tier) -> Budget {
        Config::parse(DEFAULT_CONFIG).unwrap().budget(tier).unwrap()
    }
}
