//! Plain-text scenario files: one `key = value` per line, `#` comments.
//!
//! ```text
//! degree = 4
//! genus-range = 10..40
//! case = general
//! c1sq-grid = 1, 14, 1000/3
//! ```

use std::path::Path;

use gonal_slope_core::ratcalc::Rat;

use crate::output::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusRange {
    pub lo: i64,
    pub hi: i64,
}

impl GenusRange {
    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for GenusRange {
    type Err = String;

    /// `a..b` and `a..=b` are both inclusive; a single `a` is `a..a`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
            None => (s, s),
        };
        let lo = parse_int(lo)?;
        let hi = parse_int(hi)?;
        if lo > hi {
            return Err(format!("empty genus range {lo}..{hi}"));
        }
        Ok(GenusRange { lo, hi })
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|e| format!("`{}`: {e}", s.trim()))
}

pub fn parse_int(s: &str) -> Result<i64, String> {
    let r = parse_rat(s)?;
    r.is_integer()
        .then(|| r.to_i64())
        .flatten()
        .ok_or_else(|| format!("`{}` is not an integer", s.trim()))
}

fn parse_count<T: TryFrom<i64>>(s: &str) -> Result<T, String> {
    let n = parse_int(s)?;
    T::try_from(n).map_err(|_| format!("`{}` is out of range", s.trim()))
}

/// Comma-separated exact rationals.
pub fn parse_grid(s: &str) -> Result<Vec<Rat>, String> {
    let values: Vec<Rat> = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_rat)
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err("empty c1sq grid".into());
    }
    Ok(values)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScenarioFile {
    pub degree: Option<u32>,
    pub genus: Option<i64>,
    pub genus_range: Option<GenusRange>,
    pub case: Option<String>,
    pub gamma: Option<i64>,
    pub s: Option<u64>,
    pub t: Option<u64>,
    pub c1sq_grid: Option<Vec<Rat>>,
    pub format: Option<Format>,
}

fn set<T>(slot: &mut Option<T>, key: &str, value: Result<T, String>) -> Result<(), String> {
    if slot.is_some() {
        return Err(format!("duplicate key `{key}`"));
    }
    *slot = Some(value.map_err(|e| format!("{key}: {e}"))?);
    Ok(())
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut f = ScenarioFile::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: String| format!("line {}: {e}", idx + 1);
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at(format!("expected key = value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            match key.replace('_', "-").as_str() {
                "degree" => set(&mut f.degree, key, parse_count(value)),
                "genus" => set(&mut f.genus, key, parse_int(value)),
                "genus-range" => set(&mut f.genus_range, key, value.parse()),
                "case" => set(&mut f.case, key, Ok(value.to_string())),
                "gamma" => set(&mut f.gamma, key, parse_int(value)),
                "s" => set(&mut f.s, key, parse_count(value)),
                "t" => set(&mut f.t, key, parse_count(value)),
                "c1sq-grid" => set(&mut f.c1sq_grid, key, parse_grid(value)),
                "format" | "output-format" => set(&mut f.format, key, value.parse()),
                _ => Err(format!("unknown key `{key}`")),
            }
            .map_err(at)?;
        }
        Ok(f)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        ScenarioFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}
