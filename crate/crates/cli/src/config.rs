//! Flat key = value config files and the pair-list syntax shared with the
//! command line.
//!
//! ```text
//! # grid
//! r_min = 0.05
//! r_max = 2.0
//! r_steps = 40
//! pairs = 0.0:0.0, 0.2:0.1
//! ode_steps = 20000
//! tol = 1e-9
//! out = sweep.csv
//! ```

use std::path::{Path, PathBuf};

/// Values read from a config file; every field optional so command-line
/// flags can override per key.
#[derive(Debug, Default, Clone, PartialEq)]
pub struct FileConfig {
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub r_steps: Option<usize>,
    pub pairs: Option<Vec<(f64, f64)>>,
    pub ode_steps: Option<usize>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}

/// Parse "theta:eta[,theta:eta...]" into pairs.
pub fn parse_pairs(text: &str) -> Result<Vec<(f64, f64)>, String> {
    let mut pairs = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(format!("empty pair in {text:?}"));
        }
        let (theta, eta) = item
            .split_once(':')
            .ok_or_else(|| format!("pair {item:?} is not of the form theta:eta"))?;
        let parse = |s: &str| -> Result<f64, String> {
            s.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {s:?} in pair {item:?}: {e}"))
        };
        pairs.push((parse(theta)?, parse(eta)?));
    }
    Ok(pairs)
}

pub fn load_config_file(path: &Path) -> Result<FileConfig, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    parse_config(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut config = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |e: String| format!("line {}: {e}", lineno + 1);
        let num = |v: &str| v.parse::<f64>().map_err(|e| bad(format!("{v:?}: {e}")));
        let int = |v: &str| v.parse::<usize>().map_err(|e| bad(format!("{v:?}: {e}")));
        match key {
            "r_min" => config.r_min = Some(num(value)?),
            "r_max" => config.r_max = Some(num(value)?),
            "r_steps" => config.r_steps = Some(int(value)?),
            "pairs" => config.pairs = Some(parse_pairs(value).map_err(bad)?),
            "ode_steps" => config.ode_steps = Some(int(value)?),
            "tol" => config.tol = Some(num(value)?),
            "out" => config.out = Some(PathBuf::from(value)),
            other => return Err(bad(format!("unknown key {other:?}"))),
        }
    }
    Ok(config)
}
