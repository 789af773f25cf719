//! Run configuration: defaults, an optional TOML file, then command-line
//! flags, in increasing priority.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;
use stiffgap_core::correction::ExpansionParams;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutputPath {
    Stdout,
    File(PathBuf),
}

impl OutputPath {
    pub fn parse(p: &Path) -> Self {
        if p.as_os_str() == "-" {
            OutputPath::Stdout
        } else {
            OutputPath::File(p.to_path_buf())
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub epsilon: f64,
    pub m: f64,
    /// `C` for every level without an explicit entry.
    pub default_constant: f64,
    /// `C_{n,k}` keyed by `(n, k)`.
    pub error_constants: BTreeMap<(u32, u32), f64>,
    pub grid_resolution: usize,
    pub output_format: OutputFormat,
    pub output_path: OutputPath,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            epsilon: 1e-3,
            m: 0.25,
            default_constant: 0.0,
            error_constants: BTreeMap::new(),
            grid_resolution: 33,
            output_format: OutputFormat::Csv,
            output_path: OutputPath::Stdout,
        }
    }
}

/// Values that may come from either the config file or flags.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub epsilon: Option<f64>,
    pub m: Option<f64>,
    #[serde(alias = "grid_resolution")]
    pub grid: Option<usize>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub error_constant: Option<f64>,
    #[serde(default)]
    pub error_constants: BTreeMap<String, f64>,
}

fn parse_level(key: &str) -> CliResult<(u32, u32)> {
    let bad = || CliError::usage(format!("error_constants key {key:?} must look like \"n,k\""));
    let (n, k) = key.split_once(',').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let k: u32 = k.trim().parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    Ok((n, k))
}

impl RunConfig {
    pub fn load_file(path: &Path) -> CliResult<Overrides> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        toml::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    }

    /// Layers `file` then `flags` over the defaults and validates the result.
    pub fn resolve(file: Option<Overrides>, flags: Overrides) -> CliResult<Self> {
        let mut cfg = RunConfig::default();
        for layer in file.into_iter().chain(Some(flags)) {
            cfg.apply(layer)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply(&mut self, o: Overrides) -> CliResult<()> {
        if let Some(v) = o.epsilon {
            self.epsilon = v;
        }
        if let Some(v) = o.m {
            self.m = v;
        }
        if let Some(v) = o.grid {
            self.grid_resolution = v;
        }
        if let Some(v) = o.format {
            self.output_format = v;
        }
        if let Some(v) = o.out {
            self.output_path = OutputPath::parse(&v);
        }
        if let Some(v) = o.error_constant {
            self.default_constant = v;
        }
        for (key, c) in o.error_constants {
            self.error_constants.insert(parse_level(&key)?, c);
        }
        Ok(())
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(CliError::usage(format!("invalid epsilon = {}: epsilon must be positive", self.epsilon)));
        }
        if !(self.m > 0.0 && self.m < 0.5) {
            return Err(CliError::usage(format!("invalid m = {}: m in (0, 1/2) stands for a fixed exponent", self.m)));
        }
        if self.grid_resolution < 3 {
            return Err(CliError::usage(format!(
                "invalid grid = {}: resolution must be at least 3",
                self.grid_resolution
            )));
        }
        let bad = |c: f64| !(c.is_finite() && c >= 0.0);
        if bad(self.default_constant) {
            return Err(CliError::usage(format!("invalid error constant {}", self.default_constant)));
        }
        if let Some(((n, k), c)) = self.error_constants.iter().find(|(_, &c)| bad(c)) {
            return Err(CliError::usage(format!("invalid error constant {c} for level {n},{k}")));
        }
        Ok(())
    }

    pub fn params(&self) -> CliResult<ExpansionParams> {
        let mut p = ExpansionParams::new(self.epsilon, self.m, self.default_constant)?;
        for (&(n, k), &c) in &self.error_constants {
            p = p.with_constant(n, k, c)?;
        }
        Ok(p)
    }

    /// True when no pad has been given a positive constant.
    pub fn pads_uncertified(&self) -> bool {
        self.default_constant == 0.0 && self.error_constants.values().all(|&c| c == 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::resolve(None, Overrides::default()).unwrap();
        assert_eq!(c, RunConfig::default());
        assert!(c.pads_uncertified());
    }

    #[test]
    fn flags_override_file() {
        let file: Overrides =
            toml::from_str("epsilon = 0.01\nm = 0.1\ngrid = 9\nformat = \"json\"\n[error_constants]\n\"1,1\" = 2.5\n")
                .unwrap();
        let flags = Overrides { m: Some(0.3), ..Overrides::default() };
        let c = RunConfig::resolve(Some(file), flags).unwrap();
        assert_eq!(c.epsilon, 0.01);
        assert_eq!(c.m, 0.3);
        assert_eq!(c.grid_resolution, 9);
        assert_eq!(c.output_format, OutputFormat::Json);
        assert_eq!(c.error_constants[&(1, 1)], 2.5);
        assert_eq!(c.params().unwrap().constant_for(1, 1), 2.5);
    }

    #[test]
    fn rejects_bad_values() {
        let m = RunConfig::resolve(None, Overrides { m: Some(0.5), ..Overrides::default() }).unwrap_err();
        assert!(m.to_string().contains("fixed exponent"));
        assert!(RunConfig::resolve(None, Overrides { epsilon: Some(0.0), ..Overrides::default() }).is_err());
        assert!(RunConfig::resolve(None, Overrides { grid: Some(2), ..Overrides::default() }).is_err());
        let mut bad = Overrides::default();
        bad.error_constants.insert("1-1".into(), 1.0);
        assert!(RunConfig::resolve(None, bad).is_err());
        assert!(toml::from_str::<Overrides>("colour = 1").is_err());
    }

    #[test]
    fn stdout_sentinel() {
        assert_eq!(OutputPath::parse(Path::new("-")), OutputPath::Stdout);
        assert_eq!(OutputPath::parse(Path::new("a.csv")), OutputPath::File("a.csv".into()));
    }
}
