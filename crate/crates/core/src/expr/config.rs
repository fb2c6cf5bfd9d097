//! Flat `key = value` run configuration.
//!
//! ```text
//! # comment
//! generators = "1/2, 1/3"
//! variant = "full"
//! mixed_cocycle = "paper"
//! radius = 4
//! seed = 42
//! format = "json"
//! ```

use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraConfig, MixedCocycle, Variant};
use crate::arith::{GroupSpec, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Config(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub generators: GroupSpec,
    pub variant: Variant,
    pub mixed_cocycle: MixedCocycle,
    pub radius: u32,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            generators: GroupSpec::integers(),
            variant: Variant::Full,
            mixed_cocycle: MixedCocycle::Paper,
            radius: 3,
            seed: 42,
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        text.parse()
    }

    /// Sets one key from its textual value. Quotes around the value are
    /// optional.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = unquote(value.trim());
        match key {
            "generators" => self.generators = parse_generators(v)?,
            "variant" => self.variant = v.parse()?,
            "mixed_cocycle" => self.mixed_cocycle = v.parse()?,
            "radius" => self.radius = parse_num(key, v)?,
            "seed" => self.seed = parse_num(key, v)?,
            "format" => self.format = v.parse()?,
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn algebra_config(&self) -> AlgebraConfig {
        AlgebraConfig::new(self.generators.clone(), self.variant, self.mixed_cocycle)
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::new(self.algebra_config())
    }
}

impl FromStr for RunConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", n + 1)))?;
            cfg.set(k.trim(), v)
                .map_err(|e| Error::Config(format!("line {}: {e}", n + 1)))?;
        }
        Ok(cfg)
    }
}

fn unquote(v: &str) -> &str {
    v.strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .unwrap_or(v)
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| Error::Config(format!("`{key}` expects a nonnegative integer, got `{v}`")))
}

/// Comma-separated rational generators, e.g. `1/2, 1/3`.
pub fn parse_generators(v: &str) -> Result<GroupSpec> {
    let gens = v
        .split(',')
        .map(|g| g.trim().parse::<Rational>())
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Config(format!("generators: {e}")))?;
    GroupSpec::new(gens)
}
