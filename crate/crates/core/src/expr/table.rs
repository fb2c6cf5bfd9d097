//! JSON form of cobracket and derivation tables:
//!
//! ```json
//! {"config": {"generators": ["1"], "variant": "full", "mixed_cocycle": "paper"},
//!  "window": 2, "degree": "0",
//!  "assignments": {"L(1)": "I(1)@C_I - C_I@I(1)"}}
//! ```
//!
//! `config` and `degree` are optional. When `config` is present it overrides
//! the caller's configuration.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::parse::{parse_elem, parse_tensor2};
use crate::algebra::{Algebra, AlgebraConfig, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::tensor::Tensor2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<AlgebraConfig>,
    pub window: u32,
    #[serde(default)]
    pub degree: Option<Rational>,
    pub assignments: BTreeMap<String, String>,
}

impl TableFile {
    pub fn new(
        alg: &Algebra,
        window: u32,
        degree: Option<Rational>,
        values: &BTreeMap<Symbol, Tensor2>,
    ) -> Self {
        TableFile {
            config: Some(alg.config().clone()),
            window,
            degree,
            assignments: values
                .iter()
                .filter(|(_, t)| !t.is_zero())
                .map(|(s, t)| (s.to_string(), t.to_string()))
                .collect(),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// The algebra the table lives in: its own config block if present,
    /// otherwise `fallback`.
    pub fn algebra(&self, fallback: &Algebra) -> Algebra {
        match &self.config {
            Some(c) => Algebra::new(c.clone()),
            None => fallback.clone(),
        }
    }

    /// Parses every assignment. Keys must be single basis symbols inside the
    /// stated window.
    pub fn values(&self, alg: &Algebra) -> Result<BTreeMap<Symbol, Tensor2>> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.assignments {
            let key = parse_elem(k, alg)?;
            let mut it = key.iter();
            let sym = match (it.next(), it.next()) {
                (Some((s, c)), None) if c.is_one() => s.clone(),
                _ => {
                    return Err(Error::Config(format!(
                        "table key `{k}` is not a basis symbol"
                    )))
                }
            };
            if !alg.in_window(&sym, self.window) {
                return Err(Error::Config(format!(
                    "table key `{k}` lies outside window {}",
                    self.window
                )));
            }
            out.insert(sym, parse_tensor2(v, alg)?);
        }
        Ok(out)
    }
}
