use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::expr::TableFile;
use crate::tensor::{Tensor2, TensorKey};

/// A linear map into the second tensor power, given on the basis vectors of
/// a window. In-window symbols without an entry map to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTable {
    alg: Algebra,
    window: u32,
    degree: Option<Rational>,
    values: BTreeMap<Symbol, Tensor2>,
}

impl DerivationTable {
    /// Validates membership in `alg`, the window, and homogeneity when a
    /// degree is declared.
    pub fn new(
        alg: &Algebra,
        window: u32,
        degree: Option<Rational>,
        values: BTreeMap<Symbol, Tensor2>,
    ) -> Result<Self> {
        for (s, t) in &values {
            alg.check_symbol(s)?;
            alg.check_tensor(t)?;
            if !alg.in_window(s, window) {
                return Err(Error::Config(format!(
                    "table entry `{s}` lies outside window {window}"
                )));
            }
            if let Some(d) = &degree {
                let want = &s.grade() + d;
                if let Some(k) = t.keys().find(|k| k.grade() != want) {
                    return Err(Error::Precondition(format!(
                        "D({s}) has a term {}@{} of grade {}, expected {want}",
                        k.0,
                        k.1,
                        k.grade()
                    )));
                }
            }
        }
        let values = values.into_iter().filter(|(_, t)| !t.is_zero()).collect();
        Ok(DerivationTable {
            alg: alg.clone(),
            window,
            degree,
            values,
        })
    }

    pub fn zero(alg: &Algebra, window: u32) -> Self {
        DerivationTable {
            alg: alg.clone(),
            window,
            degree: None,
            values: BTreeMap::new(),
        }
    }

    pub fn from_file(file: &TableFile, fallback: &Algebra) -> Result<Self> {
        let alg = file.algebra(fallback);
        let values = file.values(&alg)?;
        Self::new(&alg, file.window, file.degree.clone(), values)
    }

    pub fn to_file(&self) -> TableFile {
        TableFile::new(&self.alg, self.window, self.degree.clone(), &self.values)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn degree(&self) -> Option<&Rational> {
        self.degree.as_ref()
    }

    /// Nonzero values.
    pub fn values(&self) -> &BTreeMap<Symbol, Tensor2> {
        &self.values
    }

    pub fn covers(&self, s: &Symbol) -> bool {
        self.alg.in_window(s, self.window)
    }

    pub fn eval(&self, s: &Symbol) -> Result<Tensor2> {
        if !self.covers(s) {
            return Err(Error::Coverage {
                symbol: s.to_string(),
            });
        }
        Ok(self.values.get(s).cloned().unwrap_or_default())
    }

    pub fn eval_element(&self, x: &Element) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (s, c) in x {
            out.add_scaled(&self.eval(s)?, c);
        }
        Ok(out)
    }

    /// Replaces one value. The declared degree is dropped if the new value
    /// breaks homogeneity.
    pub fn with_value(&self, s: Symbol, t: Tensor2) -> Result<Self> {
        let mut values = self.values.clone();
        values.insert(s, t);
        let degree = self.degree.clone();
        Self::new(&self.alg, self.window, degree, values.clone())
            .or_else(|_| Self::new(&self.alg, self.window, None, values))
    }

    /// Pointwise sum on the smaller window.
    pub fn add(&self, other: &DerivationTable) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::ConfigMismatch(
                "tables come from different algebras".into(),
            ));
        }
        let window = self.window.min(other.window);
        let mut values = BTreeMap::new();
        for s in self.alg.basis_window(window) {
            values.insert(s.clone(), &self.eval(&s)? + &other.eval(&s)?);
        }
        let degree = if self.degree == other.degree {
            self.degree.clone()
        } else {
            None
        };
        Self::new(&self.alg, window, degree.clone(), values.clone())
            .or_else(|_| Self::new(&self.alg, window, None, values))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DerivationTable {
            alg: self.alg.clone(),
            window: self.window,
            degree: self.degree.clone(),
            values: self
                .values
                .iter()
                .map(|(s, t)| (s.clone(), t.scale(c)))
                .filter(|(_, t)| !t.is_zero())
                .collect(),
        }
    }

    /// Drops terms with both slots central from every value.
    pub fn mod_center(&self) -> Self {
        DerivationTable {
            values: self
                .values
                .iter()
                .map(|(s, t)| (s.clone(), self.alg.mod_center(t)))
                .filter(|(_, t)| !t.is_zero())
                .collect(),
            ..self.clone()
        }
    }
}
