use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::expr::TableFile;
use crate::tensor::{tensor2, Tensor2};

/// How a cobracket table was built. Every provenance except `Explicit` has a
/// closed form and can be evaluated on any basis vector; explicit tables are
/// only known on their window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// `x -> x . r`.
    FromR(Tensor2),
    /// `L(a) -> lambda I(a) (x) C - eta C (x) I(a)` for `a != 0`, zero on
    /// `L(0)`, the `I(a)` and the center.
    FromSigma {
        lambda: Rational,
        central: Element,
        eta: Rational,
    },
    Sum(Vec<Provenance>),
    Explicit,
}

impl Provenance {
    fn eval(&self, alg: &Algebra, s: &Symbol) -> Tensor2 {
        match self {
            Provenance::FromR(r) => alg.act_symbol(s, r),
            Provenance::FromSigma {
                lambda,
                central,
                eta,
            } => sigma_value(s, lambda, central, eta),
            Provenance::Sum(parts) => parts
                .iter()
                .fold(Tensor2::zero(), |acc, p| &acc + &p.eval(alg, s)),
            Provenance::Explicit => unreachable!("explicit tables are looked up"),
        }
    }

    fn is_explicit(&self) -> bool {
        matches!(self, Provenance::Explicit)
    }
}

fn sigma_value(s: &Symbol, lambda: &Rational, central: &Element, eta: &Rational) -> Tensor2 {
    match s {
        Symbol::L(a) if !a.is_zero() => {
            let i = Element::basis(Symbol::I(a.clone()));
            &tensor2(&i, central).scale(lambda) - &tensor2(central, &i).scale(eta)
        }
        _ => Tensor2::zero(),
    }
}

/// A cobracket given on the basis vectors of a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CobracketTable {
    alg: Algebra,
    window: u32,
    provenance: Provenance,
    values: BTreeMap<Symbol, Tensor2>,
}

impl CobracketTable {
    fn build(alg: &Algebra, window: u32, provenance: Provenance) -> Self {
        let values = alg
            .basis_window(window)
            .into_iter()
            .map(|s| {
                let v = provenance.eval(alg, &s);
                (s, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect();
        CobracketTable {
            alg: alg.clone(),
            window,
            provenance,
            values,
        }
    }

    /// The coboundary `x -> x . r`.
    pub fn from_r(alg: &Algebra, r: &Tensor2, window: u32) -> Result<Self> {
        alg.check_tensor(r)
            .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
        Ok(Self::build(alg, window, Provenance::FromR(r.clone())))
    }

    /// `lambda (x) C - C (x) eta`: sends `L(a)`, `a != 0`, to
    /// `lambda I(a) (x) C - eta C (x) I(a)`.
    pub fn from_sigma(
        alg: &Algebra,
        lambda: &Rational,
        central: &Element,
        eta: &Rational,
        window: u32,
    ) -> Result<Self> {
        check_central(alg, central)?;
        let p = Provenance::FromSigma {
            lambda: lambda.clone(),
            central: central.clone(),
            eta: eta.clone(),
        };
        Ok(Self::build(alg, window, p))
    }

    /// The antisymmetric member `lambda (x) C - C (x) lambda` of the family.
    pub fn sigma_cobracket(
        alg: &Algebra,
        lambda: &Rational,
        central: &Element,
        window: u32,
    ) -> Result<Self> {
        Self::from_sigma(alg, lambda, central, lambda, window)
    }

    /// A table known only on `window`; in-window symbols without an entry map
    /// to zero.
    pub fn explicit(alg: &Algebra, window: u32, values: BTreeMap<Symbol, Tensor2>) -> Result<Self> {
        for (s, t) in &values {
            alg.check_symbol(s)?;
            alg.check_tensor(t)?;
            if !alg.in_window(s, window) {
                return Err(Error::Config(format!(
                    "table entry `{s}` lies outside window {window}"
                )));
            }
        }
        let values = values.into_iter().filter(|(_, t)| !t.is_zero()).collect();
        Ok(CobracketTable {
            alg: alg.clone(),
            window,
            provenance: Provenance::Explicit,
            values,
        })
    }

    pub fn from_file(file: &TableFile, fallback: &Algebra) -> Result<Self> {
        let alg = file.algebra(fallback);
        let values = file.values(&alg)?;
        Self::explicit(&alg, file.window, values)
    }

    pub fn to_file(&self) -> TableFile {
        TableFile::new(&self.alg, self.window, None, &self.values)
    }

    /// Pointwise sum. The result is explicit if either side is, and lives on
    /// the smaller window.
    pub fn add(&self, other: &CobracketTable) -> Result<Self> {
        if self.alg != other.alg {
            return Err(Error::ConfigMismatch(
                "tables come from different algebras".into(),
            ));
        }
        let window = self.window.min(other.window);
        if self.provenance.is_explicit() || other.provenance.is_explicit() {
            let mut values = BTreeMap::new();
            for s in self.alg.basis_window(window) {
                let v = &self.eval(&s)? + &other.eval(&s)?;
                values.insert(s, v);
            }
            return Self::explicit(&self.alg, window, values);
        }
        let mut parts = Vec::new();
        for p in [&self.provenance, &other.provenance] {
            match p {
                Provenance::Sum(v) => parts.extend(v.iter().cloned()),
                other => parts.push(other.clone()),
            }
        }
        Ok(Self::build(&self.alg, window, Provenance::Sum(parts)))
    }

    /// Replaces one value, turning the table explicit.
    pub fn with_value(&self, s: Symbol, t: Tensor2) -> Result<Self> {
        let mut values = BTreeMap::new();
        for x in self.alg.basis_window(self.window) {
            let v = self.eval(&x)?;
            values.insert(x, v);
        }
        values.insert(s, t);
        Self::explicit(&self.alg, self.window, values)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Nonzero values on the window.
    pub fn values(&self) -> &BTreeMap<Symbol, Tensor2> {
        &self.values
    }

    pub fn is_explicit(&self) -> bool {
        self.provenance.is_explicit()
    }

    /// Whether `s` can be evaluated.
    pub fn covers(&self, s: &Symbol) -> bool {
        !self.is_explicit() || self.alg.in_window(s, self.window)
    }

    /// The cobracket of a basis vector.
    pub fn eval(&self, s: &Symbol) -> Result<Tensor2> {
        if self.is_explicit() {
            if !self.alg.in_window(s, self.window) {
                return Err(Error::Coverage {
                    symbol: s.to_string(),
                });
            }
            return Ok(self.values.get(s).cloned().unwrap_or_default());
        }
        Ok(self.provenance.eval(&self.alg, s))
    }

    pub fn eval_element(&self, x: &Element) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (s, c) in x {
            out.add_scaled(&self.eval(s)?, c);
        }
        Ok(out)
    }
}

pub(crate) fn check_central(alg: &Algebra, c: &Element) -> Result<()> {
    if alg.is_centerless() {
        return Err(Error::Unsupported(
            "the centerless algebra has no center; sigma vanishes there".into(),
        ));
    }
    alg.check_element(c)?;
    match c.keys().find(|s| !s.is_central()) {
        Some(s) => Err(Error::Precondition(format!(
            "`{c}` is not central (term `{s}`)"
        ))),
        None => Ok(()),
    }
}
