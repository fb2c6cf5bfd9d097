use std::collections::BTreeMap;

use serde::Serialize;

use super::table::DerivationTable;
use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::{GammaIndex, Rational};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{homogeneous_grade, Tensor2, TensorKey};

/// The table of `x -> x.u` on `window(win)`. The degree is the grade of `u`
/// when `u` is homogeneous and nonzero.
pub fn inner_derivation(alg: &Algebra, u: &Tensor2, win: u32) -> Result<DerivationTable> {
    alg.check_tensor(u)
        .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
    let values: BTreeMap<_, _> = alg
        .basis_window(win)
        .into_iter()
        .map(|s| {
            let v = alg.act_symbol(&s, u);
            (s, v)
        })
        .collect();
    DerivationTable::new(alg, win, homogeneous_grade(u), values)
}

/// Splits each value by grade relative to its source symbol. Parts re-sum
/// to the input; zero parts are omitted.
pub fn homogeneous_split(d: &DerivationTable) -> Result<BTreeMap<GammaIndex, DerivationTable>> {
    let mut parts: BTreeMap<GammaIndex, BTreeMap<Symbol, Tensor2>> = BTreeMap::new();
    for (s, t) in d.values() {
        for (k, c) in t {
            let deg = &k.grade() - &s.grade();
            parts
                .entry(deg)
                .or_default()
                .entry(s.clone())
                .or_default()
                .add_term(k.clone(), c.clone());
        }
    }
    parts
        .into_iter()
        .map(|(deg, values)| {
            let t = DerivationTable::new(d.algebra(), d.window(), Some(deg.clone()), values)?;
            Ok((deg, t))
        })
        .collect()
}

/// For a derivation homogeneous of degree `alpha != 0`, the tensor
/// `u = D(L(0)) / alpha` with `D = u_inn`. Every tabled value is checked
/// against `x.u` modulo center (x) center; a mismatch is reported as a
/// precondition error naming the symbol, since it means the input was not a
/// derivation.
pub fn claim2_representative(d: &DerivationTable, alpha: &GammaIndex) -> Result<Tensor2> {
    if alpha.is_zero() {
        return Err(Error::Precondition("degree must be nonzero".into()));
    }
    if let Some(deg) = d.degree() {
        if deg != alpha {
            return Err(Error::Precondition(format!(
                "table has degree {deg}, not {alpha}"
            )));
        }
    }
    let alg = d.algebra();
    let u = d.eval(&Symbol::L(Rational::zero()))?.scale(&alpha.recip()?);
    for s in alg.scan_window(d.window()) {
        let got = alg.mod_center(&d.eval(&s)?);
        let want = alg.mod_center(&alg.act_symbol(&s, &u));
        if got != want {
            return Err(Error::Precondition(format!(
                "D({s}) = {got} but {s}.u = {want}"
            )));
        }
    }
    Ok(u)
}

/// `(alpha + beta) D(w) - w.D(L(0)) = beta D(w)` for every basis `w` of grade
/// `beta` in the table window, compared exactly.
pub fn degree_identity_check(d: &DerivationTable, alpha: &GammaIndex) -> Result<CheckReport> {
    let alg = d.algebra();
    let dl0 = d.eval(&Symbol::L(Rational::zero()))?;
    for w in alg.scan_window(d.window()) {
        let beta = w.grade();
        let dw = d.eval(&w)?;
        let lhs = &dw.scale(&(alpha + &beta)) - &alg.act_symbol(&w, &dl0);
        let rhs = dw.scale(&beta);
        if lhs != rhs {
            return Ok(CheckReport::fail(
                "degree-identity",
                alg.variant(),
                d.window(),
                w.to_string(),
                lhs,
                rhs,
            ));
        }
    }
    Ok(CheckReport::pass(
        "degree-identity",
        alg.variant(),
        d.window(),
    ))
}

/// Outer derivations of the algebra into itself, modulo center, used as
/// `D (x) C` or `C (x) D` with `C` central.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralFamily {
    /// `L(a) -> I(a)` for `a != 0`.
    Shift,
    /// `L(a) -> a I(a)`.
    Grade,
    /// `I(a) -> I(a)`.
    Weight,
}

impl CentralFamily {
    pub const ALL: [CentralFamily; 3] = [
        CentralFamily::Shift,
        CentralFamily::Grade,
        CentralFamily::Weight,
    ];

    fn image(self, s: &Symbol) -> Option<Element> {
        match (self, s) {
            (CentralFamily::Shift, Symbol::L(a)) if !a.is_zero() => {
                Some(Element::basis(Symbol::I(a.clone())))
            }
            (CentralFamily::Grade, Symbol::L(a)) if !a.is_zero() => {
                Some(Element::term(Symbol::I(a.clone()), a.clone()))
            }
            (CentralFamily::Weight, Symbol::I(a)) if !a.is_zero() => {
                Some(Element::basis(Symbol::I(a.clone())))
            }
            _ => None,
        }
    }

    /// Label of `D (x) C` (`mirrored == false`) or `C (x) D`.
    pub fn label(self, c: &Symbol, mirrored: bool) -> String {
        let name = match (self, mirrored) {
            (CentralFamily::Shift, false) => "lambda",
            (CentralFamily::Shift, true) => "eta",
            (CentralFamily::Grade, _) => "grade",
            (CentralFamily::Weight, _) => "weight",
        };
        if mirrored {
            format!("{c}(x){name}")
        } else {
            format!("{name}(x){c}")
        }
    }
}

/// `lambda (x) C`: `L(a) -> lambda I(a) (x) C` for `a != 0`, every other basis
/// vector to zero. `C` must be central in the full algebra.
pub fn lambda_outer(
    alg: &Algebra,
    lambda: &Rational,
    c: &Element,
    win: u32,
) -> Result<DerivationTable> {
    Ok(central_outer(alg, CentralFamily::Shift, c, false, win)?.scale(lambda))
}

/// The mirrored family `C (x) eta`: `L(a) -> eta C (x) I(a)` for `a != 0`.
pub fn mirrored_outer(
    alg: &Algebra,
    c: &Element,
    eta: &Rational,
    win: u32,
) -> Result<DerivationTable> {
    Ok(central_outer(alg, CentralFamily::Shift, c, true, win)?.scale(eta))
}

/// `x -> D(x) (x) C`, or `C (x) D(x)` when `mirrored`, for `D` in `family`.
/// These are derivations modulo center (x) center.
pub fn central_outer(
    alg: &Algebra,
    family: CentralFamily,
    c: &Element,
    mirrored: bool,
    win: u32,
) -> Result<DerivationTable> {
    crate::bialgebra::check_central(alg, c)?;
    let mut values = BTreeMap::new();
    for s in alg.basis_window(win) {
        if let Some(i) = family.image(&s) {
            let t = if mirrored {
                crate::tensor::tensor2(c, &i)
            } else {
                crate::tensor::tensor2(&i, c)
            };
            values.insert(s, t);
        }
    }
    DerivationTable::new(alg, win, Some(Rational::zero()), values)
}

/// `x -> x.h` for the formal sum `h = sum_{k>=1} I(-kg) (x) I(kg) / (kg)`, `g`
/// the cyclic generator of the index group. Each value is a finite tensor
/// since `[L(n), I(j)] = j I(n+j)` makes the sum telescope. The result is a
/// derivation of degree zero that no finite `u` realizes.
pub fn harmonic_outer(alg: &Algebra, win: u32) -> Result<DerivationTable> {
    let domain = alg.basis_window(win);
    let bound = domain
        .iter()
        .filter_map(|s| s.index().map(Rational::abs))
        .max()
        .unwrap_or_else(Rational::zero);
    let g = alg.group().cyclic_generator().clone();
    let mut h = Tensor2::zero();
    let mut j = g.clone();
    // Truncation tails only touch slots beyond `bound`.
    let stop = &(&bound + &bound) + &g;
    while j <= stop {
        h.add_term((Symbol::I(-&j), Symbol::I(j.clone())), j.recip()?);
        j = &j + &g;
    }
    let small = |s: &Symbol| s.index().is_none_or(|x| x.abs() <= bound);
    let values: BTreeMap<_, _> = domain
        .into_iter()
        .map(|s| {
            let v = alg
                .act_symbol(&s, &h)
                .filter(|k| small(&k.0) && small(&k.1));
            (s, v)
        })
        .collect();
    DerivationTable::new(alg, win, Some(Rational::zero()), values)
}
