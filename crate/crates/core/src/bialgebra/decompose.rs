use std::collections::BTreeMap;

use serde::Serialize;

use super::table::CobracketTable;
use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linsys::{Echelon, Insert, SparseRow, Vars};
use crate::tensor::{is_antisymmetric, tensor2, Pair, Tensor2, TensorKey};

/// One `lambda (x) C - C (x) eta` summand for a central basis vector `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaTerm {
    pub central: Symbol,
    pub lambda: Rational,
    pub eta: Rational,
}

/// `D = D_r + sum sigma_C` modulo center (x) center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub r: Tensor2,
    /// Nonzero summands only.
    pub sigma: Vec<SigmaTerm>,
}

impl Decomposition {
    pub fn lambda(&self, c: &Symbol) -> Rational {
        self.sigma
            .iter()
            .find(|t| &t.central == c)
            .map(|t| t.lambda.clone())
            .unwrap_or_default()
    }

    pub fn eta(&self, c: &Symbol) -> Rational {
        self.sigma
            .iter()
            .find(|t| &t.central == c)
            .map(|t| t.eta.clone())
            .unwrap_or_default()
    }
}

/// A constraint that cannot be met: the coefficient of `coordinate` in
/// `D(symbol) - symbol.r - sigma(symbol)`, reduced against the earlier
/// constraints, is forced to equal the nonzero `residual`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfeasibleRow {
    pub symbol: String,
    pub coordinate: String,
    pub residual: Rational,
    pub support_radius: u32,
    pub window: u32,
}

impl std::fmt::Display for InfeasibleRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "infeasible within support radius {} on window {}: coefficient of {} at {} leaves residual {}",
            self.support_radius, self.window, self.coordinate, self.symbol, self.residual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposeOutcome {
    Solved(Decomposition),
    Infeasible(InfeasibleRow),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Unknown {
    Wedge(Symbol, Symbol),
    Lambda(Symbol),
    Eta(Symbol),
}

/// Solves `D(x) = x.r + sigma(x)` for every basis `x` in the table window,
/// with `r` an antisymmetric tensor on basis vectors indexed by
/// `window(support_radius)` and `sigma` a combination of the
/// `lambda (x) C - C (x) eta` maps over the central basis vectors. Terms with
/// both slots central are ignored on both sides and never part of `r`. Free
/// unknowns are set to zero.
///
/// Only anti-commutativity of the table is required up front. A table that
/// is not a derivation produces an infeasible row instead of an error.
pub fn cobracket_decompose(
    table: &CobracketTable,
    support_radius: u32,
) -> Result<DecomposeOutcome> {
    let alg = table.algebra();
    if let Some((s, _)) = table.values().iter().find(|(_, t)| !is_antisymmetric(t)) {
        return Err(Error::Precondition(format!("D({s}) is not antisymmetric")));
    }

    let support = alg.basis_window(support_radius);
    let mut vars: Vars<Unknown> = Vars::new();
    for (i, p) in support.iter().enumerate() {
        for q in &support[i + 1..] {
            if !(alg.is_central(p) && alg.is_central(q)) {
                vars.intern(Unknown::Wedge(p.clone(), q.clone()));
            }
        }
    }
    for c in alg.center_basis() {
        vars.intern(Unknown::Lambda(c.clone()));
        vars.intern(Unknown::Eta(c));
    }

    let mut ech: Echelon<(Symbol, Pair)> = Echelon::new();
    for x in alg.scan_window(table.window()) {
        let mut rows: BTreeMap<Pair, SparseRow> = BTreeMap::new();
        for (col, u) in vars.keys().iter().enumerate() {
            for (k, c) in &image(alg, &x, u) {
                if !alg.is_central(&k.0) || !alg.is_central(&k.1) {
                    rows.entry(k.clone()).or_default().insert(col, c.clone());
                }
            }
        }
        let target = alg.mod_center(&table.eval(&x)?);
        for k in target.keys() {
            rows.entry(k.clone()).or_default();
        }
        for (k, row) in rows {
            let rhs = target.coeff(&k);
            if let Insert::Inconsistent { residual } = ech.insert(row, rhs, (x.clone(), k.clone()))
            {
                return Ok(DecomposeOutcome::Infeasible(InfeasibleRow {
                    symbol: x.to_string(),
                    coordinate: format!("{}@{}", k.0, k.1),
                    residual,
                    support_radius,
                    window: table.window(),
                }));
            }
        }
    }

    let sol = ech.particular_solution();
    let mut r = Tensor2::zero();
    let mut sigma: BTreeMap<Symbol, SigmaTerm> = BTreeMap::new();
    for (col, v) in sol {
        match vars.key(col) {
            Unknown::Wedge(p, q) => {
                r.add_term((p.clone(), q.clone()), v.clone());
                r.add_term((q.clone(), p.clone()), -v);
            }
            Unknown::Lambda(c) => sigma_entry(&mut sigma, c).lambda = v,
            Unknown::Eta(c) => sigma_entry(&mut sigma, c).eta = v,
        }
    }
    Ok(DecomposeOutcome::Solved(Decomposition {
        r,
        sigma: sigma.into_values().collect(),
    }))
}

fn sigma_entry<'a>(m: &'a mut BTreeMap<Symbol, SigmaTerm>, c: &Symbol) -> &'a mut SigmaTerm {
    m.entry(c.clone()).or_insert_with(|| SigmaTerm {
        central: c.clone(),
        lambda: Rational::zero(),
        eta: Rational::zero(),
    })
}

/// Contribution of one unknown, with coefficient 1, to `x.r + sigma(x)`.
fn image(alg: &Algebra, x: &Symbol, u: &Unknown) -> Tensor2 {
    match (u, x) {
        (Unknown::Wedge(p, q), _) => {
            let a = Pair::act_symbol(alg, x, &(p.clone(), q.clone()));
            let b = Pair::act_symbol(alg, x, &(q.clone(), p.clone()));
            &a - &b
        }
        (Unknown::Lambda(c), Symbol::L(a)) if !a.is_zero() => tensor2(
            &Element::basis(Symbol::I(a.clone())),
            &Element::basis(c.clone()),
        ),
        (Unknown::Eta(c), Symbol::L(a)) if !a.is_zero() => -&tensor2(
            &Element::basis(c.clone()),
            &Element::basis(Symbol::I(a.clone())),
        ),
        _ => Tensor2::zero(),
    }
}
