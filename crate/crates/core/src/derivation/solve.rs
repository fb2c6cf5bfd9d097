use std::collections::BTreeMap;

use serde::Serialize;

use super::check::derivation_check;
use super::table::DerivationTable;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linsys::{Echelon, Insert, SparseRow, Vars};
use crate::tensor::{Pair, Tensor2, TensorKey};

/// Why no inner representative exists within the searched support: the
/// coefficient of `coordinate` in `symbol.u - D(symbol)` reduces to the
/// nonzero constant `residual`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerCertificate {
    pub symbol: String,
    pub coordinate: String,
    pub residual: Rational,
    pub support_radius: u32,
    pub probe_radius: u32,
}

impl std::fmt::Display for InnerCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "not inner within support radius {}, probes radius {}: coefficient of {} in {}.u leaves residual {}",
            self.support_radius, self.probe_radius, self.coordinate, self.symbol, self.residual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerOutcome {
    Inner(Tensor2),
    Infeasible(InnerCertificate),
}

/// Solves `x.u = D(x)` for every basis `x` indexed by `window(probe_radius)`,
/// with `u` on basis pairs indexed by `window(support_radius)`. Pairs with
/// both slots central are neither unknowns nor constraints. If the table
/// declares a degree, `u` is restricted to that grade. Free unknowns are set
/// to zero. `probe_radius` defaults to the table window.
///
/// The table must pass [`derivation_check`] on the probe window.
pub fn solve_inner(
    d: &DerivationTable,
    support_radius: u32,
    probe_radius: Option<u32>,
) -> Result<InnerOutcome> {
    let alg = d.algebra();
    let probe_radius = probe_radius.unwrap_or(d.window()).min(d.window());
    let pre = derivation_check(d, probe_radius)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!(
            "table is not a derivation at {}",
            pre.witness.unwrap_or_default()
        )));
    }

    let support = alg.basis_window(support_radius);
    let mut vars: Vars<Pair> = Vars::new();
    for p in &support {
        for q in &support {
            let key = (p.clone(), q.clone());
            if (alg.is_central(p) && alg.is_central(q))
                || d.degree().is_some_and(|g| key.grade() != *g)
            {
                continue;
            }
            vars.intern(key);
        }
    }

    let mut ech: Echelon<()> = Echelon::new();
    for x in alg.scan_window(probe_radius) {
        let mut rows: BTreeMap<Pair, SparseRow> = BTreeMap::new();
        for (col, key) in vars.keys().iter().enumerate() {
            for (k, c) in &Pair::act_symbol(alg, &x, key) {
                if !(alg.is_central(&k.0) && alg.is_central(&k.1)) {
                    rows.entry(k.clone()).or_default().insert(col, c.clone());
                }
            }
        }
        let target = alg.mod_center(&d.eval(&x)?);
        for k in target.keys() {
            rows.entry(k.clone()).or_default();
        }
        for (k, row) in rows {
            if let Insert::Inconsistent { residual } = ech.insert(row, target.coeff(&k), ()) {
                return Ok(InnerOutcome::Infeasible(InnerCertificate {
                    symbol: x.to_string(),
                    coordinate: format!("{}@{}", k.0, k.1),
                    residual,
                    support_radius,
                    probe_radius,
                }));
            }
        }
    }
    let u = ech
        .particular_solution()
        .into_iter()
        .map(|(col, v)| (vars.key(col).clone(), v))
        .collect();
    Ok(InnerOutcome::Inner(u))
}
