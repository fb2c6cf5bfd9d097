use rayon::prelude::*;

use super::table::DerivationTable;
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// Checks `D[x,y] = x.D(y) - y.D(x)` for basis pairs indexed by
/// `window(radius)`, modulo tensors with both slots central. Pairs whose
/// bracket leaves the table window are not constraints. The witness is the
/// first failing pair in center-out scan order.
pub fn derivation_check(d: &DerivationTable, radius: u32) -> Result<CheckReport> {
    check(d, radius, true)
}

/// [`derivation_check`] without discarding center (x) center terms.
pub fn derivation_check_exact(d: &DerivationTable, radius: u32) -> Result<CheckReport> {
    check(d, radius, false)
}

fn check(d: &DerivationTable, radius: u32, modulo_center: bool) -> Result<CheckReport> {
    let alg = d.algebra();
    let basis = alg.scan_window(radius);
    if let Some(s) = basis.iter().find(|s| !d.covers(s)) {
        return Err(Error::Coverage {
            symbol: s.to_string(),
        });
    }
    let values: Vec<_> = basis.iter().map(|s| d.eval(s)).collect::<Result<_>>()?;
    let hit = (0..basis.len())
        .into_par_iter()
        .map(|i| -> Result<Option<CheckReport>> {
            let x = &basis[i];
            for j in i + 1..basis.len() {
                let y = &basis[j];
                let xy = alg.bracket_symbols(x, y);
                if !xy.keys().all(|s| d.covers(s)) {
                    continue;
                }
                let mut lhs = d.eval_element(&xy)?;
                let mut rhs = &alg.act_symbol(x, &values[j]) - &alg.act_symbol(y, &values[i]);
                if modulo_center {
                    lhs = alg.mod_center(&lhs);
                    rhs = alg.mod_center(&rhs);
                }
                if lhs != rhs {
                    let w = format!("({x}, {y})");
                    return Ok(Some(CheckReport::fail(
                        "derivation",
                        alg.variant(),
                        radius,
                        w,
                        lhs,
                        rhs,
                    )));
                }
            }
            Ok(None)
        })
        .filter_map(|r| r.transpose())
        .find_first(|_| true);
    match hit {
        Some(r) => r,
        None => Ok(CheckReport::pass("derivation", alg.variant(), radius)),
    }
}
