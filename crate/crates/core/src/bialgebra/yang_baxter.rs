use serde::Serialize;

use crate::algebra::{Algebra, Element, Symbol};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{cyclic_sum, is_antisymmetric, wedge, Tensor2, Tensor3};

/// `c(r) = [r12, r13] + [r12, r23] + [r13, r23]`, evaluated through
///
/// ```text
/// [r12, r13] = sum [a_i, a_j] (x) b_i (x) b_j
/// [r12, r23] = sum a_i (x) [b_i, a_j] (x) b_j
/// [r13, r23] = sum a_i (x) a_j (x) [b_i, b_j]
/// ```
///
/// for `r = sum a_i (x) b_i`. Each commutator in the enveloping algebra has
/// exactly one slot where two factors meet, so the result stays in the
/// third tensor power of the algebra.
pub fn cybe_defect(alg: &Algebra, r: &Tensor2) -> Result<Tensor3> {
    alg.check_tensor(r)
        .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
    Ok(cybe_defect_unchecked(alg, r))
}

pub fn cybe_defect_unchecked(alg: &Algebra, r: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((ai, bi), ci) in r {
        for ((aj, bj), cj) in r {
            let c = ci * cj;
            for (s, k) in &alg.bracket_symbols(ai, aj) {
                out.add_term((s.clone(), bi.clone(), bj.clone()), &c * k);
            }
            for (s, k) in &alg.bracket_symbols(bi, aj) {
                out.add_term((ai.clone(), s.clone(), bj.clone()), &c * k);
            }
            for (s, k) in &alg.bracket_symbols(bi, bj) {
                out.add_term((ai.clone(), aj.clone(), s.clone()), &c * k);
            }
        }
    }
    out
}

/// Checks `x . c(r) = 0` for every basis `x` indexed by `window(probe_radius)`,
/// scanning center-out.
pub fn mybe_check(alg: &Algebra, r: &Tensor2, probe_radius: u32) -> Result<CheckReport> {
    if !is_antisymmetric(r) {
        return Err(Error::Precondition(format!("r is not antisymmetric: {r}")));
    }
    let c = cybe_defect(alg, r)?;
    Ok(first_nonannihilating(alg, &c, probe_radius, "mybe"))
}

pub(crate) fn first_nonannihilating(
    alg: &Algebra,
    c: &Tensor3,
    probe_radius: u32,
    check: &str,
) -> CheckReport {
    for x in alg.scan_window(probe_radius) {
        let xc = alg.act_symbol(&x, c);
        if !xc.is_zero() {
            return CheckReport::fail(check, alg.variant(), probe_radius, x.to_string(), xc, "0");
        }
    }
    CheckReport::pass(check, alg.variant(), probe_radius)
}

/// `(1 (x) D) t` for `t = sum a (x) b`, i.e. `sum a (x) D(b)`.
pub fn one_tensor_delta(
    t: &Tensor2,
    mut delta: impl FnMut(&Symbol) -> Result<Tensor2>,
) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t {
        for ((p, q), k) in &delta(b)? {
            out.add_term((a.clone(), p.clone(), q.clone()), c * k);
        }
    }
    Ok(out)
}

/// Both sides of `(1 + xi + xi^2)(1 (x) D)D(x) = x . c(r)` for `D = D_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrinfeldReport {
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

pub fn drinfeld_identity_check(alg: &Algebra, r: &Tensor2, x: &Element) -> Result<DrinfeldReport> {
    let (lhs, rhs) = drinfeld_sides(alg, r, x)?;
    Ok(DrinfeldReport {
        holds: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// The two sides of the identity, unprinted.
pub fn drinfeld_sides(alg: &Algebra, r: &Tensor2, x: &Element) -> Result<(Tensor3, Tensor3)> {
    if !is_antisymmetric(r) {
        return Err(Error::Precondition(format!("r is not antisymmetric: {r}")));
    }
    alg.check_element(x)
        .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
    let c = cybe_defect(alg, r)?;
    let dx = alg.act_unchecked(x, r);
    let inner = one_tensor_delta(&dx, |b| Ok(alg.act_symbol(b, r)))?;
    Ok((cyclic_sum(&inner), alg.act_unchecked(x, &c)))
}

/// `r = a ^ b` for `[a, b] = b`; such an `r` satisfies the classical
/// Yang-Baxter equation.
pub fn triangular_pair(alg: &Algebra, a: &Element, b: &Element) -> Result<Tensor2> {
    let ab = alg.bracket(a, b)?;
    if &ab != b {
        return Err(Error::Precondition(format!(
            "[a, b] = {ab}, expected b = {b}"
        )));
    }
    let r = wedge(a, b);
    assert!(
        cybe_defect_unchecked(alg, &r).is_zero(),
        "c(r) must vanish when [a, b] = b"
    );
    Ok(r)
}
