use rayon::prelude::*;

use super::{Algebra, AlgebraConfig, Element, Symbol};
use crate::report::{CheckReport, SuiteReport};

/// Exhaustive anti-symmetry and Jacobi check over basis vectors indexed by
/// `window(radius)`. Witnesses are the first violations in center-out scan
/// order, regardless of how the triple range is split across threads.
pub fn verify_algebra_axioms(config: &AlgebraConfig, radius: u32) -> SuiteReport {
    let alg = Algebra::new(config.clone());
    let basis = alg.scan_window(radius);
    let variant = config.variant;

    let skew = basis
        .par_iter()
        .enumerate()
        .filter_map(|(i, x)| {
            basis[i..].iter().find_map(|y| {
                let xy = alg.bracket_symbols(x, y);
                let yx = alg.bracket_symbols(y, x);
                (xy != -&yx).then(|| (format!("({x}, {y})"), xy, -&yx))
            })
        })
        .find_first(|_| true);
    let skew = match skew {
        None => CheckReport::pass("anti-symmetry", variant, radius),
        Some((w, l, r)) => CheckReport::fail("anti-symmetry", variant, radius, w, l, r),
    };

    let jacobi = basis
        .par_iter()
        .filter_map(|x| {
            for y in &basis {
                let xy = Element::basis(x.clone());
                let yy = Element::basis(y.clone());
                let bxy = alg.bracket_symbols(x, y);
                for z in &basis {
                    let zz = Element::basis(z.clone());
                    let a = alg.bracket_unchecked(&xy, &alg.bracket_symbols(y, z));
                    let b = alg.bracket_unchecked(&yy, &alg.bracket_symbols(z, x));
                    let c = alg.bracket_unchecked(&zz, &bxy);
                    let sum = &(&a + &b) + &c;
                    if !sum.is_zero() {
                        return Some(jacobi_witness(x, y, z, sum));
                    }
                }
            }
            None
        })
        .find_first(|_| true);
    let jacobi = match jacobi {
        None => CheckReport::pass("jacobi", variant, radius),
        Some((w, l)) => CheckReport::fail("jacobi", variant, radius, w, l, "0"),
    };

    SuiteReport {
        checks: vec![skew, jacobi],
    }
}

fn jacobi_witness(x: &Symbol, y: &Symbol, z: &Symbol, sum: Element) -> (String, Element) {
    (format!("({x}, {y}, {z})"), sum)
}
