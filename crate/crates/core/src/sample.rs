//! Seeded random inputs for property checks and the acceptance suite.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::{GammaIndex, Rational};
use crate::bialgebra::triangular_pair;
use crate::tensor::{wedge, Pair, Tensor2, TensorKey};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero integer in `[-bound, bound]`.
pub fn coefficient(rng: &mut SampleRng, bound: i64) -> Rational {
    let bound = bound.max(1);
    loop {
        let c = rng.random_range(-bound..=bound);
        if c != 0 {
            return Rational::from(c);
        }
    }
}

/// Sum of `terms` wedges `c p ^ q` of distinct basis vectors indexed by
/// `window(support_radius)`, skipping center ^ center. Cancellation can make
/// the result zero.
pub fn antisymmetric_r(
    alg: &Algebra,
    rng: &mut SampleRng,
    support_radius: u32,
    terms: usize,
    bound: i64,
) -> Tensor2 {
    let basis = alg.basis_window(support_radius);
    let mut r = Tensor2::zero();
    let mut added = 0;
    while added < terms {
        let p = basis.choose(rng).expect("nonempty window");
        let q = basis.choose(rng).expect("nonempty window");
        if p == q || (alg.is_central(p) && alg.is_central(q)) {
            continue;
        }
        let c = coefficient(rng, bound);
        r.add_scaled(
            &wedge(&Element::basis(p.clone()), &Element::basis(q.clone())),
            &c,
        );
        added += 1;
    }
    r
}

/// Random `u` on basis pairs indexed by `window(support_radius)` whose grades
/// sum to `grade`, never zero.
pub fn homogeneous_tensor(
    alg: &Algebra,
    rng: &mut SampleRng,
    grade: &GammaIndex,
    support_radius: u32,
    terms: usize,
    bound: i64,
) -> Tensor2 {
    let basis = alg.basis_window(support_radius);
    let pairs: Vec<Pair> = basis
        .iter()
        .flat_map(|p| basis.iter().map(move |q| (p.clone(), q.clone())))
        .filter(|k| k.grade() == *grade && !(alg.is_central(&k.0) && alg.is_central(&k.1)))
        .collect();
    assert!(
        !pairs.is_empty(),
        "no pairs of grade {grade} in window({support_radius})"
    );
    loop {
        let mut u = Tensor2::zero();
        for _ in 0..terms.max(1) {
            let k = pairs.choose(rng).expect("nonempty");
            u.add_term(k.clone(), coefficient(rng, bound));
        }
        if !u.is_zero() {
            return u;
        }
    }
}

/// Antisymmetric `r` drawn from three shapes in turn: generic wedges, wedges
/// of `I` vectors only, and scaled triangular pairs `L(0)/a ^ L(a)` or
/// `L(0)/a ^ I(a)`. The last two satisfy the classical Yang-Baxter equation
/// in the centerless variant, so a batch exercises both outcomes.
pub fn mixed_r(
    alg: &Algebra,
    rng: &mut SampleRng,
    index: usize,
    support_radius: u32,
    bound: i64,
) -> Tensor2 {
    match index % 3 {
        0 => antisymmetric_r(alg, rng, support_radius, 3, bound),
        1 => {
            let g = alg.group().cyclic_generator().clone();
            let r = support_radius.max(1) as i64;
            let mut t = Tensor2::zero();
            for _ in 0..3 {
                let a = &g * &Rational::from(rng.random_range(-r..=r));
                let b = &g * &Rational::from(rng.random_range(-r..=r));
                if a == b
                    || alg.check_symbol(&Symbol::I(a.clone())).is_err()
                    || alg.check_symbol(&Symbol::I(b.clone())).is_err()
                {
                    continue;
                }
                let w = wedge(&Element::basis(Symbol::I(a)), &Element::basis(Symbol::I(b)));
                t.add_scaled(&w, &coefficient(rng, bound));
            }
            t
        }
        _ => {
            let g = alg.group().cyclic_generator().clone();
            let r = support_radius.max(1) as i64;
            let k = loop {
                let k = rng.random_range(-r..=r);
                if k != 0 {
                    break k;
                }
            };
            let a = &g * &Rational::from(k);
            let l0 = Element::term(Symbol::L(Rational::zero()), a.recip().expect("nonzero"));
            let b = if rng.random_bool(0.5) {
                Symbol::L(a)
            } else {
                Symbol::I(a)
            };
            let r = triangular_pair(alg, &l0, &Element::basis(b)).expect("[L(0)/a, X(a)] = X(a)");
            r.scale(&coefficient(rng, bound))
        }
    }
}
