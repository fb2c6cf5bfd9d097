//! Fixed inputs shared by the benchmarks in `benches/`.

use hvlab_core::derivation::{lambda_outer, DerivationTable};
use hvlab_core::sample;
use hvlab_core::{Algebra, Element, Rational, Symbol, Tensor2, Variant};

pub fn full() -> Algebra {
    Algebra::integers(Variant::Full)
}

/// Seeded antisymmetric tensors with support radius 3.
pub fn random_rs(alg: &Algebra, n: usize) -> Vec<Tensor2> {
    let mut rng = sample::rng(1);
    (0..n)
        .map(|_| sample::antisymmetric_r(alg, &mut rng, 3, 4, 5))
        .collect()
}

pub fn outer_table(alg: &Algebra, win: u32) -> DerivationTable {
    lambda_outer(alg, &Rational::one(), &Element::basis(Symbol::CI), win).expect("C_I is central")
}
