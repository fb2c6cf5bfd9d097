use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hvlab_bench::{full, outer_table, random_rs};
use hvlab_core::algebra::verify_algebra_axioms;
use hvlab_core::bialgebra::{bialgebra_axiom_check, cybe_defect, drinfeld_sides, CobracketTable};
use hvlab_core::derivation::{derivation_check, h1_probe, solve_inner};
use hvlab_core::{AlgebraConfig, Element, Rational, Variant};

fn algebra(c: &mut Criterion) {
    let alg = full();
    let basis = alg.basis_window(6);
    c.bench_function("bracket all pairs, radius 6", |b| {
        b.iter(|| {
            for x in &basis {
                for y in &basis {
                    black_box(alg.bracket_symbols(x, y));
                }
            }
        })
    });
    let cfg = AlgebraConfig::integers(Variant::Full);
    c.bench_function("verify axioms, radius 6", |b| {
        b.iter(|| verify_algebra_axioms(black_box(&cfg), 6))
    });
}

fn bialgebra(c: &mut Criterion) {
    let alg = full();
    let rs = random_rs(&alg, 8);
    c.bench_function("cybe defect, 8 samples", |b| {
        b.iter(|| {
            for r in &rs {
                black_box(cybe_defect(&alg, r).unwrap());
            }
        })
    });
    let x = Element::basis(alg.basis_window(1)[0].clone());
    c.bench_function("drinfeld sides, 8 samples", |b| {
        b.iter(|| {
            for r in &rs {
                black_box(drinfeld_sides(&alg, r, &x).unwrap());
            }
        })
    });
    let table = CobracketTable::from_r(&alg, &rs[0], 4).unwrap();
    c.bench_function("bialgebra axioms, radius 3", |b| {
        b.iter(|| bialgebra_axiom_check(&table, 3).unwrap())
    });
}

fn derivations(c: &mut Criterion) {
    let alg = full();
    let d = outer_table(&alg, 4);
    c.bench_function("derivation check, radius 4", |b| {
        b.iter(|| derivation_check(&d, 4).unwrap())
    });
    c.bench_function("solve inner, support 4", |b| {
        b.iter(|| solve_inner(&d, 4, Some(2)).unwrap())
    });
    let cfg = AlgebraConfig::integers(Variant::Full);
    let mut group = c.benchmark_group("h1");
    group.sample_size(10);
    group.bench_function("degree 0, radius 2", |b| {
        b.iter(|| h1_probe(&cfg, 2, &Rational::zero()).unwrap())
    });
    group.bench_function("degree 1, radius 3", |b| {
        b.iter(|| h1_probe(&cfg, 3, &Rational::one()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, algebra, bialgebra, derivations);
criterion_main!(benches);
