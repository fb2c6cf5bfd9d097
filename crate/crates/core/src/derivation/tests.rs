use super::*;
use crate::algebra::{Algebra, AlgebraConfig, Element, MixedCocycle, Symbol, Variant};
use crate::arith::Rational;
use crate::error::Error;
use crate::expr::parse_tensor2;
use crate::tensor::{Tensor2, Tensor3};

fn full() -> Algebra {
    Algebra::integers(Variant::Full)
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

#[test]
fn lambda_outer_is_a_derivation_modulo_center() {
    let a = full();
    for c in a.center_basis() {
        let d = lambda_outer(&a, &q(1), &Element::basis(c.clone()), 4).unwrap();
        assert!(derivation_check(&d, 3).unwrap().passed(), "{c}");
        let m = mirrored_outer(&a, &Element::basis(c), &q(1), 4).unwrap();
        assert!(derivation_check(&m, 3).unwrap().passed());
    }
    // Exactly, [L(1), L(-1)] leaves a center (x) center residue.
    let d = lambda_outer(&a, &q(1), &Element::basis(Symbol::CI), 2).unwrap();
    assert!(!derivation_check_exact(&d, 1).unwrap().passed());
}

#[test]
fn lambda_outer_examples() {
    let a = full();
    let cl = Element::basis(Symbol::CL);
    let d = lambda_outer(&a, &q(1), &cl, 2).unwrap();
    assert_eq!(
        d.eval(&Symbol::l(-2)).unwrap(),
        parse_tensor2("I(-2)@C_L", &a).unwrap()
    );
    assert!(d.eval(&Symbol::l(0)).unwrap().is_zero());
    assert!(d.eval(&Symbol::i(1)).unwrap().is_zero());
    assert!(lambda_outer(&a, &q(0), &cl, 2).unwrap().values().is_empty());
    assert!(matches!(
        lambda_outer(&a, &q(1), &a.l(1).unwrap(), 2),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn inner_derivation_examples() {
    let a = full();
    let u = parse_tensor2("L(0)@C_L", &a).unwrap();
    let d = inner_derivation(&a, &u, 2).unwrap();
    assert_eq!(
        d.eval(&Symbol::l(1)).unwrap(),
        parse_tensor2("-L(1)@C_L", &a).unwrap()
    );
    assert!(derivation_check_exact(&d, 2).unwrap().passed());
    assert!(inner_derivation(&a, &Tensor2::zero(), 2)
        .unwrap()
        .values()
        .is_empty());
    let cc = parse_tensor2("C_L@C_I", &a).unwrap();
    assert!(inner_derivation(&a, &cc, 3).unwrap().values().is_empty());
}

#[test]
fn perturbed_table_witness() {
    let a = full();
    let u = parse_tensor2("wedge(L(1), L(-1)) + I(2)@L(-2)", &a).unwrap();
    let d = inner_derivation(&a, &u, 3).unwrap();
    assert!(derivation_check(&d, 2).unwrap().passed());
    let bump = parse_tensor2("L(0)@L(1)", &a).unwrap();
    let bad = d
        .with_value(Symbol::l(1), &d.eval(&Symbol::l(1)).unwrap() + &bump)
        .unwrap();
    let rep = derivation_check(&bad, 2).unwrap();
    assert_eq!(rep.witness.as_deref(), Some("(L(-1), L(1))"));
    // L(0) acts on the bump by its grade, so the pair (L(0), L(1)) stays
    // consistent.
    let only =
        DerivationTable::new(&a, 1, None, [(Symbol::l(1), bump)].into_iter().collect()).unwrap();
    let x = a.l(0).unwrap();
    let lhs = only
        .eval_element(&a.bracket(&x, &a.l(1).unwrap()).unwrap())
        .unwrap();
    let rhs = a.act(&x, &only.eval(&Symbol::l(1)).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn coverage_is_enforced() {
    let a = full();
    let d = inner_derivation(&a, &parse_tensor2("L(1)@L(1)", &a).unwrap(), 2).unwrap();
    assert!(matches!(
        derivation_check(&d, 3),
        Err(Error::Coverage { .. })
    ));
}

#[test]
fn split_examples() {
    let a = full();
    let v = parse_tensor2("L(2)@L(0) + L(0)@L(0)", &a).unwrap();
    let d = DerivationTable::new(&a, 1, None, [(Symbol::l(1), v)].into_iter().collect()).unwrap();
    let parts = homogeneous_split(&d).unwrap();
    assert_eq!(parts.keys().cloned().collect::<Vec<_>>(), vec![q(-1), q(1)]);
    let u = parse_tensor2("L(1)@L(1)", &a).unwrap();
    let h = inner_derivation(&a, &u, 2).unwrap();
    let parts = homogeneous_split(&h).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[&q(2)], h);
    assert!(homogeneous_split(&DerivationTable::zero(&a, 2))
        .unwrap()
        .is_empty());
}

#[test]
fn inner_representative_examples() {
    let a = full();
    let u = parse_tensor2("L(1)@L(1)", &a).unwrap();
    let d = inner_derivation(&a, &u, 3).unwrap();
    assert_eq!(claim2_representative(&d, &q(2)).unwrap(), u);
    assert!(degree_identity_check(&d, &q(2)).unwrap().passed());

    let z = DerivationTable::new(&a, 3, Some(q(1)), Default::default()).unwrap();
    assert!(claim2_representative(&z, &q(1)).unwrap().is_zero());
    assert!(matches!(
        claim2_representative(&d, &q(0)),
        Err(Error::Precondition(_))
    ));

    let bad = DerivationTable::new(
        &a,
        2,
        Some(q(2)),
        [(Symbol::l(1), parse_tensor2("L(1)@L(2)", &a).unwrap())]
            .into_iter()
            .collect(),
    )
    .unwrap();
    match claim2_representative(&bad, &q(2)) {
        Err(Error::Precondition(m)) => assert!(m.contains("D(L(1))"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn solve_inner_examples() {
    let a = full();
    let u = parse_tensor2("wedge(L(1), L(-1))", &a).unwrap();
    let d = inner_derivation(&a, &u, 3).unwrap();
    match solve_inner(&d, 2, Some(2)).unwrap() {
        InnerOutcome::Inner(got) => {
            let back = inner_derivation(&a, &got, 3).unwrap();
            assert_eq!(back.mod_center(), d.mod_center());
        }
        InnerOutcome::Infeasible(c) => panic!("{c}"),
    }
    match solve_inner(&DerivationTable::zero(&a, 2), 2, None).unwrap() {
        InnerOutcome::Inner(got) => assert!(got.is_zero()),
        InnerOutcome::Infeasible(c) => panic!("{c}"),
    }
    let outer = lambda_outer(&a, &q(1), &Element::basis(Symbol::CI), 4).unwrap();
    assert!(matches!(
        solve_inner(&outer, 4, Some(2)).unwrap(),
        InnerOutcome::Infeasible(_)
    ));
}

#[test]
fn kernel_examples() {
    let a = full();
    let t = parse_tensor2("L(1)@L(-1)", &a).unwrap();
    assert!(common_kernel(&a, 2, &[t]).unwrap().is_trivial());
    let cc = parse_tensor2("C_L@C_I", &a).unwrap();
    let k = common_kernel(&a, 3, std::slice::from_ref(&cc)).unwrap();
    assert_eq!(k.basis, vec![cc]);
    let bar = a.centerless();
    let t = parse_tensor2("I(1)@I(-1)", &bar).unwrap();
    assert!(common_kernel(&bar, 2, &[t]).unwrap().is_trivial());
    let empty: [Tensor3; 0] = [];
    assert!(common_kernel(&bar, 2, &empty).unwrap().is_trivial());
}

#[test]
fn h1_centerless_degree_zero() {
    let cfg = AlgebraConfig::integers(Variant::Centerless);
    for r in [2, 3] {
        let rep = h1_probe(&cfg, r, &q(0)).unwrap();
        assert_eq!(rep.quotient_dim, 1, "radius {r}");
        assert_eq!(rep.representatives[0].label.as_deref(), Some("harmonic"));
    }
}

#[test]
fn h1_full_degree_zero() {
    let cfg = AlgebraConfig::integers(Variant::Full);
    let rep = h1_probe(&cfg, 3, &q(0)).unwrap();
    // Three families on each side for each of four central symbols, plus harmonic.
    assert_eq!(rep.quotient_dim, 25);
    assert!(rep.representatives.iter().all(|r| r.label.is_some()));
    let labels: Vec<_> = rep
        .representatives
        .iter()
        .filter_map(|r| r.label.as_deref())
        .collect();
    for want in [
        "lambda(x)C_L",
        "C_L(x)eta",
        "lambda(x)C_I",
        "C_I(x)eta",
        "grade(x)I(0)",
        "C_LI(x)weight",
        "harmonic",
    ] {
        assert!(labels.contains(&want), "{want}");
    }
}

#[test]
fn h1_nonzero_degree() {
    for variant in [Variant::Full, Variant::Centerless] {
        let cfg = AlgebraConfig::integers(variant);
        for d in [-2, -1, 1, 2] {
            let rep = h1_probe(&cfg, 3, &q(d)).unwrap();
            assert_eq!(rep.quotient_dim, 0, "{variant} degree {d}");
            assert_eq!(rep.confirmed_inner, Some(rep.dim_derivations));
        }
    }
}

#[test]
fn h1_rejects_small_radius_and_foreign_degree() {
    let cfg = AlgebraConfig::integers(Variant::Full);
    assert!(matches!(
        h1_probe(&cfg, 1, &q(0)),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        h1_probe(&cfg, 2, &Rational::new(1, 2).unwrap()),
        Err(Error::NotInGroup { .. })
    ));
}

#[test]
fn harmonic_is_an_outer_derivation() {
    let alg = Algebra::integers(Variant::Centerless);
    let d = harmonic_outer(&alg, 8).unwrap();
    // Independent closed form of the telescoped sum.
    for n in -8i64..=8 {
        let mut t = Tensor2::zero();
        if n > 0 {
            for j in 1..n {
                t.add_term((Symbol::I(q(n - j)), Symbol::I(q(j))), q(-1));
            }
        } else {
            for j in n + 1..0 {
                t.add_term((Symbol::I(q(n - j)), Symbol::I(q(j))), q(1));
            }
        }
        assert_eq!(d.eval(&Symbol::L(q(n))).unwrap(), t, "L({n})");
    }
    assert!(derivation_check_exact(&d, 8).unwrap().passed());
    for support in [8, 16] {
        let out = solve_inner(&d, support, Some(8)).unwrap();
        let InnerOutcome::Infeasible(cert) = out else {
            panic!("inner at support {support}")
        };
        assert_eq!(cert.symbol, "L(-2)");
        assert_eq!(cert.coordinate, "I(-1)@I(-1)");
    }
}

#[test]
fn harmonic_full_variant_is_a_derivation() {
    for mc in [MixedCocycle::Paper, MixedCocycle::Standard] {
        let cfg = AlgebraConfig {
            mixed_cocycle: mc,
            ..AlgebraConfig::integers(Variant::Full)
        };
        let alg = Algebra::new(cfg);
        let d = harmonic_outer(&alg, 5).unwrap();
        assert!(derivation_check_exact(&d, 5).unwrap().passed());
        assert_eq!(
            d.eval(&Symbol::I(q(2))).unwrap(),
            parse_tensor2("-C_I@I(2)", &alg).unwrap()
        );
    }
}
