//! Acceptance suite. Prints one line per criterion and exits nonzero when an
//! outcome differs from what is expected, including a known failure that
//! starts passing.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hvlab_core::bialgebra::{
    bialgebra_axiom_check, cobracket_decompose, cybe_defect, drinfeld_sides, mybe_check,
    one_tensor_delta, CobracketTable, DecomposeOutcome,
};
use hvlab_core::derivation::{
    claim2_representative, common_kernel, degree_identity_check, derivation_check, h1_probe,
    inner_derivation, lambda_outer, solve_inner, InnerOutcome,
};
use hvlab_core::sample;
use hvlab_core::tensor::{cyclic_sum, TensorKey};
use hvlab_core::{Algebra, AlgebraConfig, Element, Rational, Symbol, Variant};
use serde_json::Value;

type Outcome = Result<String, String>;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn hvlab(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hvlab"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn algebra_axioms() -> Outcome {
    let start = Instant::now();
    let (code, v) = hvlab(&["verify-axioms", "--radius", "6"]);
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("exit {code}: {v}"))?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    let (code, v) = hvlab(&["verify-axioms", "--radius", "6", "--mixed-cocycle", "cubic"]);
    ensure(code == 1, || format!("cubic cocycle exit {code}"))?;
    let jacobi = &v["result"][1];
    let witness = jacobi["witness"]
        .as_str()
        .ok_or("cubic failure without witness")?;
    Ok(format!(
        "radius 6 in {elapsed:.2?}; cubic cocycle fails at {witness}"
    ))
}

fn drinfeld_identity() -> Outcome {
    let alg = Algebra::integers(Variant::Full);
    let mut rng = sample::rng(2);
    let probes = alg.scan_window(2);
    for n in 0..100 {
        let r = sample::antisymmetric_r(&alg, &mut rng, 3, 4, 5);
        for x in &probes {
            let (lhs, rhs) =
                drinfeld_sides(&alg, &r, &Element::basis(x.clone())).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("sample {n}, x = {x}, r = {r}"))?;
        }
    }
    Ok(format!("100 samples x {} probes", probes.len()))
}

fn triangular_witnesses() -> Outcome {
    let mut n = 0;
    for variant in ["full", "centerless"] {
        for alpha in [1i64, -1, 2, -2, 3] {
            for kind in ["L", "I"] {
                let a = format!("{}*L(0)", Rational::from(alpha).recip().unwrap());
                let b = format!("{kind}({alpha})");
                let (code, v) = hvlab(&["triangular", "--a", &a, "--b", &b, "--variant", variant]);
                ensure(code == 0 && v["result"]["defect"] == "0", || {
                    format!("{variant} ({a}, {b}): {v}")
                })?;
                let r = format!("wedge({a}, {b})");
                let (code, v) = hvlab(&[
                    "bialgebra",
                    "--r",
                    &r,
                    "--radius",
                    "5",
                    "--variant",
                    variant,
                ]);
                ensure(code == 0, || format!("{variant} bialgebra {r}: {v}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs, c(r) = 0 and three axioms on radius 5"))
}

fn mybe_iff_cybe() -> Outcome {
    let alg = Algebra::integers(Variant::Centerless);
    let mut rng = sample::rng(4);
    let (mut solutions, mut others) = (0, 0);
    for n in 0..50 {
        let r = sample::mixed_r(&alg, &mut rng, n, 3, 5);
        let c = cybe_defect(&alg, &r).map_err(|e| e.to_string())?;
        let top = c
            .keys()
            .map(|k| k.grade().abs())
            .max()
            .unwrap_or_else(Rational::zero);
        let probe_radius = top.to_string().parse::<u32>().map_err(|e| e.to_string())? + 2;
        let mybe = mybe_check(&alg, &r, probe_radius).map_err(|e| e.to_string())?;
        ensure(mybe.passed() == c.is_zero(), || {
            format!("sample {n}: mybe {:?}, r = {r}", mybe.status)
        })?;
        let kernel = common_kernel(&alg, probe_radius, std::slice::from_ref(&c))
            .map_err(|e| e.to_string())?;
        ensure(kernel.is_trivial(), || {
            format!("sample {n}: nonzero kernel")
        })?;
        if c.is_zero() {
            solutions += 1;
        } else {
            others += 1;
        }
    }
    ensure(solutions > 0 && others > 0, || {
        format!("one-sided batch: {solutions} / {others}")
    })?;
    Ok(format!(
        "{solutions} with c(r) = 0 pass MYBE, {others} fail both"
    ))
}

fn inner_representative_round_trip() -> Outcome {
    let mut rng = sample::rng(5);
    let grades = [1i64, -1, 2, -2, 3, -3];
    for n in 0..100 {
        let alg = Algebra::integers(if n % 2 == 0 {
            Variant::Full
        } else {
            Variant::Centerless
        });
        let alpha = q(grades[n % grades.len()]);
        let u = sample::homogeneous_tensor(&alg, &mut rng, &alpha, 3, 4, 5);
        let d = inner_derivation(&alg, &u, 3).map_err(|e| e.to_string())?;
        let back = claim2_representative(&d, &alpha).map_err(|e| e.to_string())?;
        ensure(back == u, || format!("sample {n}: {back} != {u}"))?;
        let identity = degree_identity_check(&d, &alpha).map_err(|e| e.to_string())?;
        ensure(identity.passed(), || format!("sample {n}: {identity:?}"))?;
    }
    Ok("100 samples recovered exactly".into())
}

fn outer_family() -> Outcome {
    let alg = Algebra::integers(Variant::Full);
    let mut first = None;
    for c in [Symbol::CL, Symbol::CI, Symbol::CLI, Symbol::I(q(0))] {
        let d =
            lambda_outer(&alg, &q(1), &Element::basis(c.clone()), 4).map_err(|e| e.to_string())?;
        let rep = derivation_check(&d, 4).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("lambda(x){c}: {rep:?}"))?;
        for support in 0..=4 {
            match solve_inner(&d, support, Some(2)).map_err(|e| e.to_string())? {
                InnerOutcome::Inner(u) => {
                    return Err(format!("lambda(x){c} inner at support {support}: {u}"))
                }
                InnerOutcome::Infeasible(cert) => {
                    first.get_or_insert_with(|| format!("lambda(x){c}: {cert}"));
                }
            }
        }
    }
    Ok(format!(
        "4 tables outer up to support 4; e.g. {}",
        first.unwrap_or_default()
    ))
}

fn sigma_bialgebra() -> Outcome {
    let alg = Algebra::integers(Variant::Full);
    for c in alg.center_basis() {
        let sigma = CobracketTable::sigma_cobracket(&alg, &q(1), &Element::basis(c.clone()), 6)
            .map_err(|e| e.to_string())?;
        for w in alg.scan_window(5) {
            let sw = sigma.eval(&w).map_err(|e| e.to_string())?;
            let t =
                cyclic_sum(&one_tensor_delta(&sw, |b| sigma.eval(b)).map_err(|e| e.to_string())?);
            ensure(t.is_zero(), || format!("{c} at {w}: {t}"))?;
        }
        let suite = bialgebra_axiom_check(&sigma, 4).map_err(|e| e.to_string())?;
        ensure(suite.passed(), || format!("{c}: {suite:?}"))?;
    }
    Ok("nilpotent on window(5), axioms on radius 4, all four central symbols".into())
}

fn h1_window_probe() -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    let full = AlgebraConfig::integers(Variant::Full);
    let centerless = AlgebraConfig::integers(Variant::Centerless);
    let rep = h1_probe(&full, 3, &q(0)).map_err(|e| e.to_string())?;
    let labels: Vec<&str> = rep
        .representatives
        .iter()
        .filter_map(|r| r.label.as_deref())
        .collect();
    let families = labels.iter().any(|l| l.starts_with("lambda(x)"))
        && labels.iter().any(|l| l.ends_with("(x)eta"));
    if rep.quotient_dim >= 2 && families {
        notes.push(format!("full degree 0: {}", rep.quotient_dim));
    } else {
        failures.push(format!("full degree 0: {} {labels:?}", rep.quotient_dim));
    }
    for cfg in [&full, &centerless] {
        for d in [1i64, -1, 2, -2] {
            let rep = h1_probe(cfg, 3, &q(d)).map_err(|e| e.to_string())?;
            if rep.quotient_dim != 0 || rep.confirmed_inner != Some(rep.dim_derivations) {
                failures.push(format!("{} degree {d}: {}", cfg.variant, rep.quotient_dim));
            }
        }
    }
    notes.push("degrees +-1, +-2: 0".into());
    let rep = h1_probe(&centerless, 3, &q(0)).map_err(|e| e.to_string())?;
    if rep.quotient_dim == 0 {
        notes.push("centerless degree 0: 0".into());
    } else {
        let labels: Vec<_> = rep
            .representatives
            .iter()
            .map(|r| r.label.clone().unwrap_or_default())
            .collect();
        failures.push(format!(
            "centerless degree 0: quotient {} (expected 0), representatives {labels:?}",
            rep.quotient_dim
        ));
    }
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!(
            "{}; passing parts: {}",
            failures.join("; "),
            notes.join("; ")
        ))
    }
}

fn decomposition_round_trip() -> Outcome {
    let alg = Algebra::integers(Variant::Full);
    let mut rng = sample::rng(9);
    let ci = Element::basis(Symbol::CI);
    for n in 0..25 {
        let r = sample::antisymmetric_r(&alg, &mut rng, 3, 3, 5);
        let lambda = sample::coefficient(&mut rng, 5);
        let table = CobracketTable::from_r(&alg, &r, 4)
            .and_then(|t| t.add(&CobracketTable::sigma_cobracket(&alg, &lambda, &ci, 4)?))
            .map_err(|e| e.to_string())?;
        let DecomposeOutcome::Solved(d) =
            cobracket_decompose(&table, 3).map_err(|e| e.to_string())?
        else {
            return Err(format!("sample {n}: infeasible for r = {r}"));
        };
        ensure(alg.mod_center(&d.r) == alg.mod_center(&r), || {
            format!("sample {n}: r {} != {r}", d.r)
        })?;
        ensure(d.lambda(&Symbol::CI) == lambda, || {
            format!("sample {n}: lambda {}", d.lambda(&Symbol::CI))
        })?;
    }
    Ok("25 samples recovered exactly".into())
}

fn bracket_regression() -> Outcome {
    let (code, v) = hvlab(&["bracket", "L(-2)", "L(2)"]);
    ensure(
        code == 0 && v["result"]["value"] == "4*L(0) - 1/2*C_L",
        || format!("{v}"),
    )?;
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md"))
        .map_err(|e| e.to_string())?;
    ensure(readme.contains("## Note on [L(-2), L(2)]"), || {
        "README note missing".into()
    })?;
    Ok("4*L(0) - 1/2*C_L; see README.md, \"Note on [L(-2), L(2)]\"".into())
}

type Criterion = (&'static str, fn() -> Outcome);

/// Criteria expected to fail, with the reason recorded alongside the suite.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    8,
    "the centerless algebra has an outer degree-0 derivation x -> x.h, h = sum_j I(-j)@I(j)/j (see README.md)",
)];

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("algebra axioms", algebra_axioms),
        ("Drinfeld identity", drinfeld_identity),
        ("triangular witnesses", triangular_witnesses),
        ("MYBE iff CYBE", mybe_iff_cybe),
        (
            "inner representative round trip",
            inner_representative_round_trip,
        ),
        ("outer family", outer_family),
        ("sigma bialgebra", sigma_bialgebra),
        ("H1 window probe", h1_window_probe),
        ("decomposition round trip", decomposition_round_trip),
        ("[L(-2), L(2)] regression", bracket_regression),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        let known = KNOWN_FAILURES
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, why)| *why);
        match (run(), known) {
            (Ok(detail), None) => println!("criterion {n} {name}: PASS ({detail})"),
            (Err(detail), Some(why)) => {
                println!("criterion {n} {name}: FAIL, known: {why} ({detail})")
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("criterion {n} {name}: PASS, but listed as a known failure ({detail})");
            }
            (Err(detail), None) => {
                unexpected += 1;
                println!("criterion {n} {name}: FAIL ({detail})");
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
