use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::check::derivation_check;
use super::inner::{central_outer, claim2_representative, harmonic_outer, CentralFamily};
use super::table::DerivationTable;
use crate::algebra::{Algebra, AlgebraConfig, Element, Symbol, Variant};
use crate::arith::{GammaIndex, Rational};
use crate::error::{Error, Result};
use crate::linsys::{Echelon, SparseRow, Vars};
use crate::tensor::{Pair, Tensor2, TensorKey};

/// One coset representative of derivations modulo inner derivations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Representative {
    /// `lambda(x)C`, `C(x)eta`, the `grade`/`weight` analogues or `harmonic`
    /// when the representative is one of those tables; `None` otherwise.
    pub label: Option<String>,
    pub assignments: BTreeMap<String, String>,
}

/// Window statistics for degree-`degree` derivations into the second tensor
/// power. Derivations are tables on `window(radius)` with values on basis
/// pairs indexed by `window(2 radius)`; inner ones come from `u` on pairs
/// indexed by `window(inner_support_radius)` whose tables fit that space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Report {
    pub variant: Variant,
    pub degree: GammaIndex,
    pub radius: u32,
    pub inner_support_radius: u32,
    pub dim_derivations: usize,
    pub dim_inner: usize,
    pub quotient_dim: usize,
    /// For nonzero degree: how many basis derivations were confirmed inner by
    /// `u = D(L(0)) / degree`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confirmed_inner: Option<usize>,
    pub representatives: Vec<H1Representative>,
}

/// Counts derivations and inner derivations of one degree at window scale
/// by exact elimination. All comparisons are modulo center (x) center.
pub fn h1_probe(config: &AlgebraConfig, radius: u32, degree: &GammaIndex) -> Result<H1Report> {
    if radius < 2 {
        return Err(Error::Precondition("h1 probe needs radius >= 2".into()));
    }
    let alg = Algebra::new(config.clone());
    if !alg.group().contains(degree) {
        return Err(Error::NotInGroup {
            index: degree.clone(),
        });
    }
    let support_radius = 2 * radius;
    let domain = alg.basis_window(radius);
    let target = alg.basis_window(support_radius);
    let pairs_of_grade = pairs_by_grade(&alg, &target);

    // Unknowns: coefficient of each admissible pair in D(s).
    let mut cols: Vars<(Symbol, Pair)> = Vars::new();
    let mut cols_of: HashMap<Symbol, Vec<(usize, Pair)>> = HashMap::new();
    for s in &domain {
        let g = &s.grade() + degree;
        for p in pairs_of_grade.get(&g).into_iter().flatten() {
            let c = cols.intern((s.clone(), p.clone()));
            cols_of.entry(s.clone()).or_default().push((c, p.clone()));
        }
    }

    // Derivation constraints on pairs whose bracket stays in the domain.
    let mut der: Echelon<()> = Echelon::new();
    for (i, x) in domain.iter().enumerate() {
        for y in &domain[i + 1..] {
            let xy = alg.bracket_symbols(x, y);
            if !xy.keys().all(|s| alg.in_window(s, radius)) {
                continue;
            }
            let mut rows: BTreeMap<Pair, SparseRow> = BTreeMap::new();
            let mut add = |k: Pair, col: usize, c: Rational| {
                if !(alg.is_central(&k.0) && alg.is_central(&k.1)) {
                    let e = rows
                        .entry(k)
                        .or_default()
                        .entry(col)
                        .or_insert_with(Rational::zero);
                    *e += &c;
                }
            };
            for (col, p) in cols_of.get(y).into_iter().flatten() {
                for (k, c) in &Pair::act_symbol(&alg, x, p) {
                    add(k.clone(), *col, c.clone());
                }
            }
            for (col, p) in cols_of.get(x).into_iter().flatten() {
                for (k, c) in &Pair::act_symbol(&alg, y, p) {
                    add(k.clone(), *col, -c);
                }
            }
            for (s, c) in &xy {
                for (col, p) in cols_of.get(s).into_iter().flatten() {
                    add(p.clone(), *col, -c);
                }
            }
            for (_, row) in rows {
                der.insert(row, Rational::zero(), ());
            }
        }
    }
    let derivations = der.nullspace(cols.len());

    // Inner tables u_inn that land in the unknown space.
    let u_basis: Vec<Pair> = pairs_of_grade.get(degree).cloned().unwrap_or_default();
    let mut outside: Vars<(Symbol, Pair)> = Vars::new();
    let mut out_rows: Vec<SparseRow> = Vec::new();
    let mut in_vecs: Vec<SparseRow> = vec![SparseRow::new(); u_basis.len()];
    for (ui, u) in u_basis.iter().enumerate() {
        for s in &domain {
            for (k, c) in &Pair::act_symbol(&alg, s, u) {
                if alg.is_central(&k.0) && alg.is_central(&k.1) {
                    continue;
                }
                match cols.get(&(s.clone(), k.clone())) {
                    Some(col) => {
                        in_vecs[ui].insert(col, c.clone());
                    }
                    None => {
                        let r = outside.intern((s.clone(), k.clone()));
                        if r == out_rows.len() {
                            out_rows.push(SparseRow::new());
                        }
                        out_rows[r].insert(ui, c.clone());
                    }
                }
            }
        }
    }
    let mut fit: Echelon<()> = Echelon::new();
    for row in out_rows {
        fit.insert(row, Rational::zero(), ());
    }
    let mut quotient: Echelon<Option<String>> = Echelon::new();
    for combo in fit.nullspace(u_basis.len()) {
        let mut v = SparseRow::new();
        for (ui, c) in combo {
            for (col, a) in &in_vecs[ui] {
                let e = v.entry(*col).or_insert_with(Rational::zero);
                *e += &(a * &c);
                if e.is_zero() {
                    v.remove(col);
                }
            }
        }
        quotient.insert(v, Rational::zero(), None);
    }
    let dim_inner = quotient.rank();
    let dim_derivations = derivations.len();
    let quotient_dim = dim_derivations - dim_inner;

    let to_table = |v: &SparseRow| -> Result<DerivationTable> {
        let mut values: BTreeMap<Symbol, Tensor2> = BTreeMap::new();
        for (col, c) in v {
            let (s, p) = cols.key(*col);
            values
                .entry(s.clone())
                .or_default()
                .add_term(p.clone(), c.clone());
        }
        DerivationTable::new(&alg, radius, Some(degree.clone()), values)
    };
    let to_vec = |t: &DerivationTable| -> Option<SparseRow> {
        let mut v = SparseRow::new();
        for (s, val) in t.values() {
            for (k, c) in val {
                v.insert(cols.get(&(s.clone(), k.clone()))?, c.clone());
            }
        }
        Some(v)
    };

    let mut reps = Vec::new();
    if degree.is_zero() {
        let mut candidates = Vec::new();
        if !alg.is_centerless() {
            for family in CentralFamily::ALL {
                for c in alg.center_basis() {
                    let ce = Element::basis(c.clone());
                    for mirrored in [false, true] {
                        candidates.push((
                            family.label(&c, mirrored),
                            central_outer(&alg, family, &ce, mirrored, radius)?,
                        ));
                    }
                }
            }
        }
        candidates.push(("harmonic".to_string(), harmonic_outer(&alg, radius)?));
        for (label, t) in candidates {
            let Some(v) = to_vec(&t) else { continue };
            if reps.len() < quotient_dim
                && derivation_check(&t, radius)?.passed()
                && matches!(
                    quotient.insert(v, Rational::zero(), Some(label.clone())),
                    crate::linsys::Insert::Pivot { .. }
                )
            {
                reps.push((Some(label), t));
            }
        }
    }
    for v in &derivations {
        if reps.len() >= quotient_dim {
            break;
        }
        if let crate::linsys::Insert::Pivot { .. } =
            quotient.insert(v.clone(), Rational::zero(), None)
        {
            reps.push((None, to_table(v)?));
        }
    }

    let confirmed_inner = if degree.is_zero() {
        None
    } else {
        let mut n = 0;
        for v in &derivations {
            if claim2_representative(&to_table(v)?, degree).is_ok() {
                n += 1;
            }
        }
        Some(n)
    };

    Ok(H1Report {
        variant: alg.variant(),
        degree: degree.clone(),
        radius,
        inner_support_radius: support_radius,
        dim_derivations,
        dim_inner,
        quotient_dim,
        confirmed_inner,
        representatives: reps
            .into_iter()
            .map(|(label, t)| H1Representative {
                label,
                assignments: t
                    .values()
                    .iter()
                    .map(|(s, v)| (s.to_string(), v.to_string()))
                    .collect(),
            })
            .collect(),
    })
}

/// Basis pairs of `symbols`, without center (x) center, grouped by grade.
fn pairs_by_grade(alg: &Algebra, symbols: &[Symbol]) -> BTreeMap<GammaIndex, Vec<Pair>> {
    let mut out: BTreeMap<GammaIndex, Vec<Pair>> = BTreeMap::new();
    for p in symbols {
        for q in symbols {
            if alg.is_central(p) && alg.is_central(q) {
                continue;
            }
            let k = (p.clone(), q.clone());
            out.entry(k.grade()).or_default().push(k);
        }
    }
    out
}
