use std::hash::Hash;

use crate::algebra::{Algebra, Symbol};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::linsys::{Echelon, Insert, SparseRow, Vars};
use crate::tensor::TensorKey;

/// Basis of the tensors in a span that every probe annihilates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelCertificate<K: Ord> {
    pub probes: Vec<Symbol>,
    /// Dimension of the input span.
    pub span_dim: usize,
    pub basis: Vec<LinComb<K>>,
}

impl<K: Ord> KernelCertificate<K> {
    pub fn is_trivial(&self) -> bool {
        self.basis.is_empty()
    }
}

/// `{c in span : x.c = 0 for every basis x indexed by window(probe_radius)}`,
/// computed exactly.
pub fn common_kernel<K: TensorKey + Hash>(
    alg: &Algebra,
    probe_radius: u32,
    span: &[LinComb<K>],
) -> Result<KernelCertificate<K>> {
    for t in span {
        alg.check_tensor(t)
            .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
    }
    // Independent subset of the span.
    let mut coords: Vars<K> = Vars::new();
    let mut ech: Echelon<()> = Echelon::new();
    let mut basis = Vec::new();
    for t in span {
        let row: SparseRow = t
            .iter()
            .map(|(k, c)| (coords.intern(k.clone()), c.clone()))
            .collect();
        if let Insert::Pivot { .. } = ech.insert(row, Default::default(), ()) {
            basis.push(t.clone());
        }
    }

    let probes = alg.scan_window(probe_radius);
    let mut images: Vars<(usize, K)> = Vars::new();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (i, t) in basis.iter().enumerate() {
        for (pi, x) in probes.iter().enumerate() {
            for (k, c) in &alg.act_symbol(x, t) {
                let r = images.intern((pi, k.clone()));
                if r == rows.len() {
                    rows.push(SparseRow::new());
                }
                rows[r].insert(i, c.clone());
            }
        }
    }
    let mut sys: Echelon<()> = Echelon::new();
    for row in rows {
        sys.insert(row, Default::default(), ());
    }
    let kernel = sys
        .nullspace(basis.len())
        .into_iter()
        .map(|v| {
            let mut out = LinComb::zero();
            for (i, c) in v {
                out.add_scaled(&basis[i], &c);
            }
            out
        })
        .collect();
    Ok(KernelCertificate {
        probes,
        span_dim: basis.len(),
        basis: kernel,
    })
}
