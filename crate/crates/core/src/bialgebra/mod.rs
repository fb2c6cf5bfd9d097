//! Coboundary cobrackets, the classical Yang-Baxter defect, the Lie
//! bialgebra axioms and the decomposition of a cobracket into a coboundary
//! plus a sigma term.

mod axioms;
mod decompose;
mod table;
mod yang_baxter;

pub use axioms::{bialgebra_axiom_check, bialgebra_axiom_check_exact};
pub use decompose::{
    cobracket_decompose, DecomposeOutcome, Decomposition, InfeasibleRow, SigmaTerm,
};
pub(crate) use table::check_central;
pub use table::{CobracketTable, Provenance};
pub use yang_baxter::{
    cybe_defect, cybe_defect_unchecked, drinfeld_identity_check, drinfeld_sides, mybe_check,
    one_tensor_delta, triangular_pair, DrinfeldReport,
};

/// The coboundary cobracket `D_r(x) = x.r`.
pub fn delta_r(
    alg: &crate::Algebra,
    r: &crate::Tensor2,
    x: &crate::Element,
) -> crate::Result<crate::Tensor2> {
    alg.act(x, r)
}
