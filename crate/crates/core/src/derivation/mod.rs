//! Derivations from the algebra into its second tensor power, represented
//! as tables on windows: checking, inner derivations, homogeneous parts,
//! the outer `lambda (x) C` family, an inner-derivation solver, common
//! kernels of the action and a window-scale first cohomology probe.
//!
//! Throughout, tensors with both slots central are ignored when comparing
//! derivation values.

mod check;
mod h1;
mod inner;
mod kernel;
mod solve;
mod table;

pub use check::{derivation_check, derivation_check_exact};
pub use h1::{h1_probe, H1Report, H1Representative};
pub use inner::{
    central_outer, claim2_representative, degree_identity_check, harmonic_outer, homogeneous_split,
    inner_derivation, lambda_outer, mirrored_outer, CentralFamily,
};
pub use kernel::{common_kernel, KernelCertificate};
pub use solve::{solve_inner, InnerCertificate, InnerOutcome};
pub use table::DerivationTable;

#[cfg(test)]
mod tests;
