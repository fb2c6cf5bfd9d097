//! Exact symbolic engine for the generalized Heisenberg-Virasoro algebra:
//! structure constants, tensor modules, coboundary Lie bialgebras and a
//! derivation laboratory working over finite index windows.

pub mod algebra;
pub mod arith;
pub mod bialgebra;
pub mod derivation;
pub mod error;
pub mod expr;
pub mod lincomb;
pub mod linsys;
pub mod report;
pub mod sample;
pub mod tensor;

pub use algebra::{Algebra, AlgebraConfig, Element, MixedCocycle, Symbol, Variant};
pub use arith::{GammaIndex, GroupSpec, Rational};
pub use error::{Error, Result};
pub use report::{CheckReport, Status, SuiteReport};
pub use tensor::{Tensor2, Tensor3};
