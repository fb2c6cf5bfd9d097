//! Exact scalars and index groups.

mod group;
mod rational;

pub use group::{gamma_member, GammaIndex, GroupSpec};
pub use rational::{rat_arith, ArithOp, Rational};
