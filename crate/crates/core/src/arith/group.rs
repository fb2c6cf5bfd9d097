//! Finitely generated subgroups of the rationals, used as index groups.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// An element of the index group. Indices are realized directly as
/// rationals, so the pairing with the grading derivation is the identity.
pub type GammaIndex = Rational;

/// The index group: all integer combinations of `generators`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct GroupSpec {
    generators: Vec<Rational>,
    /// Positive generator of the (necessarily cyclic) subgroup.
    cyclic: Rational,
}

impl GroupSpec {
    pub fn new(generators: Vec<Rational>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Config("group needs at least one generator".into()));
        }
        if let Some(z) = generators.iter().find(|g| g.is_zero()) {
            return Err(Error::Config(format!(
                "group generator must be nonzero, got {z}"
            )));
        }
        let cyclic = generators
            .iter()
            .skip(1)
            .fold(generators[0].abs(), |acc, g| acc.gcd(g));
        Ok(GroupSpec { generators, cyclic })
    }

    /// The integers.
    pub fn integers() -> Self {
        GroupSpec::new(vec![Rational::one()]).expect("nonzero generator")
    }

    pub fn generators(&self) -> &[Rational] {
        &self.generators
    }

    /// A single positive generator of the same subgroup.
    pub fn cyclic_generator(&self) -> &Rational {
        &self.cyclic
    }

    /// Whether `x` is an integer combination of the generators. A finitely
    /// generated subgroup of Q is cyclic, generated by the subgroup gcd.
    pub fn contains(&self, x: &Rational) -> bool {
        (x / &self.cyclic).is_integer()
    }

    /// All `sum c_i g_i` with `|c_i| <= radius`, deduplicated and sorted.
    pub fn window(&self, radius: u32) -> Vec<GammaIndex> {
        let r = radius as i64;
        let mut acc: BTreeSet<Rational> = BTreeSet::from([Rational::zero()]);
        for g in &self.generators {
            let mut next = BTreeSet::new();
            for base in &acc {
                for c in -r..=r {
                    next.insert(base + &(g * &Rational::from_int(c)));
                }
            }
            acc = next;
        }
        acc.into_iter().collect()
    }

    /// Membership in `window(radius)` without materializing it for the
    /// single-generator case.
    pub fn window_contains(&self, x: &Rational, radius: u32) -> bool {
        if let [g] = self.generators.as_slice() {
            let c = x / g;
            return c.is_integer() && c.abs() <= Rational::from_int(radius as i64);
        }
        self.window(radius).binary_search(x).is_ok()
    }
}

impl TryFrom<Vec<Rational>> for GroupSpec {
    type Error = Error;
    fn try_from(v: Vec<Rational>) -> Result<Self> {
        GroupSpec::new(v)
    }
}

impl From<GroupSpec> for Vec<Rational> {
    fn from(g: GroupSpec) -> Self {
        g.generators
    }
}

/// Free-function form of [`GroupSpec::contains`].
pub fn gamma_member(x: &Rational, group: &GroupSpec) -> bool {
    group.contains(x)
}
