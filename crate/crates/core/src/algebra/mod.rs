//! The generalized Heisenberg-Virasoro algebra as a sparse structure-constant
//! engine.
//!
//! Basis: `L(x)`, `I(x)` for `x` in the index group, plus central `C_L`,
//! `C_I`, `C_LI`. Brackets:
//!
//! ```text
//! [L(x), L(y)] = (y - x) L(x+y) + d(x+y) (x^3 - x)/12 C_L
//! [I(x), I(y)] = y d(x+y) C_I
//! [L(x), I(y)] = y I(x+y) + d(x+y) m(x)
//! ```
//!
//! where `d` is the Kronecker delta at zero and the mixed central term `m(x)`
//! is `(x^2 - x) C_L` by default; see [`MixedCocycle`]. The centerless
//! variant is the quotient by `span{I(0), C_L, C_I, C_LI}`.

mod axioms;
mod symbol;

pub use axioms::verify_algebra_axioms;
pub use symbol::{scan_order, Kind, Symbol};

use serde::{Deserialize, Serialize};

use crate::arith::{GammaIndex, GroupSpec, Rational};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

/// A finite-support element of the algebra.
pub type Element = LinComb<Symbol>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Centerless,
}

/// Central term of `[L(x), I(-x)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MixedCocycle {
    /// `(x^2 - x) C_L`; `C_LI` then never appears in a bracket.
    Paper,
    /// `(x^2 + x) C_LI`.
    Standard,
    /// `(x^3 - x) C_L`. Not a 2-cocycle: Jacobi fails. Kept so the axiom
    /// verifier can be exercised on a broken algebra.
    Cubic,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Centerless => "centerless",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "centerless" => Ok(Variant::Centerless),
            _ => Err(Error::Config(format!("unknown variant `{s}`"))),
        }
    }
}

impl std::str::FromStr for MixedCocycle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(MixedCocycle::Paper),
            "standard" => Ok(MixedCocycle::Standard),
            "cubic" => Ok(MixedCocycle::Cubic),
            _ => Err(Error::Config(format!("unknown mixed_cocycle `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    #[serde(rename = "generators")]
    pub group: GroupSpec,
    pub variant: Variant,
    pub mixed_cocycle: MixedCocycle,
}

impl AlgebraConfig {
    pub fn new(group: GroupSpec, variant: Variant, mixed_cocycle: MixedCocycle) -> Self {
        AlgebraConfig {
            group,
            variant,
            mixed_cocycle,
        }
    }

    /// Integers, full variant, default mixed cocycle.
    pub fn integers(variant: Variant) -> Self {
        AlgebraConfig::new(GroupSpec::integers(), variant, MixedCocycle::Paper)
    }
}

/// Evaluation context for one algebra configuration. Elements and tensors are
/// plain values; the context validates that they belong to its configuration
/// and supplies the structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    config: AlgebraConfig,
}

impl Algebra {
    pub fn new(config: AlgebraConfig) -> Self {
        Algebra { config }
    }

    pub fn integers(variant: Variant) -> Self {
        Algebra::new(AlgebraConfig::integers(variant))
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    pub fn variant(&self) -> Variant {
        self.config.variant
    }

    pub fn group(&self) -> &GroupSpec {
        &self.config.group
    }

    pub fn is_centerless(&self) -> bool {
        self.config.variant == Variant::Centerless
    }

    /// The paired centerless quotient algebra.
    pub fn centerless(&self) -> Algebra {
        Algebra::new(AlgebraConfig {
            variant: Variant::Centerless,
            ..self.config.clone()
        })
    }

    pub fn full(&self) -> Algebra {
        Algebra::new(AlgebraConfig {
            variant: Variant::Full,
            ..self.config.clone()
        })
    }

    /// Whether `s` is a basis vector of this algebra.
    pub fn check_symbol(&self, s: &Symbol) -> Result<()> {
        if let Some(x) = s.index() {
            if !self.config.group.contains(x) {
                return Err(Error::NotInGroup { index: x.clone() });
            }
        }
        if self.is_centerless() && s.is_central() {
            return Err(Error::CentralInCenterless {
                symbol: s.to_string(),
            });
        }
        Ok(())
    }

    pub fn check_element(&self, e: &Element) -> Result<()> {
        e.keys().try_for_each(|s| self.check_symbol(s))
    }

    pub fn symbol(&self, s: Symbol) -> Result<Symbol> {
        self.check_symbol(&s)?;
        Ok(s)
    }

    pub fn l(&self, x: impl Into<Rational>) -> Result<Element> {
        Ok(Element::basis(self.symbol(Symbol::L(x.into()))?))
    }

    pub fn i(&self, x: impl Into<Rational>) -> Result<Element> {
        Ok(Element::basis(self.symbol(Symbol::I(x.into()))?))
    }

    /// Whether `s` is central here. The centerless algebra has no center.
    pub fn is_central(&self, s: &Symbol) -> bool {
        !self.is_centerless() && s.is_central()
    }

    /// Basis of the center: `I(0), C_L, C_I, C_LI` (empty when centerless).
    pub fn center_basis(&self) -> Vec<Symbol> {
        if self.is_centerless() {
            Vec::new()
        } else {
            vec![
                Symbol::I(Rational::zero()),
                Symbol::CL,
                Symbol::CI,
                Symbol::CLI,
            ]
        }
    }

    /// Basis vectors with index in `window(radius)`, central ones included,
    /// in canonical order.
    pub fn basis_window(&self, radius: u32) -> Vec<Symbol> {
        let mut out = Vec::new();
        for x in self.config.group.window(radius) {
            out.push(Symbol::L(x.clone()));
            if !(self.is_centerless() && x.is_zero()) {
                out.push(Symbol::I(x));
            }
        }
        if !self.is_centerless() {
            out.extend([Symbol::CL, Symbol::CI, Symbol::CLI]);
        }
        out.sort();
        out
    }

    /// Like [`Algebra::basis_window`], in center-out scan order.
    pub fn scan_window(&self, radius: u32) -> Vec<Symbol> {
        let mut v = self.basis_window(radius);
        scan_order(&mut v);
        v
    }

    pub fn in_window(&self, s: &Symbol, radius: u32) -> bool {
        match s.index() {
            Some(x) => self.config.group.window_contains(x, radius),
            None => true,
        }
    }

    fn mixed_term(&self, x: &GammaIndex, out: &mut Element) {
        let x2 = x * x;
        match self.config.mixed_cocycle {
            MixedCocycle::Paper => out.add_term(Symbol::CL, &x2 - x),
            MixedCocycle::Standard => out.add_term(Symbol::CLI, &x2 + x),
            MixedCocycle::Cubic => out.add_term(Symbol::CL, &(&x2 * x) - x),
        }
    }

    /// Bracket of two basis vectors. No validation.
    pub fn bracket_symbols(&self, a: &Symbol, b: &Symbol) -> Element {
        let mut out = Element::zero();
        match (a, b) {
            (Symbol::L(x), Symbol::L(y)) => {
                let s = x + y;
                if s.is_zero() {
                    let c = (&(&(x * x) * x) - x).checked_div(&Rational::from_int(12));
                    out.add_term(Symbol::CL, c.expect("nonzero"));
                }
                out.add_term(Symbol::L(s), y - x);
            }
            (Symbol::I(x), Symbol::I(y)) => {
                if (x + y).is_zero() {
                    out.add_term(Symbol::CI, y.clone());
                }
            }
            (Symbol::L(x), Symbol::I(y)) => {
                let s = x + y;
                if s.is_zero() {
                    self.mixed_term(x, &mut out);
                }
                out.add_term(Symbol::I(s), y.clone());
            }
            (Symbol::I(_), Symbol::L(_)) => return -&self.bracket_symbols(b, a),
            _ => {}
        }
        if self.is_centerless() {
            out = out.filter(|s| !s.is_central());
        }
        out
    }

    /// Bilinear bracket. No validation; see [`Algebra::bracket`].
    pub fn bracket_unchecked(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                out.add_scaled(&self.bracket_symbols(x, y), &(cx * cy));
            }
        }
        out
    }

    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a).map_err(mismatch)?;
        self.check_element(b).map_err(mismatch)?;
        Ok(self.bracket_unchecked(a, b))
    }

    /// Splits `a` into homogeneous components, in increasing grade.
    pub fn grade_decompose(&self, a: &Element) -> Vec<(GammaIndex, Element)> {
        let mut parts: Vec<(GammaIndex, Element)> = Vec::new();
        for (s, c) in a {
            let g = s.grade();
            match parts.iter_mut().find(|(h, _)| *h == g) {
                Some((_, e)) => e.add_term(s.clone(), c.clone()),
                None => parts.push((g, Element::term(s.clone(), c.clone()))),
            }
        }
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        parts
    }

    /// Image under the quotient map onto the centerless algebra.
    pub fn quotient_centerless(&self, a: &Element) -> Result<Element> {
        if self.is_centerless() {
            return Err(Error::Precondition(
                "quotient map starts from the full algebra".into(),
            ));
        }
        self.check_element(a)?;
        Ok(a.filter(|s| !s.is_central()))
    }
}

fn mismatch(e: Error) -> Error {
    match e {
        Error::NotInGroup { .. } | Error::CentralInCenterless { .. } => {
            Error::ConfigMismatch(e.to_string())
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn full() -> Algebra {
        Algebra::integers(Variant::Full)
    }

    fn el(terms: &[(Symbol, Rational)]) -> Element {
        terms.iter().cloned().collect()
    }

    #[test]
    fn virasoro_brackets() {
        let a = full();
        assert_eq!(
            a.bracket(&a.l(-1).unwrap(), &a.l(1).unwrap()).unwrap(),
            el(&[(Symbol::l(0), q(2, 1))])
        );
        // (1/12)(27 - 3) = 2
        assert_eq!(
            a.bracket(&a.l(3).unwrap(), &a.l(-3).unwrap()).unwrap(),
            el(&[(Symbol::l(0), q(-6, 1)), (Symbol::CL, q(2, 1))])
        );
    }

    #[test]
    fn heisenberg_bracket() {
        let a = full();
        assert_eq!(
            a.bracket(&a.i(2).unwrap(), &a.i(-2).unwrap()).unwrap(),
            el(&[(Symbol::CI, q(-2, 1))])
        );
    }

    #[test]
    fn mixed_bracket_shifts_index() {
        let a = full();
        for nu in [-3i64, -1, 2, 5] {
            let got = a.bracket(&a.l(nu - 1).unwrap(), &a.i(1).unwrap()).unwrap();
            assert_eq!(got, a.i(nu).unwrap());
        }
    }

    // The defining relations give 4 L(0) - 1/2 C_L here. Some written
    // derivations use L(0) + 1/2 C_L instead, which contradicts the relations.
    #[test]
    fn l_minus_two_l_two_follows_the_defining_relations() {
        let a = full();
        let got = a.bracket(&a.l(-2).unwrap(), &a.l(2).unwrap()).unwrap();
        assert_eq!(got, el(&[(Symbol::l(0), q(4, 1)), (Symbol::CL, q(-1, 2))]));
        assert_ne!(got, el(&[(Symbol::l(0), q(1, 1)), (Symbol::CL, q(1, 2))]));
    }

    #[test]
    fn mixed_cocycle_variants() {
        let paper = full();
        let std = Algebra::new(AlgebraConfig::new(
            GroupSpec::integers(),
            Variant::Full,
            MixedCocycle::Standard,
        ));
        let l = Symbol::l(3);
        let i = Symbol::i(-3);
        assert_eq!(
            paper.bracket_symbols(&l, &i),
            el(&[(Symbol::i(0), q(-3, 1)), (Symbol::CL, q(6, 1))])
        );
        assert_eq!(
            std.bracket_symbols(&l, &i),
            el(&[(Symbol::i(0), q(-3, 1)), (Symbol::CLI, q(12, 1))])
        );
    }

    #[test]
    fn grading() {
        let a = full();
        let x = el(&[(Symbol::l(2), q(1, 1)), (Symbol::CL, q(3, 1))]);
        let parts = a.grade_decompose(&x);
        assert_eq!(
            parts,
            vec![
                (q(0, 1), el(&[(Symbol::CL, q(3, 1))])),
                (q(2, 1), el(&[(Symbol::l(2), q(1, 1))]))
            ]
        );
        assert!(a.grade_decompose(&Element::zero()).is_empty());
        let y = el(&[(Symbol::l(1), q(1, 2)), (Symbol::i(1), q(1, 1))]);
        assert_eq!(a.grade_decompose(&y), vec![(q(1, 1), y.clone())]);
    }

    #[test]
    fn quotient_drops_the_center() {
        let a = full();
        let x = el(&[(Symbol::l(1), q(2, 1)), (Symbol::CL, q(3, 1))]);
        assert_eq!(
            a.quotient_centerless(&x).unwrap(),
            el(&[(Symbol::l(1), q(2, 1))])
        );
        assert!(a.quotient_centerless(&a.i(0).unwrap()).unwrap().is_zero());
        assert_eq!(
            a.quotient_centerless(&a.l(5).unwrap()).unwrap(),
            a.l(5).unwrap()
        );
        assert!(a.centerless().quotient_centerless(&x).is_err());
    }

    #[test]
    fn validation() {
        let a = full();
        let c = a.centerless();
        assert!(matches!(a.l(q(1, 3)), Err(Error::NotInGroup { .. })));
        assert!(matches!(c.i(0), Err(Error::CentralInCenterless { .. })));
        let foreign = Element::basis(Symbol::CL);
        assert!(matches!(
            c.bracket(&foreign, &c.l(1).unwrap()),
            Err(Error::ConfigMismatch(_))
        ));
    }

    #[test]
    fn center_is_central() {
        let a = full();
        for c in a.center_basis() {
            for x in a.basis_window(4) {
                assert!(a.bracket_symbols(&c, &x).is_zero(), "[{c:?}, {x:?}]");
            }
        }
    }

    fn element(alg: Algebra) -> impl Strategy<Value = Element> {
        let syms = alg.basis_window(3);
        prop::collection::vec((prop::sample::select(syms), -4i64..=4), 0..5).prop_map(|v| {
            v.into_iter()
                .map(|(s, c)| (s, Rational::from_int(c)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn quotient_is_a_homomorphism(a in element(full()), b in element(full())) {
            let alg = full();
            let bar = alg.centerless();
            let lhs = alg.quotient_centerless(&alg.bracket(&a, &b).unwrap()).unwrap();
            let qa = alg.quotient_centerless(&a).unwrap();
            let qb = alg.quotient_centerless(&b).unwrap();
            prop_assert_eq!(lhs, bar.bracket(&qa, &qb).unwrap());
        }

        #[test]
        fn bracket_is_homogeneous(a in element(full()), b in element(full())) {
            let alg = full();
            for (ga, pa) in alg.grade_decompose(&a) {
                for (gb, pb) in alg.grade_decompose(&b) {
                    let br = alg.bracket(&pa, &pb).unwrap();
                    prop_assert!(br.keys().all(|s| s.grade() == &ga + &gb));
                }
            }
        }
    }
}
