use std::cmp::Ordering;

use crate::arith::{GammaIndex, Rational};

/// Kinds of basis vectors, in canonical print order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    L,
    I,
    CL,
    CI,
    CLI,
}

/// A basis vector: `L(x)`, `I(x)` or one of the three central generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Symbol {
    L(GammaIndex),
    I(GammaIndex),
    CL,
    CI,
    CLI,
}

impl Symbol {
    pub fn l(x: impl Into<Rational>) -> Self {
        Symbol::L(x.into())
    }

    pub fn i(x: impl Into<Rational>) -> Self {
        Symbol::I(x.into())
    }

    pub fn kind(&self) -> Kind {
        match self {
            Symbol::L(_) => Kind::L,
            Symbol::I(_) => Kind::I,
            Symbol::CL => Kind::CL,
            Symbol::CI => Kind::CI,
            Symbol::CLI => Kind::CLI,
        }
    }

    pub fn index(&self) -> Option<&GammaIndex> {
        match self {
            Symbol::L(x) | Symbol::I(x) => Some(x),
            _ => None,
        }
    }

    /// Central generators live in degree 0.
    pub fn grade(&self) -> Rational {
        self.index().cloned().unwrap_or_default()
    }

    /// Member of the center `span{I(0), C_L, C_I, C_LI}` of the full algebra.
    pub fn is_central(&self) -> bool {
        match self {
            Symbol::L(_) => false,
            Symbol::I(x) => x.is_zero(),
            _ => true,
        }
    }

    fn grade_ref(&self) -> Option<&Rational> {
        self.index()
    }
}

/// Ordered by grade, then kind `L < I < C_L < C_I < C_LI`.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        let zero = Rational::zero();
        let a = self.grade_ref().unwrap_or(&zero);
        let b = other.grade_ref().unwrap_or(&zero);
        a.cmp(b).then(self.kind().cmp(&other.kind()))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorts symbols center-out: by `|grade|`, then grade, then kind. Window
/// scans use this order so reported witnesses start at degree 0.
pub fn scan_order(symbols: &mut [Symbol]) {
    symbols.sort_by(|a, b| {
        let (ga, gb) = (a.grade(), b.grade());
        ga.abs().cmp(&gb.abs()).then_with(|| a.cmp(b))
    });
}
