//! Second and third tensor powers of the algebra under the diagonal adjoint
//! action, with the twist and cyclic permutations.

use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;

pub type Pair = (Symbol, Symbol);
pub type Triple = (Symbol, Symbol, Symbol);
pub type Tensor2 = LinComb<Pair>;
pub type Tensor3 = LinComb<Triple>;

/// Basis keys of the adjoint module and its tensor powers.
pub trait TensorKey: Ord + Clone + Send + Sync {
    const RANK: usize;

    fn symbols(&self) -> Vec<&Symbol>;

    /// `x . key` under the diagonal action.
    fn act_symbol(alg: &Algebra, x: &Symbol, key: &Self) -> LinComb<Self>;

    fn grade(&self) -> Rational {
        self.symbols().into_iter().map(Symbol::grade).sum()
    }

    /// Every slot lies in the center of the full algebra.
    fn is_fully_central(&self) -> bool {
        self.symbols().into_iter().all(Symbol::is_central)
    }
}

impl TensorKey for Symbol {
    const RANK: usize = 1;

    fn symbols(&self) -> Vec<&Symbol> {
        vec![self]
    }

    fn act_symbol(alg: &Algebra, x: &Symbol, key: &Self) -> LinComb<Self> {
        alg.bracket_symbols(x, key)
    }
}

impl TensorKey for Pair {
    const RANK: usize = 2;

    fn symbols(&self) -> Vec<&Symbol> {
        vec![&self.0, &self.1]
    }

    fn act_symbol(alg: &Algebra, x: &Symbol, (a, b): &Self) -> LinComb<Self> {
        let mut out = LinComb::zero();
        for (s, c) in &alg.bracket_symbols(x, a) {
            out.add_term((s.clone(), b.clone()), c.clone());
        }
        for (s, c) in &alg.bracket_symbols(x, b) {
            out.add_term((a.clone(), s.clone()), c.clone());
        }
        out
    }
}

impl TensorKey for Triple {
    const RANK: usize = 3;

    fn symbols(&self) -> Vec<&Symbol> {
        vec![&self.0, &self.1, &self.2]
    }

    fn act_symbol(alg: &Algebra, x: &Symbol, (a, b, c): &Self) -> LinComb<Self> {
        let mut out = LinComb::zero();
        for (s, k) in &alg.bracket_symbols(x, a) {
            out.add_term((s.clone(), b.clone(), c.clone()), k.clone());
        }
        for (s, k) in &alg.bracket_symbols(x, b) {
            out.add_term((a.clone(), s.clone(), c.clone()), k.clone());
        }
        for (s, k) in &alg.bracket_symbols(x, c) {
            out.add_term((a.clone(), b.clone(), s.clone()), k.clone());
        }
        out
    }
}

impl Algebra {
    /// Diagonal adjoint action without validation.
    pub fn act_unchecked<K: TensorKey>(&self, x: &Element, t: &LinComb<K>) -> LinComb<K> {
        let mut out = LinComb::zero();
        for (s, cs) in x {
            for (k, ck) in t {
                out.add_scaled(&K::act_symbol(self, s, k), &(cs * ck));
            }
        }
        out
    }

    /// Action of a single basis vector.
    pub fn act_symbol<K: TensorKey>(&self, x: &Symbol, t: &LinComb<K>) -> LinComb<K> {
        let mut out = LinComb::zero();
        for (k, ck) in t {
            out.add_scaled(&K::act_symbol(self, x, k), ck);
        }
        out
    }

    /// `x . t` with `x . (a (x) b) = [x,a] (x) b + a (x) [x,b]`, slot-wise on
    /// triples.
    pub fn act<K: TensorKey>(&self, x: &Element, t: &LinComb<K>) -> Result<LinComb<K>> {
        self.check_element(x)
            .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
        self.check_tensor(t)
            .map_err(|e| Error::ConfigMismatch(e.to_string()))?;
        Ok(self.act_unchecked(x, t))
    }

    pub fn check_tensor<K: TensorKey>(&self, t: &LinComb<K>) -> Result<()> {
        t.keys()
            .flat_map(|k| k.symbols())
            .try_for_each(|s| self.check_symbol(s))
    }

    /// Drops terms whose slots are all central. Identity on the centerless
    /// algebra, where no symbol is central.
    pub fn mod_center<K: TensorKey>(&self, t: &LinComb<K>) -> LinComb<K> {
        if self.is_centerless() {
            t.clone()
        } else {
            t.filter(|k| !k.is_fully_central())
        }
    }
}

pub fn diag_act2(alg: &Algebra, x: &Element, t: &Tensor2) -> Result<Tensor2> {
    alg.act(x, t)
}

pub fn diag_act3(alg: &Algebra, x: &Element, t: &Tensor3) -> Result<Tensor3> {
    alg.act(x, t)
}

pub fn tensor2(a: &Element, b: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_term((x.clone(), y.clone()), cx * cy);
        }
    }
    out
}

pub fn tensor3(a: &Element, b: &Element, c: &Element) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((x, y), cxy) in &tensor2(a, b) {
        for (z, cz) in c {
            out.add_term((x.clone(), y.clone(), z.clone()), cxy * cz);
        }
    }
    out
}

/// `a (x) b - b (x) a`.
pub fn wedge(a: &Element, b: &Element) -> Tensor2 {
    &tensor2(a, b) - &tensor2(b, a)
}

/// `x (x) y -> y (x) x`.
pub fn twist(t: &Tensor2) -> Tensor2 {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// `x (x) y (x) z -> y (x) z (x) x`.
pub fn cyclic(t: &Tensor3) -> Tensor3 {
    t.map_keys(|(a, b, c)| (b.clone(), c.clone(), a.clone()))
}

/// `(1 + xi + xi^2) t`.
pub fn cyclic_sum(t: &Tensor3) -> Tensor3 {
    let t1 = cyclic(t);
    let t2 = cyclic(&t1);
    &(t + &t1) + &t2
}

/// Membership in `Im(1 - twist)`, decided by `twist(t) = -t`.
pub fn is_antisymmetric(t: &Tensor2) -> bool {
    t.iter()
        .all(|((a, b), c)| t.coeff(&(b.clone(), a.clone())) == -c)
}

/// Grade of a homogeneous tensor, `None` for zero or mixed grades.
pub fn homogeneous_grade<K: TensorKey>(t: &LinComb<K>) -> Option<Rational> {
    let mut grades = t.keys().map(TensorKey::grade);
    let first = grades.next()?;
    grades.all(|g| g == first).then_some(first)
}
