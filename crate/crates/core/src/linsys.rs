//! Incremental sparse Gaussian elimination over exact rationals.
//!
//! Rows are added one at a time and reduced against the pivots found so far.
//! The first nonzero column of a reduced row becomes its pivot and the row is
//! scaled to have leading coefficient 1. Solutions set free variables to zero.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::arith::Rational;

/// Sparse row: column -> nonzero coefficient.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Dense numbering of unknowns keyed by `K`.
#[derive(Debug, Clone)]
pub struct Vars<K> {
    keys: Vec<K>,
    index: HashMap<K, usize>,
}

impl<K: Clone + Eq + Hash> Default for Vars<K> {
    fn default() -> Self {
        Vars {
            keys: Vec::new(),
            index: HashMap::new(),
        }
    }
}

impl<K: Clone + Eq + Hash> Vars<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_keys(keys: impl IntoIterator<Item = K>) -> Self {
        let mut v = Self::new();
        for k in keys {
            v.intern(k);
        }
        v
    }

    pub fn intern(&mut self, k: K) -> usize {
        if let Some(&i) = self.index.get(&k) {
            return i;
        }
        self.keys.push(k.clone());
        self.index.insert(k, self.keys.len() - 1);
        self.keys.len() - 1
    }

    pub fn get(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Insert {
    /// The row is independent and now owns pivot column `col`.
    Pivot { col: usize },
    /// The row is a combination of earlier rows, right-hand sides included.
    Redundant,
    /// The row reduces to `0 = residual` with `residual != 0`.
    Inconsistent { residual: Rational },
}

#[derive(Debug, Clone)]
struct Row {
    coeffs: SparseRow,
    rhs: Rational,
}

/// Row echelon form built incrementally. `L` labels the original equation a
/// pivot row came from.
#[derive(Debug, Clone)]
pub struct Echelon<L> {
    rows: Vec<(Row, L)>,
    pivot_of: HashMap<usize, usize>,
}

impl<L: Clone> Default for Echelon<L> {
    fn default() -> Self {
        Echelon {
            rows: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }
}

impl<L: Clone> Echelon<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .map(|(r, _)| *r.coeffs.keys().next().expect("pivot rows are nonzero"))
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of.contains_key(&col)
    }

    /// Reduces `coeffs` and `rhs` by the current pivots.
    pub fn reduce(&self, coeffs: &mut SparseRow, rhs: &mut Rational) {
        let mut cursor = 0usize;
        loop {
            let next = coeffs
                .range(cursor..)
                .find(|(c, _)| self.pivot_of.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, factor)) = next else { break };
            let (prow, _) = &self.rows[self.pivot_of[&col]];
            for (c, v) in &prow.coeffs {
                let e = coeffs.entry(*c).or_insert_with(Rational::zero);
                *e -= &(&factor * v);
                if e.is_zero() {
                    coeffs.remove(c);
                }
            }
            *rhs -= &(&factor * &prow.rhs);
            cursor = col + 1;
        }
    }

    pub fn insert(&mut self, mut coeffs: SparseRow, mut rhs: Rational, label: L) -> Insert {
        coeffs.retain(|_, v| !v.is_zero());
        self.reduce(&mut coeffs, &mut rhs);
        let Some((&col, lead)) = coeffs.iter().next() else {
            return if rhs.is_zero() {
                Insert::Redundant
            } else {
                Insert::Inconsistent { residual: rhs }
            };
        };
        let inv = lead.recip().expect("nonzero lead");
        for v in coeffs.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        self.pivot_of.insert(col, self.rows.len());
        self.rows.push((Row { coeffs, rhs }, label));
        Insert::Pivot { col }
    }

    /// Whether a homogeneous row lies in the row space.
    pub fn contains(&self, coeffs: &SparseRow) -> bool {
        let mut c = coeffs.clone();
        c.retain(|_, v| !v.is_zero());
        let mut r = Rational::zero();
        self.reduce(&mut c, &mut r);
        c.is_empty()
    }

    /// Label of the row that owns pivot `col`.
    pub fn label_of(&self, col: usize) -> Option<&L> {
        self.pivot_of.get(&col).map(|&i| &self.rows[i].1)
    }

    /// A solution with every free variable at zero, as column -> value.
    pub fn particular_solution(&self) -> SparseRow {
        self.back_substitute(SparseRow::new(), true)
    }

    /// Nullspace basis over columns `0..ncols`: one vector per free column.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseRow> {
        (0..ncols)
            .filter(|c| !self.is_pivot(*c))
            .map(|free| {
                let mut seed = SparseRow::new();
                seed.insert(free, Rational::one());
                self.back_substitute(seed, false)
            })
            .collect()
    }

    // Later rows were reduced against earlier pivots, so they have zeros in
    // those columns; solving rows newest-first resolves every dependency.
    fn back_substitute(&self, mut x: SparseRow, with_rhs: bool) -> SparseRow {
        for (row, _) in self.rows.iter().rev() {
            let mut it = row.coeffs.iter();
            let (&col, _) = it.next().expect("pivot rows are nonzero");
            let mut v = if with_rhs {
                row.rhs.clone()
            } else {
                Rational::zero()
            };
            for (c, a) in it {
                if let Some(xc) = x.get(c) {
                    v -= &(a * xc);
                }
            }
            if !v.is_zero() {
                x.insert(col, v);
            }
        }
        x
    }
}

/// Evaluates `sum row[c] * x[c]`.
pub fn dot(row: &SparseRow, x: &SparseRow) -> Rational {
    row.iter()
        .filter_map(|(c, a)| x.get(c).map(|v| a * v))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn row(v: &[(usize, i64)]) -> SparseRow {
        v.iter()
            .map(|&(c, a)| (c, Rational::from_int(a)))
            .filter(|(_, a)| !a.is_zero())
            .collect()
    }

    #[test]
    fn small_system() {
        // x + y = 3, x - y = 1 -> x = 2, y = 1
        let mut e = Echelon::new();
        assert_eq!(
            e.insert(row(&[(0, 1), (1, 1)]), Rational::from_int(3), "a"),
            Insert::Pivot { col: 0 }
        );
        assert_eq!(
            e.insert(row(&[(0, 1), (1, -1)]), Rational::from_int(1), "b"),
            Insert::Pivot { col: 1 }
        );
        assert_eq!(
            e.insert(row(&[(0, 2)]), Rational::from_int(4), "c"),
            Insert::Redundant
        );
        assert_eq!(
            e.insert(row(&[(1, 1)]), Rational::from_int(2), "d"),
            Insert::Inconsistent {
                residual: Rational::from_int(1)
            }
        );
        let x = e.particular_solution();
        assert_eq!(x[&0], Rational::from_int(2));
        assert_eq!(x[&1], Rational::from_int(1));
        assert!(e.nullspace(2).is_empty());
        assert_eq!(e.label_of(1), Some(&"b"));
    }

    #[test]
    fn nullspace_of_a_line() {
        let mut e: Echelon<()> = Echelon::new();
        e.insert(row(&[(0, 1), (2, -1)]), Rational::zero(), ());
        let ns = e.nullspace(3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&row(&[(0, 1), (2, -1)]), v).is_zero());
        }
    }

    fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6)
            .prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-3i64..=3, n), m))
    }

    proptest! {
        #[test]
        fn solutions_satisfy_consistent_systems(a in matrix(), x0 in prop::collection::vec(-4i64..=4, 6)) {
            let n = a[0].len();
            let mut e = Echelon::new();
            for (i, r) in a.iter().enumerate() {
                let sr = row(&r.iter().copied().enumerate().collect::<Vec<_>>());
                let rhs: Rational = r.iter().zip(&x0).map(|(c, v)| Rational::from_int(c * v)).sum();
                let ins = e.insert(sr, rhs, i);
                let consistent = !matches!(ins, Insert::Inconsistent { .. });
                prop_assert!(consistent);
            }
            let x = e.particular_solution();
            for r in &a {
                let sr = row(&r.iter().copied().enumerate().collect::<Vec<_>>());
                let rhs: Rational = r.iter().zip(&x0).map(|(c, v)| Rational::from_int(c * v)).sum();
                prop_assert_eq!(dot(&sr, &x), rhs);
            }
            let ns = e.nullspace(n);
            prop_assert_eq!(ns.len() + e.rank(), n);
            for v in &ns {
                for r in &a {
                    let sr = row(&r.iter().copied().enumerate().collect::<Vec<_>>());
                    prop_assert!(dot(&sr, v).is_zero());
                }
            }
        }
    }
}
