//! Exact sparse linear algebra over ℚ.
//!
//! Rows are cleared to primitive integer vectors and eliminated
//! fraction-free; after every combination the row is divided by the gcd of
//! its entries. Pivots are taken at the *last* nonzero column of each row,
//! which makes the nullspace basis come out in reduced echelon form with
//! respect to the natural column order: each basis vector has a leading `1`
//! at a free column and is zero at every other free column.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;
type IntRow = BTreeMap<usize, BigInt>;

fn to_int_row(row: &SparseVec) -> IntRow {
    let lcm = row.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&i, c)| (i, (c * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    normalize(&mut out);
    out
}

fn normalize(row: &mut IntRow) {
    row.retain(|_, v| !v.is_zero());
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let negative = row.values().next_back().is_some_and(Signed::is_negative);
    if g.is_zero() {
        return;
    }
    let g = if negative { -g } else { g };
    if !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a·row − b·other`
fn combine(row: &IntRow, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
    let mut out: IntRow = row.iter().map(|(&i, v)| (i, v * a)).collect();
    for (&i, v) in other {
        let slot = out.entry(i).or_insert_with(BigInt::zero);
        *slot -= v * b;
    }
    normalize(&mut out);
    out
}

/// Row echelon form built one row at a time.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let mut row = to_int_row(row);
        loop {
            let Some((&col, lead)) = row.iter().next_back() else {
                return false;
            };
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let a = pivot[&col].clone();
                    let b = lead.clone();
                    row = combine(&row, &a, pivot, &b);
                }
                None => {
                    self.pivots.insert(col, row);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for &p in &cols {
            let pivot = self.pivots[&p].clone();
            let a = pivot[&p].clone();
            for &q in cols.iter().filter(|&&q| q > p) {
                let row = &self.pivots[&q];
                if let Some(b) = row.get(&p).cloned() {
                    let reduced = combine(row, &a, &pivot, &b);
                    self.pivots.insert(q, reduced);
                }
            }
        }
    }

    /// Basis of `{x : row·x = 0 for every inserted row}` within `0..ncols`.
    pub fn nullspace(mut self, ncols: usize) -> Vec<SparseVec> {
        self.reduce();
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !self.pivots.contains_key(c)) {
            let mut v = SparseVec::new();
            v.insert(free, Rational::one());
            for (&p, row) in self.pivots.range(free + 1..) {
                if let Some(entry) = row.get(&free) {
                    v.insert(p, -Rational::new(entry.clone(), row[&p].clone()));
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Nullspace of the given rows in reduced echelon form (see module docs).
pub fn nullspace<'a>(rows: impl IntoIterator<Item = &'a SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.nullspace(ncols)
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Sparse vector from a dense slice.
pub fn sparse(dense: &[Rational]) -> SparseVec {
    dense.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};
    use proptest::prelude::*;

    fn row(entries: &[i64]) -> SparseVec {
        sparse(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    fn dot(a: &SparseVec, b: &SparseVec) -> Rational {
        a.iter().filter_map(|(i, x)| b.get(i).map(|y| x * y)).sum()
    }

    #[test]
    fn simple_kernel() {
        // x0 + x1 = 0, x2 = 0 in three unknowns
        let rows = [row(&[1, 1, 0]), row(&[0, 0, 1])];
        let ns = nullspace(rows.iter(), 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], row(&[1, -1, 0]));
    }

    #[test]
    fn echelon_shape() {
        // kernel of [1 2 3] is 2-dimensional; leading entries at columns 0 and 1
        let rows = [row(&[1, 2, 3])];
        let ns = nullspace(rows.iter(), 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], sparse(&[int(1), int(0), frac(-1, 3)]));
        assert_eq!(ns[1], sparse(&[int(0), int(1), frac(-2, 3)]));
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let rows = [row(&[2, 1]), row(&[1, 1])];
        assert!(nullspace(rows.iter(), 2).is_empty());
        assert_eq!(rank(rows.iter()), 2);
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(entries in proptest::collection::vec(proptest::collection::vec(-3i64..4, 5), 0..5)) {
            let rows: Vec<SparseVec> = entries.iter().map(|r| row(r)).collect();
            let ns = nullspace(rows.iter(), 5);
            prop_assert_eq!(ns.len() + rank(rows.iter()), 5);
            for v in &ns {
                for r in &rows {
                    prop_assert!(dot(r, v).is_zero());
                }
            }
            // reduced echelon: leading ones at distinct columns, zero elsewhere among leads
            let leads: Vec<usize> = ns.iter().map(|v| *v.keys().next().unwrap()).collect();
            for (i, v) in ns.iter().enumerate() {
                prop_assert!(v[&leads[i]].is_one());
                for (j, &l) in leads.iter().enumerate() {
                    if i != j {
                        prop_assert!(!v.contains_key(&l));
                    }
                }
            }
        }
    }
}
