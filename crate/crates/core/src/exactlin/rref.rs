//! Sparse Gauss-Jordan elimination.
//!
//! Rows are inserted one at a time into an echelon basis keyed by leading
//! column; each incoming row is reduced by its leading term until it is zero
//! or opens a new pivot. Back-substitution then clears every pivot column.
//! The reduced row echelon form is unique, so the result does not depend on
//! insertion order.

use std::collections::BTreeMap;

use super::{Rational, RationalMatrix, SparseVec};

/// Pivot column -> row with a leading 1 in that column.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Echelon::default()
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` by leading terms; returns what is left (zero if the row
    /// lies in the current span).
    pub(crate) fn reduce(&self, mut row: SparseVec) -> SparseVec {
        while let Some((lead, coef)) = row.leading() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = -coef;
                    row = row.add_scaled(&c, p);
                }
                None => break,
            }
        }
        row
    }

    /// Inserts `row`; true if it raised the rank.
    pub(crate) fn insert(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((lead, coef)) = row.leading() else {
            return false;
        };
        let inv = coef.recip().expect("leading entry is nonzero");
        let normalized = if inv.is_one() { row } else { row.scale(&inv) };
        self.pivots.insert(lead, normalized);
        true
    }

    pub(crate) fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    /// Fully reduced rows, ordered by pivot column.
    pub(crate) fn into_reduced(self) -> Vec<(usize, SparseVec)> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        // Highest pivot first: every row a given row is reduced against is
        // already free of other pivot columns.
        for (pivot, row) in self.pivots.into_iter().rev() {
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(c, _)| *c != pivot && done.contains_key(c))
                .map(|(c, v)| (c, v.clone()))
                .collect();
            let mut reduced = row;
            for (c, v) in hits {
                reduced = reduced.add_scaled(&-v, &done[&c]);
            }
            done.insert(pivot, reduced);
        }
        done.into_iter().collect()
    }
}

/// Reduced row echelon form of `m` (same shape, zero rows last) and its pivot
/// columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut ech = Echelon::new();
    for row in m.row_vecs() {
        ech.insert(row.clone());
    }
    let reduced = ech.into_reduced();
    let pivots: Vec<usize> = reduced.iter().map(|(p, _)| *p).collect();
    let mut rows: Vec<SparseVec> = reduced.into_iter().map(|(_, r)| r).collect();
    rows.resize(m.rows(), SparseVec::new());
    let out = RationalMatrix::from_rows(m.cols(), rows).expect("columns preserved");
    (out, pivots)
}

pub fn rank(m: &RationalMatrix) -> usize {
    let mut ech = Echelon::new();
    let bound = m.rows().min(m.cols());
    for row in m.row_vecs() {
        ech.insert(row.clone());
        if ech.rank() == bound {
            break;
        }
    }
    ech.rank()
}
