use std::collections::BTreeMap;

use super::rref::{rref, Echelon};
use super::{Rational, RationalMatrix, SparseVec};
use crate::error::Error;

/// A linearly independent family spanning a subspace of Q^ambient_dim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<SparseVec>,
}

impl SubspaceBasis {
    /// Wraps `vectors`, verifying lengths and independence.
    pub fn new(ambient_dim: usize, vectors: Vec<SparseVec>) -> Result<Self, Error> {
        let mut ech = Echelon::new();
        for v in &vectors {
            if v.support_bound() > ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.support_bound(),
                });
            }
            if !ech.insert(v.clone()) {
                return Err(Error::DependentVectors);
            }
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
        })
    }

    /// The span of arbitrary vectors, returned in canonical (RREF) basis.
    pub fn span(ambient_dim: usize, vectors: &[SparseVec]) -> Result<Self, Error> {
        let m = RationalMatrix::from_rows(ambient_dim, vectors.to_vec())?;
        let (r, pivots) = rref(&m);
        let mut rows = r.into_rows();
        rows.truncate(pivots.len());
        Ok(SubspaceBasis {
            ambient_dim,
            vectors: rows,
        })
    }

    pub(crate) fn from_independent(ambient_dim: usize, vectors: Vec<SparseVec>) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: (0..ambient_dim).map(SparseVec::unit).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    /// `ambient_dim × dim` matrix with the basis vectors as columns.
    pub fn as_columns(&self) -> RationalMatrix {
        RationalMatrix::from_columns(self.ambient_dim, &self.vectors).expect("lengths checked")
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut ech = Echelon::new();
        for b in &self.vectors {
            ech.insert(b.clone());
        }
        ech.contains(v)
    }

    /// Same span as `other` (both live in the same ambient space).
    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.vectors.iter().all(|v| self.contains(v))
    }

    /// `u + v`.
    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let all: Vec<SparseVec> = self.vectors.iter().chain(&other.vectors).cloned().collect();
        SubspaceBasis::span(self.ambient_dim, &all)
    }
}

/// Basis of the right null space, one vector per free column of the RREF.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut free: BTreeMap<usize, Vec<(usize, Rational)>> = (0..m.cols())
        .filter(|c| !pivot_set.contains(c))
        .map(|c| (c, Vec::new()))
        .collect();
    for (row, &p) in r.row_vecs().iter().zip(&pivots) {
        for (c, v) in row.iter() {
            if c != p {
                free.get_mut(&c).expect("non-pivot entry").push((p, -v));
            }
        }
    }
    let vectors = free
        .into_iter()
        .map(|(f, mut entries)| {
            entries.push((f, Rational::one()));
            entries.sort_by_key(|(i, _)| *i);
            SparseVec::from_sorted_unchecked(entries)
        })
        .collect();
    SubspaceBasis::from_independent(m.cols(), vectors)
}

/// Basis of the column space, canonical (RREF of the transpose).
pub fn image_basis(m: &RationalMatrix) -> SubspaceBasis {
    let t = m.transpose();
    SubspaceBasis::span(m.rows(), t.row_vecs()).expect("transpose rows fit")
}

/// `u ∩ v` via the kernel of `[U | -V]`: each kernel vector `(x, y)` gives
/// the common element `U x = V y`.
pub fn intersect(u: &SubspaceBasis, v: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
    if u.ambient_dim != v.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: u.ambient_dim,
            found: v.ambient_dim,
        });
    }
    let ku = u.dim();
    let neg_v: Vec<SparseVec> = v
        .vectors
        .iter()
        .map(|x| x.scale(&Rational::from(-1)))
        .collect();
    let mut columns = u.vectors.clone();
    columns.extend(neg_v);
    let joint = RationalMatrix::from_columns(u.ambient_dim, &columns)?;
    let ker = kernel_basis(&joint);
    let u_cols = u.as_columns();
    let common: Vec<SparseVec> = ker
        .vectors()
        .iter()
        .map(|xy| {
            let x = SparseVec::from_sorted_unchecked(
                xy.iter()
                    .filter(|(i, _)| *i < ku)
                    .map(|(i, c)| (i, c.clone()))
                    .collect(),
            );
            u_cols.mul_vec(&x).expect("x has ku coordinates")
        })
        .collect();
    SubspaceBasis::span(u.ambient_dim, &common)
}

/// The matrix of `m` restricted to `domain`: columns are `m` applied to each
/// basis vector, so domain coordinates are the basis coordinates.
pub fn restrict_and_project(
    m: &RationalMatrix,
    domain: &SubspaceBasis,
) -> Result<RationalMatrix, Error> {
    if m.cols() != domain.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            found: domain.ambient_dim(),
        });
    }
    m.mul(&domain.as_columns())
}
