use std::collections::BTreeMap;

use super::Rational;
use crate::error::Error;
use crate::par;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from unsorted `(index, value)` pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            *acc.entry(i).or_default() += &v;
        }
        SparseVec::from_sorted_map(acc)
    }

    pub(crate) fn from_sorted_map(acc: BTreeMap<usize, Rational>) -> Self {
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Trusts the caller that indices are increasing and values nonzero.
    pub(crate) fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: vec![(index, Rational::one())],
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    /// Largest stored index plus one, zero when empty.
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other` by a sorted merge.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (xs, ys) = (&self.entries, &other.entries);
        while p < xs.len() || q < ys.len() {
            if q == ys.len() || (p < xs.len() && xs[p].0 < ys[q].0) {
                out.push(xs[p].clone());
                p += 1;
            } else if p == xs.len() || ys[q].0 < xs[p].0 {
                out.push((ys[q].0, c * &ys[q].1));
                q += 1;
            } else {
                let v = &xs[p].1 + &(c * &ys[q].1);
                if !v.is_zero() {
                    out.push((xs[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (mut p, mut q) = (0, 0);
        let mut acc = Rational::zero();
        let (xs, ys) = (&self.entries, &other.entries);
        while p < xs.len() && q < ys.len() {
            match xs[p].0.cmp(&ys[q].0) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&xs[p].1 * &ys[q].1);
                    p += 1;
                    q += 1;
                }
            }
        }
        acc
    }
}

/// Exact matrix over Q stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    /// Assembles a matrix from its rows, rejecting out-of-range columns.
    pub fn from_rows(cols: usize, data: Vec<SparseVec>) -> Result<Self, Error> {
        if let Some(bad) = data.iter().find(|r| r.support_bound() > cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.support_bound(),
            });
        }
        Ok(RationalMatrix {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfBounds { row: r, col: c });
            }
            if !v.is_zero() {
                *acc[r].entry(c).or_default() += &v;
            }
        }
        Ok(RationalMatrix {
            rows,
            cols,
            data: acc.into_iter().map(SparseVec::from_sorted_map).collect(),
        })
    }

    pub fn from_dense(cols: usize, rows: &[Vec<Rational>]) -> Result<Self, Error> {
        let data = rows
            .iter()
            .map(|r| {
                if r.len() != cols {
                    Err(Error::DimensionMismatch {
                        expected: cols,
                        found: r.len(),
                    })
                } else {
                    Ok(SparseVec::from_dense(r))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Convenience for tests and builtins: small integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        RationalMatrix::from_dense(cols, &dense).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self, Error> {
        RationalMatrix::from_rows(rows, columns.to_vec()).map(|m| m.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                cols[c].push((r, v.clone()));
            }
        }
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols.into_iter().map(SparseVec::from_sorted_unchecked).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_scaled(c, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        self.add_scaled(&Rational::from(-1), other)
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = par::map_slice(&self.data, |row| {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, a) in row.iter() {
                for (c, b) in other.data[k].iter() {
                    *acc.entry(c).or_default() += &(a * b);
                }
            }
            SparseVec::from_sorted_map(acc)
        });
        Ok(RationalMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> Result<SparseVec, Error> {
        if v.support_bound() > self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.support_bound(),
            });
        }
        Ok(SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let x = row.dot(v);
                    (!x.is_zero()).then_some((r, x))
                })
                .collect(),
        ))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn pow(&self, exp: u32) -> Result<RationalMatrix, Error> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (self.rows, self.cols),
            });
        }
        let mut acc = RationalMatrix::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn zeros_are_never_stored() {
        let m = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(m.nnz(), 1);
        let cancelled = m.sub(&m).unwrap();
        assert_eq!(cancelled.nnz(), 0);
        let v = SparseVec::from_pairs([(3, q(2)), (3, q(-2)), (1, q(1))]);
        assert_eq!(v.entries(), &[(1, q(1))]);
    }

    #[test]
    fn triplets_reject_out_of_bounds() {
        let err = RationalMatrix::from_triplets(2, 2, [(2, 0, q(1))]);
        assert!(matches!(err, Err(Error::IndexOutOfBounds { row: 2, col: 0 })));
    }

    #[test]
    fn product_and_transpose() {
        let a = RationalMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), RationalMatrix::from_i64(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), RationalMatrix::from_i64(&[&[1, 3], &[2, 4]]));
        assert!(a.mul(&RationalMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn matrix_vector_product() {
        let a = RationalMatrix::from_i64(&[&[1, 1], &[0, 0], &[2, -2]]);
        let v = SparseVec::from_dense(&[q(1), q(1)]);
        assert_eq!(a.mul_vec(&v).unwrap().entries(), &[(0, q(2))]);
    }
}
