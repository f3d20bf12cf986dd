//! Face maps on the predual spaces and the coboundary built from them.
//!
//! The predual face `D_{n,i}: V_{n+1} -> V_n` merges diagonal slots `i` and
//! `i+1` (the last face merges slot `n+1` into slot 0) and multiplies the
//! matching rows and columns of `b`-entries. The coboundary on cochains is
//! the transpose of the alternating sum of faces.

use crate::algebra::Triple;
use crate::error::Error;
use crate::exactlin::{Rational, RationalMatrix, SparseVec};
use crate::par;

use super::index::{LevelShape, TensorIndex};

enum Slot<'a> {
    Basis(usize),
    Vector(&'a SparseVec),
}

/// Cached products used by every face.
pub(crate) struct FaceContext<'t> {
    t: &'t Triple,
    /// `x ε(β) y` for basis `x, y` of A and `β` of B.
    twisted: Vec<SparseVec>,
}

impl<'t> FaceContext<'t> {
    pub(crate) fn new(t: &'t Triple) -> Self {
        let (da, db) = (t.a().dim(), t.b().dim());
        let mut twisted = Vec::with_capacity(da * db * da);
        for x in 0..da {
            for beta in 0..db {
                let left = t.a().mul(&SparseVec::unit(x), t.epsilon().image_of_basis(beta));
                for y in 0..da {
                    twisted.push(t.a().mul(&left, &SparseVec::unit(y)));
                }
            }
        }
        FaceContext { t, twisted }
    }

    fn twist(&self, x: usize, beta: usize, y: usize) -> &SparseVec {
        let (da, db) = (self.t.a().dim(), self.t.b().dim());
        &self.twisted[(x * db + beta) * da + y]
    }

    fn b_prod(&self, x: usize, y: usize) -> &SparseVec {
        self.t.b().basis_product(x, y)
    }

    /// Slots of `D_{n,i}(p)` for `p` at level `n+1`, in ordinal order.
    fn slots(&self, p: &TensorIndex, n: usize, i: usize) -> Vec<Slot<'_>> {
        let mut out = Vec::with_capacity(n + 1 + n * (n + 1) / 2);
        if i <= n {
            let old = |k: usize| if k < i { k } else { k + 1 };
            for k in 0..=n {
                if k == i {
                    out.push(Slot::Vector(self.twist(p.a[i], p.b_at(i, i + 1), p.a[i + 1])));
                } else {
                    out.push(Slot::Basis(p.a[old(k)]));
                }
            }
            for r in 0..=n {
                for c in r + 1..=n {
                    out.push(if c == i {
                        Slot::Vector(self.b_prod(p.b_at(r, i), p.b_at(r, i + 1)))
                    } else if r == i {
                        Slot::Vector(self.b_prod(p.b_at(i, c + 1), p.b_at(i + 1, c + 1)))
                    } else {
                        Slot::Basis(p.b_at(old(r), old(c)))
                    });
                }
            }
        } else {
            out.push(Slot::Vector(self.twist(p.a[n + 1], p.b_at(0, n + 1), p.a[0])));
            out.extend((1..=n).map(|k| Slot::Basis(p.a[k])));
            for r in 0..=n {
                for c in r + 1..=n {
                    out.push(if r == 0 {
                        Slot::Vector(self.b_prod(p.b_at(c, n + 1), p.b_at(0, c)))
                    } else {
                        Slot::Basis(p.b_at(r, c))
                    });
                }
            }
        }
        out
    }

    /// Expands the tensor product of `slots` into `(ordinal, coefficient)`
    /// pairs of the output level, each scaled by `sign`.
    fn expand(&self, target: &LevelShape, slots: &[Slot<'_>], sign: &Rational, out: &mut Vec<(usize, Rational)>) {
        let mut acc: Vec<(usize, Rational)> = vec![(0, sign.clone())];
        for (slot, radix) in slots.iter().zip(target.radices()) {
            match slot {
                Slot::Basis(k) => {
                    for (ord, _) in acc.iter_mut() {
                        *ord = *ord * radix + k;
                    }
                }
                Slot::Vector(v) => {
                    if v.is_zero() {
                        return;
                    }
                    let mut next = Vec::with_capacity(acc.len() * v.nnz());
                    for (ord, c) in &acc {
                        for (k, x) in v.iter() {
                            next.push((ord * radix + k, c * x));
                        }
                    }
                    acc = next;
                }
            }
        }
        out.extend(acc);
    }

    /// `D_{n,i}` applied to the basis point `p` of level `n+1`.
    pub(crate) fn face_image(&self, target: &LevelShape, p: &TensorIndex, i: usize) -> SparseVec {
        let mut out = Vec::new();
        let slots = self.slots(p, target.level, i);
        self.expand(target, &slots, &Rational::one(), &mut out);
        SparseVec::from_pairs(out)
    }

    /// `sum_i (-1)^i D_{n,i}(p)`: one row of the coboundary matrix.
    pub(crate) fn boundary_row(&self, target: &LevelShape, p: &TensorIndex) -> SparseVec {
        let n = target.level;
        let mut out = Vec::new();
        let plus = Rational::one();
        let minus = Rational::from(-1);
        for i in 0..=n + 1 {
            let slots = self.slots(p, n, i);
            self.expand(target, &slots, if i % 2 == 0 { &plus } else { &minus }, &mut out);
        }
        SparseVec::from_pairs(out)
    }
}

/// Matrix of the predual face `D_{n,i}: V_{n+1} -> V_n` (`dim V_n` rows,
/// `dim V_{n+1}` columns), for `0 <= i <= n+1`.
pub fn face_map(t: &Triple, n: usize, i: usize) -> Result<RationalMatrix, Error> {
    if i > n + 1 {
        return Err(Error::FaceOutOfRange {
            level: n,
            face: i,
            max: n + 1,
        });
    }
    let target = LevelShape::new(t, n)?;
    let source = LevelShape::new(t, n + 1)?;
    let ctx = FaceContext::new(t);
    let columns = par::map_range(source.dim(), |r| ctx.face_image(&target, &source.decode(r), i));
    Ok(RationalMatrix::from_rows(target.dim(), columns)?.transpose())
}

/// Matrix of the coboundary `∂ⁿ: C̄ⁿ -> C̄ⁿ⁺¹` acting on coordinate columns:
/// `dim C̄ⁿ⁺¹` rows, `dim C̄ⁿ` columns.
pub fn boundary_matrix(t: &Triple, n: usize) -> Result<RationalMatrix, Error> {
    let target = LevelShape::new(t, n)?;
    let source = LevelShape::new(t, n + 1)?;
    let ctx = FaceContext::new(t);
    let rows = par::map_range(source.dim(), |r| ctx.boundary_row(&target, &source.decode(r)));
    RationalMatrix::from_rows(target.dim(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::builtin;

    #[test]
    fn scalar_faces_are_one() {
        let t = builtin("field").unwrap();
        for n in 0..3 {
            for i in 0..=n + 1 {
                assert_eq!(face_map(&t, n, i).unwrap(), RationalMatrix::identity(1));
            }
        }
    }

    #[test]
    fn face_index_checked() {
        let t = builtin("field").unwrap();
        assert!(matches!(face_map(&t, 1, 3), Err(Error::FaceOutOfRange { .. })));
    }

    #[test]
    fn dual_numbers_first_face_is_multiplication() {
        let t = builtin("dual-k").unwrap();
        let d = face_map(&t, 0, 0).unwrap();
        let v1 = LevelShape::new(&t, 1).unwrap();
        // (x, x) -> x*x = 0
        let xx = v1.encode(&TensorIndex { a: vec![1, 1], b: vec![0] });
        assert!((0..2).all(|r| d.get(r, xx).is_zero()));
        // (1, x) -> x
        let one_x = v1.encode(&TensorIndex { a: vec![0, 1], b: vec![0] });
        assert_eq!(d.get(1, one_x), Rational::one());
    }

    #[test]
    fn dual_dual_twist_kills_x_y() {
        // (a0 = x, b01 = y, a1 = 1) -> x ε(y) 1 = x^2 = 0
        let t = builtin("dual-dual").unwrap();
        let d = face_map(&t, 0, 0).unwrap();
        let v1 = LevelShape::new(&t, 1).unwrap();
        let col = v1.encode(&TensorIndex { a: vec![1, 0], b: vec![1] });
        assert!((0..2).all(|r| d.get(r, col).is_zero()));
    }

    #[test]
    fn scalar_boundary_alternates() {
        let t = builtin("field").unwrap();
        assert!(boundary_matrix(&t, 0).unwrap().is_zero());
        assert_eq!(boundary_matrix(&t, 1).unwrap(), RationalMatrix::identity(1));
        assert!(boundary_matrix(&t, 2).unwrap().is_zero());
    }
}
