use crate::algebra::Triple;
use crate::error::Error;
use crate::exactlin::{Rational, RationalMatrix, SparseVec};
use crate::par;

use super::index::{LevelShape, TensorIndex};

/// The index rotation on `V_n`: `a'_0 = a_n`, `a'_i = a_{i-1}`,
/// `b'_{0,j} = b_{j-1,n}`, `b'_{i,j} = b_{i-1,j-1}`.
pub fn rotate(p: &TensorIndex) -> TensorIndex {
    let n = p.level();
    let mut a = Vec::with_capacity(n + 1);
    a.push(p.a[n]);
    a.extend_from_slice(&p.a[..n]);
    let mut b = Vec::with_capacity(p.b.len());
    for i in 0..=n {
        for j in i + 1..=n {
            b.push(if i == 0 { p.b_at(j - 1, n) } else { p.b_at(i - 1, j - 1) });
        }
    }
    TensorIndex { a, b }
}

/// Matrix of the cyclic action on `C̄ⁿ`: `(λf)(p) = (-1)^n f(rotate(p))`, a
/// signed permutation matrix.
pub fn cyclic_matrix(t: &Triple, n: usize) -> Result<RationalMatrix, Error> {
    let shape = LevelShape::new(t, n)?;
    let sign = if n.is_multiple_of(2) { Rational::one() } else { Rational::from(-1) };
    let rows = par::map_range(shape.dim(), |r| {
        let target = shape.encode(&rotate(&shape.decode(r)));
        SparseVec::from_sorted_unchecked(vec![(target, sign.clone())])
    });
    RationalMatrix::from_rows(shape.dim(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::builtin;

    #[test]
    fn level_zero_is_identity() {
        for name in ["field", "dual-dual", "mat2-k"] {
            let t = builtin(name).unwrap();
            let l = cyclic_matrix(&t, 0).unwrap();
            assert_eq!(l, RationalMatrix::identity(t.a().dim()));
        }
    }

    #[test]
    fn scalar_level_one_is_minus_one() {
        let t = builtin("field").unwrap();
        assert_eq!(cyclic_matrix(&t, 1).unwrap(), RationalMatrix::from_i64(&[&[-1]]));
    }

    #[test]
    fn dual_dual_level_one_swaps_diagonal() {
        // (x, y, 1) -> -(1, y, x)
        let t = builtin("dual-dual").unwrap();
        let shape = LevelShape::new(&t, 1).unwrap();
        let l = cyclic_matrix(&t, 1).unwrap();
        let from = shape.encode(&TensorIndex { a: vec![1, 0], b: vec![1] });
        let to = shape.encode(&TensorIndex { a: vec![0, 1], b: vec![1] });
        assert_eq!(l.row(from).entries(), &[(to, Rational::from(-1))]);
    }

    #[test]
    fn rotation_has_order_n_plus_one() {
        let p = TensorIndex { a: vec![0, 1, 2, 3], b: vec![4, 5, 6, 7, 8, 9] };
        let mut q = p.clone();
        for step in 1..=4 {
            q = rotate(&q);
            assert_eq!(q == p, step == 4);
        }
    }
}
