mod common;

use common::{dense, dense_rank};
use proptest::prelude::*;
use secohom::exactlin::{
    image_basis, intersect, kernel_basis, rank, rref, Rational, RationalMatrix, SparseVec, SubspaceBasis,
};

fn entry() -> impl Strategy<Value = Rational> {
    // mostly zeros so that ranks vary
    prop_oneof![
        3 => Just(Rational::zero()),
        2 => (-4i64..=4).prop_map(Rational::from),
        1 => ((-5i64..=5), (1i64..=4)).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
    ]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        exact(r, c)
    })
}

fn exact(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(prop::collection::vec(entry(), cols), rows)
        .prop_map(move |rows| RationalMatrix::from_dense(cols, &rows).unwrap())
}

fn composable() -> impl Strategy<Value = (RationalMatrix, RationalMatrix)> {
    (1..=5usize, 1..=5usize, 1..=5usize).prop_flat_map(|(r, k, c)| (exact(r, k), exact(k, c)))
}

fn subspaces(dim: usize) -> impl Strategy<Value = (SubspaceBasis, SubspaceBasis)> {
    let vecs = move || {
        prop::collection::vec(prop::collection::vec(entry(), dim), 0..=dim)
            .prop_map(move |vs| {
                let vs: Vec<SparseVec> = vs.iter().map(|v| SparseVec::from_dense(v)).collect();
                SubspaceBasis::span(dim, &vs).unwrap()
            })
    };
    (vecs(), vecs())
}

proptest! {
    #[test]
    fn rank_matches_naive_elimination(m in matrix(7, 7)) {
        prop_assert_eq!(rank(&m), dense_rank(dense(&m)));
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rref_is_idempotent(m in matrix(6, 6)) {
        let (r, pivots) = rref(&m);
        let (again, pivots_again) = rref(&r);
        prop_assert_eq!(&again, &r);
        prop_assert_eq!(&pivots, &pivots_again);
        for (row, &p) in pivots.iter().enumerate() {
            prop_assert!(r.get(row, p).is_one());
            for other in 0..pivots.len() {
                if other != row {
                    prop_assert!(r.get(other, p).is_zero());
                }
            }
        }
    }

    #[test]
    fn rank_nullity(m in matrix(6, 7)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        prop_assert_eq!(image_basis(&m).dim(), rank(&m));
    }

    #[test]
    fn intersection_dimension((u, v) in subspaces(5)) {
        let w = intersect(&u, &v).unwrap();
        let sum = u.sum(&v).unwrap();
        prop_assert_eq!(w.dim() + sum.dim(), u.dim() + v.dim());
        for x in w.vectors() {
            prop_assert!(u.contains(x) && v.contains(x));
        }
    }

    #[test]
    fn product_rank_is_bounded((a, b) in composable()) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(rank(&ab) <= rank(&a).min(rank(&b)));
        prop_assert_eq!(rank(&ab), dense_rank(dense(&ab)));
    }
}
