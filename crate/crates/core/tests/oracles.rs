//! The crate's cohomology, derivation and Ω¹ dimensions against classical
//! computations done independently in `common`.

mod common;

use common::{hochschild_homology_dims, kaehler_dim};
use secohom::algebra::builtin::{builtin, rationals, truncated_polynomials};
use secohom::algebra::{validate_triple, SymmetricBimodule, Triple};
use secohom::complex::{classical_hochschild_dims, hochschild_dims, CochainComplex};
use secohom::derivations::der_system;
use secohom::exactlin::{RationalMatrix, SparseVec};
use secohom::kaehler::{classical_omega_dim, omega_presentation};

fn over_field(n: usize) -> Triple {
    let a = truncated_polynomials("x", n);
    let mut eps = vec![vec![0i64]; n];
    eps[0][0] = 1;
    let rows: Vec<&[i64]> = eps.iter().map(Vec::as_slice).collect();
    Triple::new(a, rationals(), RationalMatrix::from_i64(&rows)).unwrap()
}

/// `(Q[x]/x^n, Q[y]/y^2, y -> 0)`.
fn killing_y(n: usize) -> Triple {
    let a = truncated_polynomials("x", n);
    let mut eps = vec![vec![0i64; 2]; n];
    eps[0][0] = 1;
    let rows: Vec<&[i64]> = eps.iter().map(Vec::as_slice).collect();
    Triple::new(a, truncated_polynomials("y", 2), RationalMatrix::from_i64(&rows)).unwrap()
}

#[test]
fn extra_triples_are_valid() {
    for n in 1..5 {
        assert_eq!(validate_triple(&over_field(n)), Ok(()));
        assert_eq!(validate_triple(&killing_y(n)), Ok(()));
    }
}

#[test]
fn scalar_extension_reduces_to_classical_hochschild() {
    for name in ["field", "dual-k", "mat2-k"] {
        let t = builtin(name).unwrap();
        let oracle = hochschild_homology_dims(t.a(), 2);
        assert_eq!(hochschild_dims(&t, 2).unwrap(), oracle, "{name}");
    }
    for n in 1..4 {
        let t = over_field(n);
        assert_eq!(hochschild_dims(&t, 2).unwrap(), hochschild_homology_dims(t.a(), 2), "x^{n}");
    }
}

#[test]
fn library_bar_complex_matches_homology_oracle() {
    for a in [rationals(), truncated_polynomials("x", 2), truncated_polynomials("x", 3)] {
        assert_eq!(classical_hochschild_dims(&a, 2).unwrap(), hochschild_homology_dims(&a, 2));
    }
    let m2 = builtin("mat2-k").unwrap();
    assert_eq!(classical_hochschild_dims(m2.a(), 2).unwrap(), vec![1, 0, 0]);
}

#[test]
fn omega_over_field_matches_kaehler_presentation() {
    for n in 1..5 {
        let t = over_field(n);
        let oracle = kaehler_dim(t.a());
        assert_eq!(oracle, n - 1);
        assert_eq!(omega_presentation(&t).unwrap().dim(), oracle);
        assert_eq!(classical_omega_dim(t.a()).unwrap(), oracle);
    }
}

#[test]
fn derivations_over_field_are_classical() {
    // Der(Q[x]/x^n, A) has dimension n - 1: x -> x^k for k >= 1
    for n in 1..5 {
        let t = over_field(n);
        let der = der_system(&t, &SymmetricBimodule::regular(t.a())).unwrap();
        assert_eq!(der.solutions().dim(), n - 1);
    }
}

#[test]
fn epsilon_to_scalars_only_sees_a() {
    // with y -> 0 the B-direction is inert, so Ω¹ is the classical one
    for n in 1..5 {
        let t = killing_y(n);
        assert_eq!(omega_presentation(&t).unwrap().dim(), kaehler_dim(t.a()));
    }
}

// Hand computations for (Q[x]/x², Q, 1 -> 1). A derivation is fixed by
// D(x) ∈ A* with x·D(x) = 0, i.e. D(x)(x) = 0, leaving D(x) = 1*.

#[test]
fn dual_numbers_hh0_is_a_star() {
    let t = builtin("dual-k").unwrap();
    let cx = CochainComplex::build(&t, 1).unwrap();
    assert!(cx.boundary(0).is_zero());
    assert_eq!(cx.hochschild_dims()[0], 2);
}

#[test]
fn dual_numbers_hh1_is_spanned_by_one_star_dx() {
    let t = builtin("dual-k").unwrap();
    let cx = CochainComplex::build(&t, 1).unwrap();
    let z1 = cx.cocycles(1);
    assert_eq!(z1.dim(), 1);
    // f(1, 1; x) = 1, coordinate (x=0, z=1, α=0)
    assert!(z1.contains(&SparseVec::unit(1)));
    assert_eq!(cx.hochschild_dims()[1], 1);
}

#[test]
fn dual_numbers_derivations_and_omega() {
    let t = builtin("dual-k").unwrap();
    let der = der_system(&t, &SymmetricBimodule::dual(t.a())).unwrap();
    let sol = der.solutions();
    assert_eq!(sol.dim(), 1);
    assert!(sol.contains(&SparseVec::unit(der.unknown_index(0, 1, 0))));
    assert_eq!(omega_presentation(&t).unwrap().dim(), 1);
}

#[test]
fn cochain_and_chain_oracles_agree() {
    for a in [rationals(), truncated_polynomials("x", 2), truncated_polynomials("x", 3)] {
        assert_eq!(common::bar_cochain_dims(&a, 2), hochschild_homology_dims(&a, 2));
    }
    let m2 = builtin("mat2-k").unwrap();
    assert_eq!(common::bar_cochain_dims(m2.a(), 2), hochschild_homology_dims(m2.a(), 2));
}
