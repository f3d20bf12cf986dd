use crate::error::Error;
use crate::exactlin::{RationalMatrix, SparseVec};

use super::structure::validate_algebra;
use super::{FiniteDimAlgebra, Violation};

/// A linear map between algebras given by its matrix (target.dim rows,
/// source.dim columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    matrix: RationalMatrix,
    images: Vec<SparseVec>,
}

impl AlgebraMorphism {
    pub fn new(source: &FiniteDimAlgebra, target: &FiniteDimAlgebra, matrix: RationalMatrix) -> Result<Self, Error> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Malformed(format!(
                "epsilon is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let images = matrix.transpose().into_rows();
        Ok(AlgebraMorphism { matrix, images })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Image of the i-th source basis element.
    pub fn image_of_basis(&self, i: usize) -> &SparseVec {
        &self.images[i]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(v.iter().flat_map(|(i, c)| {
            self.images[i].iter().map(move |(k, x)| (k, c * x))
        }))
    }
}

/// `(A, B, ε)`: B commutative, ε: B → A an algebra map into the center of A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    a: FiniteDimAlgebra,
    b: FiniteDimAlgebra,
    epsilon: AlgebraMorphism,
    commutative: bool,
}

impl Triple {
    /// Assembles a triple; the commutative flag is computed from A's table.
    /// Axioms are not checked here, see [`validate_triple`].
    pub fn new(a: FiniteDimAlgebra, b: FiniteDimAlgebra, epsilon: RationalMatrix) -> Result<Self, Error> {
        let epsilon = AlgebraMorphism::new(&b, &a, epsilon)?;
        let commutative = a.is_commutative();
        Ok(Triple {
            a,
            b,
            epsilon,
            commutative,
        })
    }

    pub fn a(&self) -> &FiniteDimAlgebra {
        &self.a
    }

    pub fn b(&self) -> &FiniteDimAlgebra {
        &self.b
    }

    pub fn epsilon(&self) -> &AlgebraMorphism {
        &self.epsilon
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Errors unless A is commutative; `what` names the caller.
    pub fn require_commutative(&self, what: &'static str) -> Result<(), Error> {
        if self.commutative {
            Ok(())
        } else {
            Err(Error::NotCommutative(what))
        }
    }

    /// Replaces A's table, recomputing the commutative flag.
    pub fn with_a(&self, a: FiniteDimAlgebra) -> Result<Self, Error> {
        Triple::new(a, self.b.clone(), self.epsilon.matrix().clone())
    }
}

/// Checks both algebras, then B commutative, ε unital and multiplicative,
/// ε(B) central in A, and the commutative flag.
pub fn validate_triple(t: &Triple) -> Result<(), Violation> {
    validate_algebra(&t.a).map_err(|v| v.in_algebra("A"))?;
    validate_algebra(&t.b).map_err(|v| v.in_algebra("B"))?;
    if let Some((i, j)) = t.b.first_noncommuting_pair() {
        return Err(Violation::BNotCommutative { i, j });
    }
    if t.epsilon.apply(t.b.unit()) != *t.a.unit() {
        return Err(Violation::EpsilonNotUnital);
    }
    for i in 0..t.b.dim() {
        for j in 0..t.b.dim() {
            let lhs = t.epsilon.apply(t.b.basis_product(i, j));
            let rhs = t.a.mul(t.epsilon.image_of_basis(i), t.epsilon.image_of_basis(j));
            if lhs != rhs {
                return Err(Violation::EpsilonNotMultiplicative { i, j });
            }
        }
    }
    for i in 0..t.b.dim() {
        let e = t.epsilon.image_of_basis(i);
        for k in 0..t.a.dim() {
            let x = SparseVec::unit(k);
            if t.a.mul(e, &x) != t.a.mul(&x, e) {
                return Err(Violation::NotCentral { b: i, a: k });
            }
        }
    }
    if t.commutative != t.a.is_commutative() {
        return Err(Violation::CommutativeFlag);
    }
    Ok(())
}
