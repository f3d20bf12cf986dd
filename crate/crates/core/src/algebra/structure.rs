use crate::error::Error;
use crate::exactlin::{Rational, SparseVec};

use super::Violation;

/// A finite-dimensional unital Q-algebra given by structure constants:
/// `e_i * e_j = sum_k mult[i][j][k] e_k`.
///
/// Construction only checks shapes; the algebra axioms are checked by
/// [`validate_algebra`] so that broken tables can still be inspected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    labels: Vec<String>,
    unit: SparseVec,
    mult: Vec<Vec<Vec<Rational>>>,
    products: Vec<SparseVec>,
}

impl FiniteDimAlgebra {
    pub fn new(
        labels: Vec<String>,
        unit: Vec<Rational>,
        mult: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, Error> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::Malformed("algebra must have at least one basis element".into()));
        }
        if unit.len() != dim {
            return Err(Error::Malformed(format!(
                "unit has {} coordinates, expected {dim}",
                unit.len()
            )));
        }
        if mult.len() != dim {
            return Err(Error::Malformed(format!("mult has {} rows, expected {dim}", mult.len())));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Malformed(format!(
                    "mult[{i}] has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::Malformed(format!(
                        "mult[{i}][{j}] has {} coefficients, expected {dim}",
                        v.len()
                    )));
                }
            }
        }
        let products = mult
            .iter()
            .flat_map(|row| row.iter().map(|v| SparseVec::from_dense(v)))
            .collect();
        Ok(FiniteDimAlgebra {
            labels,
            unit: SparseVec::from_dense(&unit),
            mult,
            products,
        })
    }

    /// Builds from a closure giving `e_i * e_j` as sparse `(k, coefficient)`
    /// pairs. Used for the hand-tabulated builtins.
    pub fn from_products<F>(labels: Vec<String>, unit: Vec<Rational>, product: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<(usize, Rational)>,
    {
        let dim = labels.len();
        let mult = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| SparseVec::from_pairs(product(i, j)).to_dense(dim))
                    .collect()
            })
            .collect();
        FiniteDimAlgebra::new(labels, unit, mult).expect("builtin table has consistent shape")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn unit_dense(&self) -> Vec<Rational> {
        self.unit.to_dense(self.dim())
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.mult
    }

    pub fn structure_constants_mut(&mut self) -> StructureConstantsMut<'_> {
        StructureConstantsMut(self)
    }

    /// `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, x) in u.iter() {
            for (j, y) in v.iter() {
                let xy = x * y;
                for (k, c) in self.basis_product(i, j).iter() {
                    pairs.push((k, &xy * c));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&SparseVec]) -> SparseVec {
        factors
            .iter()
            .fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    /// Brute force over all basis pairs.
    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    pub(crate) fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }
}

/// Write access to single structure constants; keeps the cached products in
/// sync.
pub struct StructureConstantsMut<'a>(&'a mut FiniteDimAlgebra);

impl StructureConstantsMut<'_> {
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let alg = &mut *self.0;
        let dim = alg.dim();
        alg.mult[i][j][k] = value;
        alg.products[i * dim + j] = SparseVec::from_dense(&alg.mult[i][j]);
    }
}

/// Checks associativity on all basis triples, then the unit laws, reporting
/// the first violation found.
pub fn validate_algebra(a: &FiniteDimAlgebra) -> Result<(), Violation> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let left = a.mul(ij, &SparseVec::unit(k));
                let right = a.mul(&SparseVec::unit(i), a.basis_product(j, k));
                if left != right {
                    return Err(Violation::Associativity { i, j, k });
                }
            }
        }
    }
    for i in 0..n {
        let e = SparseVec::unit(i);
        if a.mul(a.unit(), &e) != e {
            return Err(Violation::LeftUnit { basis: i });
        }
        if a.mul(&e, a.unit()) != e {
            return Err(Violation::RightUnit { basis: i });
        }
    }
    Ok(())
}
