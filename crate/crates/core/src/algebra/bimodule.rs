use crate::error::Error;
use crate::exactlin::{Rational, SparseVec};

use super::{FiniteDimAlgebra, Violation};

/// A symmetric A-bimodule: the right action is the left action, `m·a := a·m`.
///
/// `action[i][m]` is `e_i · m_m` as a sparse vector over the module basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBimodule {
    name: String,
    dim: usize,
    action: Vec<Vec<SparseVec>>,
}

impl SymmetricBimodule {
    pub fn new(name: impl Into<String>, dim: usize, action: Vec<Vec<SparseVec>>) -> Result<Self, Error> {
        for row in &action {
            if row.len() != dim || row.iter().any(|v| v.support_bound() > dim) {
                return Err(Error::Malformed(format!("module action does not fit dimension {dim}")));
            }
        }
        Ok(SymmetricBimodule {
            name: name.into(),
            dim,
            action,
        })
    }

    /// A acting on itself by multiplication.
    pub fn regular(a: &FiniteDimAlgebra) -> Self {
        let n = a.dim();
        let action = (0..n)
            .map(|i| (0..n).map(|m| a.basis_product(i, m).clone()).collect())
            .collect();
        SymmetricBimodule {
            name: "A".into(),
            dim: n,
            action,
        }
    }

    /// The dual A* with `(a·f)(x) = f(x a)`. On the dual basis,
    /// `e_i · e^k = sum_j mult[j][i][k] e^j`.
    pub fn dual(a: &FiniteDimAlgebra) -> Self {
        let n = a.dim();
        let mult = a.structure_constants();
        let action = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| SparseVec::from_pairs((0..n).map(|j| (j, mult[j][i][k].clone()))))
                    .collect()
            })
            .collect();
        SymmetricBimodule {
            name: "A*".into(),
            dim: n,
            action,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_i · m_m`.
    pub fn basis_action(&self, i: usize, m: usize) -> &SparseVec {
        &self.action[i][m]
    }

    /// `x · v` for an algebra element `x` and module element `v`.
    pub fn act(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, c) in x.iter() {
            for (m, d) in v.iter() {
                let cd: Rational = c * d;
                for (k, e) in self.action[i][m].iter() {
                    pairs.push((k, &cd * e));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Checks `1·m = m` and `(ab)·m = a·(b·m)` on all basis elements.
    pub fn validate(&self, a: &FiniteDimAlgebra) -> Result<(), Violation> {
        if self.action.len() != a.dim() {
            return Err(Violation::ModuleShape);
        }
        for m in 0..self.dim {
            let v = SparseVec::unit(m);
            if self.act(a.unit(), &v) != v {
                return Err(Violation::ModuleUnit { m });
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for m in 0..self.dim {
                    let v = SparseVec::unit(m);
                    let lhs = self.act(a.basis_product(i, j), &v);
                    let rhs = self.act(&SparseVec::unit(i), &self.act(&SparseVec::unit(j), &v));
                    if lhs != rhs {
                        return Err(Violation::ModuleAssociativity { i, j, m });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    #[test]
    fn regular_and_dual_modules_are_valid() {
        for name in builtin::NAMES {
            let t = builtin::builtin(name).unwrap();
            if !t.is_commutative() {
                continue;
            }
            assert_eq!(SymmetricBimodule::regular(t.a()).validate(t.a()), Ok(()));
            assert_eq!(SymmetricBimodule::dual(t.a()).validate(t.a()), Ok(()));
        }
    }

    #[test]
    fn dual_action_on_dual_numbers() {
        // (x·1*)(y) = 1*(y x) = 0 for y in {1, x}; (x·x*)(y) = x*(y x) is 1 at
        // y = 1 and 0 at y = x, so x·x* = 1*.
        let d = builtin::truncated_polynomials("x", 2);
        let m = SymmetricBimodule::dual(&d);
        assert!(m.basis_action(1, 0).is_zero());
        assert_eq!(m.basis_action(1, 1), &SparseVec::unit(0));
    }

    #[test]
    fn broken_action_detected() {
        let d = builtin::truncated_polynomials("x", 2);
        // x acts as the identity: x·(x·m) = m but (x x)·m = 0.
        let action = vec![
            vec![SparseVec::unit(0), SparseVec::unit(1)],
            vec![SparseVec::unit(0), SparseVec::unit(1)],
        ];
        let m = SymmetricBimodule::new("bad", 2, action).unwrap();
        assert_eq!(m.validate(&d), Err(Violation::ModuleAssociativity { i: 1, j: 1, m: 0 }));
    }
}
