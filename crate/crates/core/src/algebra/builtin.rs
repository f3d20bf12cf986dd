//! Hand-tabulated example triples.

use crate::error::Error;
use crate::exactlin::{Rational, RationalMatrix};

use super::{FiniteDimAlgebra, Triple};

pub const NAMES: &[&str] = &["field", "dual-k", "dual-dual", "trunc-x4", "mat2-k"];

/// Q itself.
pub fn rationals() -> FiniteDimAlgebra {
    truncated_polynomials("x", 1)
}

/// Q[var]/(var^n) on the monomial basis 1, var, ..., var^(n-1).
pub fn truncated_polynomials(var: &str, n: usize) -> FiniteDimAlgebra {
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        })
        .collect();
    let mut unit = vec![Rational::zero(); n];
    unit[0] = Rational::one();
    FiniteDimAlgebra::from_products(labels, unit, |i, j| {
        if i + j < n {
            vec![(i + j, Rational::one())]
        } else {
            Vec::new()
        }
    })
}

/// M2(Q) on the matrix units e11, e12, e21, e22.
pub fn matrix_units() -> FiniteDimAlgebra {
    let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let labels = units
        .iter()
        .map(|(r, c)| format!("e{}{}", r + 1, c + 1))
        .collect();
    let unit = [1, 0, 0, 1].iter().map(|&x| Rational::from(x)).collect();
    FiniteDimAlgebra::from_products(labels, unit, |i, j| {
        let (r, s) = units[i];
        let (t, u) = units[j];
        if s == t {
            let k = units.iter().position(|&p| p == (r, u)).expect("matrix unit");
            vec![(k, Rational::one())]
        } else {
            Vec::new()
        }
    })
}

fn epsilon(columns: &[&[i64]]) -> RationalMatrix {
    // given as images of the B basis; the matrix wants them as columns
    RationalMatrix::from_i64(columns).transpose()
}

/// Looks up a builtin triple by name.
pub fn builtin(name: &str) -> Result<Triple, Error> {
    let (a, b, eps) = match name {
        "field" => (rationals(), rationals(), epsilon(&[&[1]])),
        "dual-k" => (truncated_polynomials("x", 2), rationals(), epsilon(&[&[1, 0]])),
        "dual-dual" => (
            truncated_polynomials("x", 2),
            truncated_polynomials("y", 2),
            epsilon(&[&[1, 0], &[0, 1]]),
        ),
        // y -> x^2: the finite shadow of Q[x^2] -> Q[x]
        "trunc-x4" => (
            truncated_polynomials("x", 4),
            truncated_polynomials("y", 2),
            epsilon(&[&[1, 0, 0, 0], &[0, 0, 1, 0]]),
        ),
        "mat2-k" => (matrix_units(), rationals(), epsilon(&[&[1, 0, 0, 1]])),
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Triple::new(a, b, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::SparseVec;

    #[test]
    fn dimensions() {
        let dims = |n: &str| {
            let t = builtin(n).unwrap();
            (t.a().dim(), t.b().dim())
        };
        assert_eq!(dims("field"), (1, 1));
        assert_eq!(dims("trunc-x4"), (4, 2));
        assert_eq!(dims("mat2-k"), (4, 1));
        assert!(!builtin("mat2-k").unwrap().is_commutative());
    }

    #[test]
    fn trunc_x4_epsilon_is_multiplicative() {
        let t = builtin("trunc-x4").unwrap();
        let y = SparseVec::unit(1);
        let x2 = t.epsilon().apply(&y);
        assert_eq!(x2, SparseVec::unit(2));
        // y^2 = 0 in B and x^2 * x^2 = x^4 = 0 in A
        assert!(t.b().mul(&y, &y).is_zero());
        assert!(t.a().mul(&x2, &x2).is_zero());
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
    }
}
