//! Finite-dimensional algebras, triples, and symmetric bimodules.

mod bimodule;
pub mod builtin;
mod schema;
mod structure;
mod triple;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use bimodule::SymmetricBimodule;
pub use builtin::builtin;
pub use schema::{parse_triple, render_triple, AlgebraFile, TripleFile};
pub use structure::{validate_algebra, FiniteDimAlgebra, StructureConstantsMut};
pub use triple::{validate_triple, AlgebraMorphism, Triple};

/// The first identity found to fail during validation, with the basis
/// indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { basis: usize },
    RightUnit { basis: usize },
    /// A violation inside one of the triple's algebras.
    InAlgebra { algebra: String, violation: Box<Violation> },
    BNotCommutative { i: usize, j: usize },
    EpsilonNotUnital,
    EpsilonNotMultiplicative { i: usize, j: usize },
    NotCentral { b: usize, a: usize },
    CommutativeFlag,
    ModuleShape,
    ModuleUnit { m: usize },
    ModuleAssociativity { i: usize, j: usize, m: usize },
}

impl Violation {
    fn in_algebra(self, name: &str) -> Violation {
        Violation::InAlgebra {
            algebra: name.to_string(),
            violation: Box::new(self),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { i, j, k } => {
                write!(f, "(e{i} e{j}) e{k} != e{i} (e{j} e{k})")
            }
            Violation::LeftUnit { basis } => write!(f, "left unit law fails: 1 e{basis} != e{basis}"),
            Violation::RightUnit { basis } => write!(f, "right unit law fails: e{basis} 1 != e{basis}"),
            Violation::InAlgebra { algebra, violation } => write!(f, "in {algebra}: {violation}"),
            Violation::BNotCommutative { i, j } => write!(f, "B is not commutative: b{i} b{j} != b{j} b{i}"),
            Violation::EpsilonNotUnital => write!(f, "epsilon(1_B) != 1_A"),
            Violation::EpsilonNotMultiplicative { i, j } => {
                write!(f, "epsilon(b{i} b{j}) != epsilon(b{i}) epsilon(b{j})")
            }
            Violation::NotCentral { b, a } => {
                write!(f, "epsilon(b{b}) does not commute with e{a}")
            }
            Violation::CommutativeFlag => write!(f, "commutative flag disagrees with A's table"),
            Violation::ModuleShape => write!(f, "module action has the wrong number of algebra rows"),
            Violation::ModuleUnit { m } => write!(f, "1 m{m} != m{m}"),
            Violation::ModuleAssociativity { i, j, m } => {
                write!(f, "(e{i} e{j}) m{m} != e{i} (e{j} m{m})")
            }
        }
    }
}
