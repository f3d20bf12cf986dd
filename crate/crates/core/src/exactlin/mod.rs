//! Exact linear algebra over Q.

mod matrix;
mod rational;
mod rref;
mod subspace;

pub use matrix::{RationalMatrix, SparseVec};
pub use rational::Rational;
pub use rref::{rank, rref};
pub use subspace::{image_basis, intersect, kernel_basis, restrict_and_project, SubspaceBasis};
