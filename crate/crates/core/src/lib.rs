//! Exact secondary Hochschild and cyclic cohomology of finite-dimensional
//! triples `(A, B, ε)` over Q, with machine checks of the degree-one
//! comparison with secondary derivations and of the universal property of
//! secondary Kähler differentials.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod derivations;
mod error;
pub mod exactlin;
pub mod kaehler;
mod par;
pub mod report;

pub use error::Error;
pub use par::is_parallel;
