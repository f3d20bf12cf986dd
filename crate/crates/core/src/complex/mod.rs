//! The secondary Hochschild cochain complex `C̄•(A, B, ε)` and its cyclic
//! subcomplex.
//!
//! Cochains of level `n` are functionals on `V_n = A^{⊗n+1} ⊗ B^{⊗n(n+1)/2}`
//! and are stored as coordinate vectors over the mixed-radix basis of `V_n`
//! (see [`LevelShape`]). Every cochain-side matrix is the transpose of a map
//! built on the predual.

mod classical;
mod cohomology;
mod cyclic;
mod faces;
mod index;

pub use classical::{bar_coboundary, classical_hochschild_dims};
pub use cohomology::{cyclic_dims, hochschild_dims, verify_complex, CochainComplex, CochainLevel};
pub use cyclic::{cyclic_matrix, rotate};
pub use faces::{boundary_matrix, face_map};
pub use index::{cochain_dim, pair_index, LevelShape, TensorIndex, AMBIENT_CAP};
