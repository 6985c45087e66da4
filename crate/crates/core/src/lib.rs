//! Finite Hom-groups, their modules, and exact (co)homology computations.
//!
//! Everything is computed over an exact field (`Rationals` or `PrimeField`):
//! Hom-group and module axioms are checked exhaustively, (co)chain complexes
//! are assembled as sparse matrices, and comparison maps between complexes
//! are certified by matrix identities.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod field;
pub mod homgroup;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod report;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
