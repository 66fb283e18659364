//! Exact linear algebra over the rationals and prime fields.
//!
//! Every value is exact. Subspaces are stored as reduced row-echelon bases,
//! so two subspaces are equal exactly when their stored bases are equal.

mod error;
mod field;
mod matrix;
mod subspace;

pub use error::LinalgError;
pub use field::{Elem, Field};
pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
