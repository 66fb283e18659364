//! Finite windows of a module category (spectroids) and ideals on them.
//!
//! A window fixes finitely many indecomposables, their Hom bases and composition tensors.
//! All ideal computations insert intermediates from the window only, so results are lower
//! bounds for the ideals of the full module category and exact when the window is complete.

mod error;
mod ideal;
mod window;

pub use error::SpectroidError;
pub use ideal::{Ideal, DEFAULT_STABILIZATION_BUDGET};
pub use window::{Window, WindowSummary};
