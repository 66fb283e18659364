//! Radical filtrations on a window.
//!
//! Computes the chain `rad^n(A, M)`, the projective rank of an object (the depth of the radical
//! power containing `Hom(A, M)`), left `rad^n`-approximations, the layers of the radical
//! filtration in which an object occurs, and the bar morphism `A -> M^n` of a map `A -> M`.

mod approx;
mod bar;
mod chain;
mod error;

pub use approx::{left_radn_approximation, summand_occurrences};
pub use bar::{bar_morphism, regular_coordinates, BarMorphism};
pub use chain::{projective_rank, rad_chain, rad_chain_of_sum, OrdinalTag, RankReport};
pub use error::RankError;
