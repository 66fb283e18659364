//! Ideal torsion pairs on a window of finitely many indecomposable modules.
//!
//! A pair `(I, J)` of ideals with `J ∘ I = 0` that are each other's annihilators corresponds to a
//! subfunctor `t` of the identity. This crate computes that correspondence, closures and perps,
//! products and extension pairs, approximations, determined ideals, bi-submodules and the
//! transport of pairs to the opposite algebra.

mod approx;
mod determined;
mod dual;
mod error;
mod pair;
mod report;
mod subfunctor;

pub use approx::{
    is_functorially_finite, left_approximation, minimize, right_approximation, verify_approximation, ApproxKind,
    ApproxResult, ApproxSummary, Finiteness,
};
pub use determined::{
    bistable_closure, bisubmodules, canonical_determiner, determined_ideal_from_bisubmodule, is_bistable,
    is_left_determined, is_right_determined, left_determination_witness, right_determination_witness, sort_subspaces,
    CanonicalDeterminer, DeterminationWitness,
};
pub use dual::{dualize_ideal, dualize_pair};
pub use error::TorsionError;
pub use pair::{
    is_idempotent, ob_generates, pair_diamond, pair_from_subfunctor, pair_join, pair_meet, pair_product, perp_left,
    perp_right, subfunctor_from_pair, subfunctor_of_ideal, torsion_closure, torsionfree_closure, unit_pair,
    verify_pair, zero_pair, IdealTorsionPair,
};
pub use report::{pair_report, PairReport};
pub use subfunctor::{Subfunctor, SubfunctorDims};
