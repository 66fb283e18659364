//! Bound quiver algebras over exact fields and their finite-dimensional representations.
//!
//! Provides path-algebra construction, modules as representations, Hom spaces,
//! kernels and cokernels, Krull-Schmidt decomposition, the duality `D` and the
//! Auslander-Reiten translate.

mod algebra;
mod decompose;
mod dual;
mod error;
mod hom;
mod module;
mod projective;
pub mod spec;

pub use algebra::{Algebra, Arrow, Combination, Path, QuiverPresentation, Relation, DEFAULT_PATH_BOUND};
pub use decompose::{
    certify_local, decompose, end_radical, is_indecomposable, is_isomorphic, LocalityCertificate, Summand,
};
pub use dual::{double_dual_iso, dualize, dualize_morphism};
pub use error::QuiverError;
pub use hom::{find_basis_iso, hom_space, HomSpace};
pub use module::{module_from_i64, ModuleRep, Morphism};
pub use projective::{
    injective, injective_hull_of_top, projective, projective_cover, projective_generator, regular_module,
    right_mult_arrow, tau, tau_inverse, top_dims,
};
pub use spec::{load_corpus, parse_document, AlgebraSpec, Corpus, CorpusManifest, FieldSpec, ModuleSpec};
