use thiserror::Error;
use torsidl_linalg::LinalgError;

/// Errors raised while building algebras, validating modules and decomposing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("relation {index} is not admissible: {reason}")]
    NonAdmissible { index: usize, reason: String },
    #[error("path closure exceeds the bound {0}; the presentation looks infinite-dimensional")]
    PathBoundExceeded(usize),
    #[error("module {module:?}: {reason}")]
    InvalidModule { module: String, reason: String },
    #[error("morphism does not intertwine the arrow maps at arrow {0:?}")]
    NotAMorphism(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("decomposition of {0:?} not found within the search budget")]
    DecompositionUndecided(String),
    #[error("spec error: {0}")]
    Spec(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
