use thiserror::Error;
use torsidl_quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectroidError {
    #[error("object {0:?} is not indecomposable (no locality certificate)")]
    Decomposable(String),
    #[error("duplicate isomorphism class: {0:?} and {1:?}")]
    Duplicate(String, String),
    #[error("no window object is isomorphic to the projective at vertex {0:?}")]
    MissingProjective(String),
    #[error("ideals or objects come from different windows")]
    WindowMismatch,
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("morphism {0} does not belong to the window")]
    ForeignMorphism(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
