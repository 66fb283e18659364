use thiserror::Error;
use torsidl_quiver::QuiverError;
use torsidl_spectroid::SpectroidError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("value at {0:?} is not a submodule")]
    NotSubmodule(String),
    #[error("assignment is not functorial: basis morphism {index} of Hom({src}, {dst}) does not preserve it")]
    NotFunctorial { src: String, dst: String, index: usize },
    #[error("subspace of {0:?} is not stable under the algebra and all endomorphisms")]
    NotBistable(String),
    #[error("enumeration needs a finite prime field")]
    InfiniteField,
    #[error("enumeration budget of {0} candidates exceeded")]
    BudgetExceeded(usize),
    #[error("summand {0:?} of the determiner is not isomorphic to a window object")]
    OutsideWindow(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Spectroid(#[from] SpectroidError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
