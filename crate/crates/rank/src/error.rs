use thiserror::Error;
use torsidl_quiver::QuiverError;
use torsidl_spectroid::SpectroidError;
use torsidl_torsion::TorsionError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("morphism does not start at the regular module")]
    NotRegularSource,
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Spectroid(#[from] SpectroidError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
