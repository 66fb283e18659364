use thiserror::Error;
use torsidl_quiver::QuiverError;
use torsidl_rank::RankError;
use torsidl_spectroid::SpectroidError;
use torsidl_torsion::TorsionError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("enumeration needs a finite prime field")]
    InfiniteField,
    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("elements {0} and {1} have no {2}")]
    NotALattice(usize, usize, &'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("quotient of {0:?} has a summand outside the window")]
    OutsideWindow(String),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Spectroid(#[from] SpectroidError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
