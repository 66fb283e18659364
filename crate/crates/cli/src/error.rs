use thiserror::Error;
use torsidl_lattice::LatticeError;
use torsidl_quiver::QuiverError;
use torsidl_rank::RankError;
use torsidl_spectroid::SpectroidError;
use torsidl_torsion::TorsionError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Usage(_) => 3,
        }
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SpectroidError> for CliError {
    fn from(e: SpectroidError) -> Self {
        match e {
            SpectroidError::UnknownObject(_) => CliError::Usage(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<TorsionError> for CliError {
    fn from(e: TorsionError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<RankError> for CliError {
    fn from(e: RankError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}
