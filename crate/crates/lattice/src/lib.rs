//! Lattices of subfunctors of the identity on a window.
//!
//! Over a prime field the subfunctors of a window form a finite modular lattice. This crate
//! enumerates it, computes its m-dimension by iterated collapse of finite-length intervals,
//! counts classical torsion classes for comparison, and produces chain certificates that give
//! lower-bound evidence on windows of representation-infinite algebras.

mod certificate;
mod classes;
mod enumerate;
mod error;
mod export;
mod finite;
mod tdim;

pub use certificate::{
    bisubmodule_lattice, descending_chain_certificate, diamond_power_chain, ChainCertificate, ChainCertificateExport,
    DiamondChain, StrictnessWitness,
};
pub use classes::{all_submodules, torsion_class_pairs, torsion_classes};
pub use enumerate::{enumerate_subfunctors, principal_subfunctor, subfunctor_from_morphism, DEFAULT_BUDGET};
pub use error::LatticeError;
pub use export::{export_lattice, subfunctor_hash, ElementExport, LatticeExport};
pub use finite::{mdim, FiniteLattice, MDim};
pub use tdim::{torsion_dimension_report, TdOptions, TorsionDimensionReport};
