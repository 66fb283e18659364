//! Library behind the `torsidl` binary: window specifications and their cache, command reports
//! with canonical JSON, and the bundled verification suites.

pub mod cache;
pub mod commands;
mod error;
mod input;
mod report;
pub mod suites;

pub use error::CliError;
pub use input::{content_hash, WindowSpec};
pub use report::Report;
