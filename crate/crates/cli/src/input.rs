//! Window specifications read from files or corpus directories, and their content hashes.

use crate::CliError;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use torsidl_quiver::{load_corpus, parse_document, AlgebraSpec, ModuleSpec};
use torsidl_spectroid::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub algebra: AlgebraSpec,
    pub modules: Vec<ModuleSpec>,
    pub complete: bool,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// SHA-256 of the canonical JSON form of `value`.
pub fn content_hash<T: Serialize>(value: &T) -> String {
    let canonical = serde_json::to_value(value).expect("specs serialize").to_string();
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

impl WindowSpec {
    pub fn from_corpus(dir: &Path) -> Result<WindowSpec, CliError> {
        let c = load_corpus(dir)?;
        Ok(WindowSpec { algebra: c.algebra_spec, modules: c.module_specs, complete: c.manifest.complete })
    }

    pub fn from_files(algebra: &Path, modules: &[PathBuf], complete: bool) -> Result<WindowSpec, CliError> {
        let algebra: AlgebraSpec = parse_document(&read(algebra)?)?;
        let modules = modules.iter().map(|m| Ok(parse_document(&read(m)?)?)).collect::<Result<_, CliError>>()?;
        Ok(WindowSpec { algebra, modules, complete })
    }

    pub fn hash(&self) -> String {
        content_hash(self)
    }

    pub fn build(&self) -> Result<Window, CliError> {
        let alg = self.algebra.build()?;
        let modules = self
            .modules
            .iter()
            .map(|m| m.to_module(&alg).map_err(|e| CliError::Validation(format!("module {:?}: {e}", m.name))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Window::build(&alg, modules, self.complete)?)
    }
}
