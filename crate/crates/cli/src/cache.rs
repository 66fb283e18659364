//! Content-addressed cache of window specifications.

use crate::{CliError, WindowSpec};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use torsidl_spectroid::WindowSummary;

pub const CACHE_ENV: &str = "TORSIDL_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".torsidl";

/// Flag first, then the environment variable, then `./.torsidl`.
pub fn cache_dir(flag: Option<&Path>) -> PathBuf {
    match (flag, std::env::var_os(CACHE_ENV)) {
        (Some(p), _) => p.to_path_buf(),
        (None, Some(env)) => PathBuf::from(env),
        (None, None) => PathBuf::from(DEFAULT_CACHE_DIR),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedWindow {
    pub key: String,
    pub spec: WindowSpec,
    pub summary: WindowSummary,
}

fn entry(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("window-{key}.json"))
}

pub fn store(dir: &Path, spec: &WindowSpec, summary: WindowSummary) -> Result<CachedWindow, CliError> {
    std::fs::create_dir_all(dir)?;
    let cached = CachedWindow { key: spec.hash(), spec: spec.clone(), summary };
    std::fs::write(entry(dir, &cached.key), serde_json::to_string(&cached)?)?;
    Ok(cached)
}

/// Loads a cached window by its full key or a unique key prefix.
pub fn load(dir: &Path, key: &str) -> Result<CachedWindow, CliError> {
    let mut hits = Vec::new();
    if let Ok(entries) = std::fs::read_dir(dir) {
        for e in entries.flatten() {
            let name = e.file_name().to_string_lossy().into_owned();
            if let Some(k) = name.strip_prefix("window-").and_then(|n| n.strip_suffix(".json")) {
                if k.starts_with(key) {
                    hits.push(e.path());
                }
            }
        }
    }
    match hits.as_slice() {
        [one] => {
            let cached: CachedWindow = serde_json::from_str(&std::fs::read_to_string(one)?)?;
            if cached.spec.hash() != cached.key {
                return Err(CliError::Validation(format!("cache entry {} does not match its key", one.display())));
            }
            Ok(cached)
        }
        [] => Err(CliError::Usage(format!("no cached window with key {key:?} in {}", dir.display()))),
        _ => Err(CliError::Usage(format!("key prefix {key:?} is ambiguous"))),
    }
}
