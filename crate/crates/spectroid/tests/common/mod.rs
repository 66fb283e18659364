#![allow(dead_code)]

use std::path::PathBuf;
use torsidl_quiver::load_corpus;
use torsidl_spectroid::Window;

pub fn corpus_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora").join(name)
}

pub fn window(name: &str) -> Window {
    let c = load_corpus(&corpus_dir(name)).unwrap();
    Window::build(&c.algebra, c.modules, c.manifest.complete).unwrap()
}

/// A window on a subset of a corpus, by object name.
pub fn sub_window(name: &str, keep: &[&str]) -> Window {
    let c = load_corpus(&corpus_dir(name)).unwrap();
    let mods = c.modules.into_iter().filter(|m| keep.contains(&m.name.as_str())).collect();
    Window::build(&c.algebra, mods, false).unwrap()
}
