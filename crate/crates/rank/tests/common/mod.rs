#![allow(dead_code)]

use std::path::PathBuf;
use torsidl_quiver::{load_corpus, Corpus};
use torsidl_spectroid::Window;

pub fn corpus_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora").join(name)
}

pub fn corpus(name: &str) -> Corpus {
    load_corpus(&corpus_dir(name)).unwrap()
}

pub fn window(name: &str) -> Window {
    let c = corpus(name);
    Window::build(&c.algebra, c.modules, c.manifest.complete).unwrap()
}

pub fn sub_window(name: &str, keep: &[&str]) -> Window {
    let c = corpus(name);
    let mods = c.modules.into_iter().filter(|m| keep.contains(&m.name.as_str())).collect();
    Window::build(&c.algebra, mods, false).unwrap()
}

pub fn idx(w: &Window, name: &str) -> usize {
    w.index_of(name).unwrap()
}
