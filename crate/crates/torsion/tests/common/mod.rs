#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;
use torsidl_linalg::{Elem, Subspace};
use torsidl_quiver::{hom_space, load_corpus, Algebra, ModuleRep};
use torsidl_spectroid::Window;
use torsidl_torsion::Subfunctor;

pub fn corpus_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora").join(name)
}

pub fn window(name: &str) -> Window {
    let c = load_corpus(&corpus_dir(name)).unwrap();
    Window::build(&c.algebra, c.modules, c.manifest.complete).unwrap()
}

pub fn sub_window(name: &str, keep: &[&str]) -> Window {
    let c = load_corpus(&corpus_dir(name)).unwrap();
    let mods = c.modules.into_iter().filter(|m| keep.contains(&m.name.as_str())).collect();
    Window::build(&c.algebra, mods, false).unwrap()
}

pub fn idx(w: &Window, name: &str) -> usize {
    w.index_of(name).unwrap()
}

/// Nonzero vectors of `F_p^n` by brute force.
pub fn nonzero_vectors(p: u64, n: usize, w: &Window) -> Vec<Vec<Elem>> {
    let f = w.field();
    let total = p.pow(n as u32);
    (1..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let e = f.from_i64((code % p) as i64);
                    code /= p;
                    e
                })
                .collect()
        })
        .collect()
}

/// Every submodule of `m`, as sums of cyclic submodules.
pub fn all_submodules(alg: &Algebra, m: &ModuleRep, p: u64, w: &Window) -> Vec<Subspace> {
    let f = alg.field();
    let n = m.total_dim();
    let cyclic: BTreeSet<Vec<Vec<Elem>>> = nonzero_vectors(p, n, w)
        .into_iter()
        .map(|v| m.submodule_closure(alg, &Subspace::from_vectors(f, n, vec![v])).basis_vectors())
        .collect();
    let mut all: BTreeSet<Vec<Vec<Elem>>> = BTreeSet::from([Vec::new()]);
    let mut frontier = vec![Subspace::zero(f, n)];
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let j = s.sum(&Subspace::from_vectors(f, n, c.clone()));
            if all.insert(j.basis_vectors()) {
                frontier.push(j);
            }
        }
    }
    all.into_iter().map(|b| Subspace::from_vectors(f, n, b)).collect()
}

/// All subfunctors of the identity on `w`, by filtering every choice of submodules.
pub fn all_subfunctors(w: &Window) -> Vec<Subfunctor> {
    let p = w.field().characteristic();
    let subs: Vec<Vec<Subspace>> = w.objects().iter().map(|m| all_submodules(w.algebra(), m, p, w)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; w.len()];
    loop {
        let values = choice.iter().enumerate().map(|(x, &c)| subs[x][c].clone()).collect();
        if let Ok(t) = Subfunctor::from_values(w, values) {
            out.push(t);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < subs[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// `Σ g(C)` over `g : C -> U` for `C` in `gen`, computed directly on modules.
pub fn trace(alg: &Algebra, gen: &[&ModuleRep], u: &ModuleRep) -> Subspace {
    let f = alg.field();
    let mut vecs = Vec::new();
    for c in gen {
        for g in hom_space(alg, c, u).unwrap().basis() {
            vecs.extend(g.total(f).image().basis_vectors());
        }
    }
    Subspace::from_vectors(f, u.total_dim(), vecs)
}
