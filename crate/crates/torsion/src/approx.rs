//! Left and right approximations by an ideal, with sources and targets given as sums of
//! window objects.

use crate::{IdealTorsionPair, TorsionError};
use serde::{Deserialize, Serialize};
use torsidl_linalg::{Elem, Matrix};
use torsidl_quiver::{ModuleRep, Morphism};
use torsidl_spectroid::{Ideal, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApproxKind {
    Left,
    Right,
}

/// A morphism `⊕ source[s] -> ⊕ target[t]` between sums of window objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub kind: ApproxKind,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    /// `components[t][s]` are coordinates in `Hom(source[s], target[t])`.
    pub components: Vec<Vec<Vec<Elem>>>,
    pub minimal: bool,
}

/// Serializable summary of an approximation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxSummary {
    pub kind: ApproxKind,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub minimal: bool,
}

impl ApproxResult {
    /// The source as a module, the target as a module and the morphism between them.
    pub fn realize(&self, w: &Window) -> (ModuleRep, ModuleRep, Morphism) {
        let alg = w.algebra();
        let srcs: Vec<&ModuleRep> = self.source.iter().map(|&s| w.object(s)).collect();
        let tgts: Vec<&ModuleRep> = self.target.iter().map(|&t| w.object(t)).collect();
        let (sm, _, sproj) = ModuleRep::direct_sum(alg, &srcs, "source");
        let (tm, tinj, _) = ModuleRep::direct_sum(alg, &tgts, "target");
        let mut f = Morphism::zero(alg, &sm, &tm);
        for (t, row) in self.components.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if c.iter().any(|e| !e.is_zero()) {
                    let part = w.morphism(self.source[s], self.target[t], c);
                    f = f.add(&tinj[t].compose(&part).compose(&sproj[s]));
                }
            }
        }
        (sm, tm, f)
    }

    pub fn summary(&self, w: &Window) -> ApproxSummary {
        let names = |v: &[usize]| v.iter().map(|&x| w.object(x).name.clone()).collect();
        ApproxSummary {
            kind: self.kind,
            source: names(&self.source),
            target: names(&self.target),
            minimal: self.minimal,
        }
    }

    /// Target summands (left) or source summands (right) with multiplicities, in window order.
    pub fn multiplicities(&self, w: &Window) -> Vec<usize> {
        let side = if self.kind == ApproxKind::Left { &self.target } else { &self.source };
        let mut m = vec![0; w.len()];
        for &x in side {
            m[x] += 1;
        }
        m
    }
}

fn zero_coords(w: &Window, x: usize, y: usize) -> Vec<Elem> {
    vec![w.field().zero(); w.hom_dim(x, y)]
}

/// Solves for `g = (g_t)` with `g ∘ f = phi` where `phi[s] ∈ Hom(src[s], x)`.
fn factors_through_left(
    w: &Window,
    src: &[usize],
    tgt: &[usize],
    comps: &[Vec<Vec<Elem>>],
    x: usize,
    phi: &[Vec<Elem>],
) -> bool {
    let rows: usize = src.iter().map(|&s| w.hom_dim(s, x)).sum();
    let rhs: Vec<Elem> = phi.concat();
    let mut a = Matrix::zeros(w.field(), rows, 0);
    for (t, &tx) in tgt.iter().enumerate() {
        let mut block = Matrix::zeros(w.field(), 0, w.hom_dim(tx, x));
        for (s, &sx) in src.iter().enumerate() {
            block = block.vstack(&w.precompose_matrix(sx, tx, x, &comps[t][s]));
        }
        a = a.hstack(&block);
    }
    solvable(&a, &rhs)
}

/// Solves for `h = (h_s)` with `f ∘ h = phi` where `phi[t] ∈ Hom(x, tgt[t])`.
fn factors_through_right(
    w: &Window,
    src: &[usize],
    tgt: &[usize],
    comps: &[Vec<Vec<Elem>>],
    x: usize,
    phi: &[Vec<Elem>],
) -> bool {
    let rows: usize = tgt.iter().map(|&t| w.hom_dim(x, t)).sum();
    let rhs: Vec<Elem> = phi.concat();
    let mut a = Matrix::zeros(w.field(), rows, 0);
    for (s, &sx) in src.iter().enumerate() {
        let mut block = Matrix::zeros(w.field(), 0, w.hom_dim(x, sx));
        for (t, &tx) in tgt.iter().enumerate() {
            block = block.vstack(&w.postcompose_matrix(x, sx, tx, &comps[t][s]));
        }
        a = a.hstack(&block);
    }
    solvable(&a, &rhs)
}

fn solvable(a: &Matrix, rhs: &[Elem]) -> bool {
    if rhs.iter().all(Elem::is_zero) {
        return true;
    }
    if a.cols() == 0 {
        return false;
    }
    a.solve(rhs).is_some()
}

/// Basis elements of `i(⊕ src, X)`, one slot nonzero at a time.
fn left_generators(w: &Window, src: &[usize], i: &Ideal, x: usize) -> Vec<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    for (s, &sx) in src.iter().enumerate() {
        for b in i.piece(sx, x).basis_vectors() {
            let mut phi: Vec<Vec<Elem>> = src.iter().map(|&o| zero_coords(w, o, x)).collect();
            phi[s] = b;
            out.push(phi);
        }
    }
    out
}

fn right_generators(w: &Window, tgt: &[usize], i: &Ideal, x: usize) -> Vec<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    for (t, &tx) in tgt.iter().enumerate() {
        for b in i.piece(x, tx).basis_vectors() {
            let mut phi: Vec<Vec<Elem>> = tgt.iter().map(|&o| zero_coords(w, x, o)).collect();
            phi[t] = b;
            out.push(phi);
        }
    }
    out
}

/// Checks that every basis element of `i(⊕ source, X)` (left) or `i(X, ⊕ target)` (right) factors.
pub fn verify_approximation(w: &Window, a: &ApproxResult, i: &Ideal) -> bool {
    (0..w.len()).all(|x| match a.kind {
        ApproxKind::Left => left_generators(w, &a.source, i, x)
            .iter()
            .all(|phi| factors_through_left(w, &a.source, &a.target, &a.components, x, phi)),
        ApproxKind::Right => right_generators(w, &a.target, i, x)
            .iter()
            .all(|phi| factors_through_right(w, &a.source, &a.target, &a.components, x, phi)),
    })
}

/// Greedily drops target summands (left) or source summands (right) whose component factors
/// through the remaining ones, in window order.
pub fn minimize(w: &Window, a: &ApproxResult) -> ApproxResult {
    let mut a = a.clone();
    let mut k = 0;
    loop {
        let len = if a.kind == ApproxKind::Left { a.target.len() } else { a.source.len() };
        if k >= len {
            break;
        }
        let mut rest = a.clone();
        let droppable = match a.kind {
            ApproxKind::Left => {
                let x = rest.target.remove(k);
                let phi = rest.components.remove(k);
                factors_through_left(w, &rest.source, &rest.target, &rest.components, x, &phi)
            }
            ApproxKind::Right => {
                let x = rest.source.remove(k);
                let phi: Vec<Vec<Elem>> = rest.components.iter_mut().map(|row| row.remove(k)).collect();
                factors_through_right(w, &rest.source, &rest.target, &rest.components, x, &phi)
            }
        };
        if droppable {
            a = rest;
        } else {
            k += 1;
        }
    }
    a.minimal = true;
    a
}

/// Universal map from `⊕ source` into the targets of a basis of `i(source, -)`, optionally
/// minimized by dropping target summands whose component factors through the others.
pub fn left_approximation(
    w: &Window,
    source: &[usize],
    i: &Ideal,
    minimize_result: bool,
) -> Result<ApproxResult, TorsionError> {
    i.check_window(w)?;
    let mut target = Vec::new();
    let mut rows: Vec<Vec<Vec<Elem>>> = Vec::new();
    for x in 0..w.len() {
        for phi in left_generators(w, source, i, x) {
            target.push(x);
            rows.push(phi);
        }
    }
    let mut a =
        ApproxResult { kind: ApproxKind::Left, source: source.to_vec(), target, components: rows, minimal: false };
    if minimize_result {
        a = minimize(w, &a);
    }
    if !verify_approximation(w, &a, i) {
        return Err(TorsionError::Mismatch("left approximation fails its factorization check".into()));
    }
    Ok(a)
}

/// Universal map from the sources of a basis of `i(-, target)` into `⊕ target`, optionally minimized.
/// For a torsion ideal this is the inclusion `tN -> N` up to isomorphism once minimized.
pub fn right_approximation(
    w: &Window,
    target: &[usize],
    i: &Ideal,
    minimize_result: bool,
) -> Result<ApproxResult, TorsionError> {
    i.check_window(w)?;
    let mut source = Vec::new();
    let mut cols: Vec<Vec<Vec<Elem>>> = Vec::new();
    for x in 0..w.len() {
        for phi in right_generators(w, target, i, x) {
            source.push(x);
            cols.push(phi);
        }
    }
    let components = (0..target.len()).map(|t| cols.iter().map(|c| c[t].clone()).collect()).collect();
    let mut a = ApproxResult { kind: ApproxKind::Right, source, target: target.to_vec(), components, minimal: false };
    if minimize_result {
        a = minimize(w, &a);
    }
    if !verify_approximation(w, &a, i) {
        return Err(TorsionError::Mismatch("right approximation fails its factorization check".into()));
    }
    Ok(a)
}

/// Whether the torsion ideal of `p` admits a left approximation of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finiteness {
    /// False when the window is incomplete: the answer then only concerns the window.
    pub exact: bool,
    pub value: bool,
}

pub fn is_functorially_finite(w: &Window, p: &IdealTorsionPair) -> Result<Finiteness, TorsionError> {
    let value = left_approximation(w, w.regular(), &p.torsion, false).is_ok();
    Ok(Finiteness { exact: w.is_complete(), value })
}
