//! Ideals determined by an object, bi-submodules and the canonical determiner.
//!
//! An ideal `I` is left `C`-determined if `φ ∈ I` whenever `fφ ∈ I` for every `f` ending in `C`,
//! and right `C`-determined if `φ ∈ I` whenever `φg ∈ I` for every `g` starting in `C`.

use crate::approx::{left_approximation, ApproxResult};
use crate::pair::{pair_from_subfunctor, IdealTorsionPair};
use crate::subfunctor::{basis_total, push_forward};
use crate::{Subfunctor, TorsionError};
use rayon::prelude::*;
use std::collections::BTreeSet;
use torsidl_linalg::{Elem, Field, Matrix, Subspace};
use torsidl_quiver::{decompose, find_basis_iso, injective_hull_of_top, tau, ModuleRep};
use torsidl_spectroid::{Ideal, Window};

/// A morphism outside the ideal whose composites with all test maps lie inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminationWitness {
    pub src: usize,
    pub dst: usize,
    pub coords: Vec<Elem>,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect()
}

/// `{φ ∈ Hom(X, Y) : fφ ∈ i for all f : Y -> C}`.
fn left_test_space(w: &Window, i: &Ideal, x: usize, y: usize, c: &[usize]) -> Subspace {
    let mut d = Subspace::full(w.field(), w.hom_dim(x, y));
    for &cz in c {
        for k in 0..w.hom_dim(y, cz) {
            let f = unit(w.field(), w.hom_dim(y, cz), k);
            d = d.intersect(&i.piece(x, cz).preimage_under(&w.postcompose_matrix(x, y, cz, &f)));
        }
    }
    d
}

/// `{φ ∈ Hom(X, Y) : φg ∈ i for all g : C -> X}`.
fn right_test_space(w: &Window, i: &Ideal, x: usize, y: usize, c: &[usize]) -> Subspace {
    let mut d = Subspace::full(w.field(), w.hom_dim(x, y));
    for &cz in c {
        for k in 0..w.hom_dim(cz, x) {
            let g = unit(w.field(), w.hom_dim(cz, x), k);
            d = d.intersect(&i.piece(cz, y).preimage_under(&w.precompose_matrix(cz, x, y, &g)));
        }
    }
    d
}

fn unit(f: Field, n: usize, k: usize) -> Vec<Elem> {
    let mut v = vec![f.zero(); n];
    v[k] = f.one();
    v
}

fn witness(w: &Window, i: &Ideal, test: impl Fn(usize, usize) -> Subspace + Sync) -> Option<DeterminationWitness> {
    pairs(w.len()).par_iter().find_map_first(|&(x, y)| {
        let d = test(x, y);
        d.basis_vectors().into_iter().find(|v| !i.contains_coords(x, y, v)).map(|coords| DeterminationWitness {
            src: x,
            dst: y,
            coords,
        })
    })
}

/// A witness that `i` is not left determined by `⊕ c`, or `None` if it is.
pub fn left_determination_witness(w: &Window, i: &Ideal, c: &[usize]) -> Option<DeterminationWitness> {
    witness(w, i, |x, y| left_test_space(w, i, x, y, c))
}

/// A witness that `i` is not right determined by `⊕ c`, or `None` if it is.
pub fn right_determination_witness(w: &Window, i: &Ideal, c: &[usize]) -> Option<DeterminationWitness> {
    witness(w, i, |x, y| right_test_space(w, i, x, y, c))
}

pub fn is_left_determined(w: &Window, i: &Ideal, c: &[usize]) -> bool {
    left_determination_witness(w, i, c).is_none()
}

pub fn is_right_determined(w: &Window, i: &Ideal, c: &[usize]) -> bool {
    right_determination_witness(w, i, c).is_none()
}

/// Whether `x` is stable under the algebra action and all endomorphisms of object `c`.
pub fn is_bistable(w: &Window, c: usize, x: &Subspace) -> bool {
    x.ambient_dim() == w.total_dim(c) && w.object(c).is_submodule(w.algebra(), x) && push_forward(w, c, c, x).leq(x)
}

/// Smallest subspace containing `v` that is stable under the algebra and `End(c)`.
pub fn bistable_closure(w: &Window, c: usize, v: &Subspace) -> Subspace {
    let obj = w.object(c);
    let mut cur = v.clone();
    loop {
        let next = obj.submodule_closure(w.algebra(), &push_forward(w, c, c, &cur).sum(&cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Nonzero vectors of `F_p^n` with leading coefficient one.
fn projective_points(p: u64, n: usize, f: Field) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let count = p.pow(free as u32);
        for mut code in 0..count {
            let mut v = vec![f.zero(); n];
            v[lead] = f.one();
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = f.from_i64((code % p) as i64);
                code /= p;
            }
            out.push(v);
        }
    }
    out
}

/// Canonical order: by dimension, then by reduced basis.
pub fn sort_subspaces(v: &mut [Subspace]) {
    v.sort_by_key(|s| (s.dim(), s.basis_vectors()));
}

/// All bi-submodules of object `c`, sorted canonically. Needs a prime field; `budget` bounds the
/// number of seed vectors and of lattice elements.
pub fn bisubmodules(w: &Window, c: usize, budget: usize) -> Result<Vec<Subspace>, TorsionError> {
    let f = w.field();
    let Field::Prime(p) = f else {
        return Err(TorsionError::InfiniteField);
    };
    let n = w.total_dim(c);
    let seeds_needed =
        (0..n).try_fold(0usize, |acc, k| (p as usize).checked_pow(k as u32).and_then(|x| acc.checked_add(x)));
    if seeds_needed.is_none_or(|s| s > budget) {
        return Err(TorsionError::BudgetExceeded(budget));
    }
    let cyclic: BTreeSet<Vec<Vec<Elem>>> = projective_points(p as u64, n, f)
        .into_par_iter()
        .map(|v| bistable_closure(w, c, &Subspace::from_vectors(f, n, vec![v])).basis_vectors())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let cyclic: Vec<Subspace> = cyclic.into_iter().map(|b| Subspace::from_vectors(f, n, b)).collect();
    let mut all: BTreeSet<Vec<Vec<Elem>>> = BTreeSet::new();
    all.insert(Vec::new());
    let mut frontier: Vec<Subspace> = vec![Subspace::zero(f, n)];
    while let Some(s) = frontier.pop() {
        for g in &cyclic {
            let j = s.sum(g);
            if all.insert(j.basis_vectors()) {
                if all.len() > budget {
                    return Err(TorsionError::BudgetExceeded(budget));
                }
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Subspace> = all.into_iter().map(|b| Subspace::from_vectors(f, n, b)).collect();
    sort_subspaces(&mut out);
    Ok(out)
}

/// `I_X(M, N) = {φ : gφf(e) ∈ X for all f : P(v) -> M, g : N -> C}` computed directly.
fn ideal_of_bisubmodule(w: &Window, c: usize, x: &Subspace) -> Ideal {
    let ann = x.annihilator_matrix();
    let n = w.len();
    let flat: Vec<Subspace> = pairs(n)
        .par_iter()
        .map(|&(m, nn)| {
            let d = w.hom_dim(m, nn);
            let mut rows = Matrix::zeros(w.field(), 0, d);
            if ann.rows() > 0 {
                for (v, &pv) in w.regular().iter().enumerate() {
                    for fk in 0..w.hom_dim(pv, m) {
                        let elt = basis_total(w, pv, m, fk).mul_vec(w.generator(v));
                        for gk in 0..w.hom_dim(nn, c) {
                            let g = basis_total(w, nn, c, gk);
                            let cols: Vec<Vec<Elem>> = (0..d)
                                .map(|k| ann.mul_vec(&g.mul_vec(&basis_total(w, m, nn, k).mul_vec(&elt))))
                                .collect();
                            rows = rows.vstack(&Matrix::from_columns(w.field(), ann.rows(), &cols));
                        }
                    }
                }
            }
            if rows.rows() == 0 {
                Subspace::full(w.field(), d)
            } else {
                rows.kernel()
            }
        })
        .collect();
    let pieces = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[Subspace]>::to_vec).collect() };
    Ideal::from_pieces(w, pieces)
}

/// The left `c`-determined torsion pair with `tC = x`, where `tN = ∩ g⁻¹(x)` over `g : N -> C`.
pub fn determined_ideal_from_bisubmodule(w: &Window, c: usize, x: &Subspace) -> Result<IdealTorsionPair, TorsionError> {
    if !is_bistable(w, c, x) {
        return Err(TorsionError::NotBistable(w.object(c).name.clone()));
    }
    let f = w.field();
    let values = (0..w.len())
        .map(|nn| {
            let mut t = Subspace::full(f, w.total_dim(nn));
            for k in 0..w.hom_dim(nn, c) {
                t = t.intersect(&x.preimage_under(&basis_total(w, nn, c, k)));
            }
            t
        })
        .collect();
    let p = pair_from_subfunctor(w, &Subfunctor::from_values(w, values)?)?;
    if p.torsion != ideal_of_bisubmodule(w, c, x) {
        return Err(TorsionError::Mismatch("torsion ideal differs from the quantifier description".into()));
    }
    if p.t.value(c) != x {
        return Err(TorsionError::Mismatch("tC differs from the bi-submodule".into()));
    }
    if !is_left_determined(w, &p.torsion, &[c]) {
        return Err(TorsionError::Mismatch("pair of a bi-submodule is not left determined".into()));
    }
    Ok(p)
}

/// `τQ ⊕ E(top K)` for the minimal left approximation `A -> T` with kernel `K` and cokernel `Q`.
#[derive(Clone, Debug)]
pub struct CanonicalDeterminer {
    pub module: ModuleRep,
    /// Window objects isomorphic to the indecomposable summands, with repetition.
    pub summands: Vec<usize>,
    pub approximation: ApproxResult,
}

pub fn canonical_determiner(w: &Window, p: &IdealTorsionPair) -> Result<CanonicalDeterminer, TorsionError> {
    let alg = w.algebra();
    let approx = left_approximation(w, w.regular(), &p.torsion, true)?;
    let (src, dst, phi) = approx.realize(w);
    let (k, _, q, _, _) = phi.kernel_cokernel_image(alg, &src, &dst);
    let tq = tau(alg, &q);
    let hull = injective_hull_of_top(alg, &k);
    let (module, _, _) = ModuleRep::direct_sum(alg, &[&tq, &hull], "determiner");
    let mut summands = Vec::new();
    for s in decompose(alg, &module)? {
        let idx = (0..w.len())
            .find(|&x| find_basis_iso(alg, w.object(x), &s.module).is_some())
            .ok_or_else(|| TorsionError::OutsideWindow(s.module.name.clone()))?;
        summands.extend(std::iter::repeat_n(idx, s.multiplicity));
    }
    summands.sort_unstable();
    if !is_left_determined(w, &p.torsion, &summands) {
        return Err(TorsionError::Mismatch("torsion ideal is not determined by its canonical determiner".into()));
    }
    Ok(CanonicalDeterminer { module, summands, approximation: approx })
}
