//! Exhaustive enumeration of subfunctors of the identity on a window over a prime field.

use crate::{FiniteLattice, LatticeError};
use rayon::prelude::*;
use std::collections::BTreeSet;
use torsidl_linalg::{Elem, Field, Subspace};
use torsidl_quiver::{Algebra, ModuleRep, Morphism};
use torsidl_rank::bar_morphism;
use torsidl_spectroid::Window;
use torsidl_torsion::Subfunctor;

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Nonzero vectors of `F_p^n` with leading coefficient one.
pub(crate) fn projective_points(f: Field, n: usize, budget: usize) -> Result<Vec<Vec<Elem>>, LatticeError> {
    let Field::Prime(p) = f else { return Err(LatticeError::InfiniteField) };
    let p = p as u64;
    let mut out = Vec::new();
    for lead in 0..n {
        let count = p.checked_pow((n - lead - 1) as u32).filter(|&c| c as usize <= budget);
        let count = count.ok_or(LatticeError::BudgetExceeded(budget))?;
        if out.len() + count as usize > budget {
            return Err(LatticeError::BudgetExceeded(budget));
        }
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
    Ok(out)
}

fn key(t: &Subfunctor) -> (usize, Vec<Vec<Vec<Elem>>>) {
    (t.total_dim(), t.values().iter().map(Subspace::basis_vectors).collect())
}

/// All subfunctors of the identity on `w`: principal ones from every seed vector, closed under
/// sums. Sorted by total dimension and then by reduced bases.
pub fn enumerate_subfunctors(w: &Window, budget: usize) -> Result<FiniteLattice<Subfunctor>, LatticeError> {
    let f = w.field();
    let mut seeds = Vec::new();
    for x in 0..w.len() {
        for v in projective_points(f, w.total_dim(x), budget)? {
            seeds.push((x, v));
            if seeds.len() > budget {
                return Err(LatticeError::BudgetExceeded(budget));
            }
        }
    }
    let principal: BTreeSet<(usize, Vec<Vec<Vec<Elem>>>)> =
        seeds.par_iter().map(|(x, v)| key(&Subfunctor::principal(w, *x, v))).collect::<Vec<_>>().into_iter().collect();
    let principal: Vec<Subfunctor> = principal.into_iter().map(|k| from_key(w, k)).collect();
    let mut all: BTreeSet<(usize, Vec<Vec<Vec<Elem>>>)> = BTreeSet::new();
    let zero = Subfunctor::zero(w);
    all.insert(key(&zero));
    let mut frontier = vec![zero];
    while let Some(t) = frontier.pop() {
        for g in &principal {
            let j = t.join(g);
            if all.insert(key(&j)) {
                if all.len() > budget {
                    return Err(LatticeError::BudgetExceeded(budget));
                }
                frontier.push(j);
            }
        }
    }
    let elements: Vec<Subfunctor> = all.into_iter().map(|k| from_key(w, k)).collect();
    FiniteLattice::from_order(elements, Subfunctor::leq)
}

fn from_key(w: &Window, k: (usize, Vec<Vec<Vec<Elem>>>)) -> Subfunctor {
    let values =
        k.1.into_iter().enumerate().map(|(x, b)| Subspace::from_vectors(w.field(), w.total_dim(x), b)).collect();
    Subfunctor::from_values_unchecked(w, values)
}

/// Smallest subfunctor containing `v` at object `x`.
pub fn principal_subfunctor(w: &Window, x: usize, v: &[Elem]) -> Subfunctor {
    Subfunctor::principal(w, x, v)
}

/// The subfunctor of `φ : A -> X`: generated by the components of `φ̄(1) ∈ X^n`, that is by
/// `φ(a_1), ..., φ(a_n)`.
pub fn subfunctor_from_morphism(w: &Window, x: usize, phi: &Morphism) -> Result<Subfunctor, LatticeError> {
    let alg = w.algebra();
    let m = w.object(x);
    let bar = bar_morphism(alg, m, phi)?;
    let one = unit_image(alg, m, &bar.morphism);
    let n = alg.dim();
    let copies = (0..n).map(|i| copy_of(alg, m, i, &one)).collect();
    let mut seeds: Vec<Subspace> = (0..w.len()).map(|y| Subspace::zero(w.field(), w.total_dim(y))).collect();
    seeds[x] = Subspace::from_vectors(w.field(), m.total_dim(), copies);
    Ok(Subfunctor::closure(w, seeds))
}

/// `φ̄(1)` in the coordinates of `M^n`.
fn unit_image(alg: &Algebra, m: &ModuleRep, bar: &Morphism) -> Vec<Elem> {
    let f = alg.field();
    let pos = torsidl_rank::regular_coordinates(alg);
    let a_dim: usize = bar.blocks.iter().map(|b| b.cols()).sum();
    let mut one = vec![f.zero(); a_dim];
    for v in 0..alg.num_vertices() {
        one[pos[alg.idempotent(v)]] = f.one();
    }
    let _ = m;
    bar.apply(f, &one)
}

/// Copy `i` of `M` inside `M^n`, whose vertex blocks are ordered copy by copy.
fn copy_of(alg: &Algebra, m: &ModuleRep, i: usize, v: &[Elem]) -> Vec<Elem> {
    let f = alg.field();
    let n = alg.dim();
    let mut out = vec![f.zero(); m.total_dim()];
    let mut off = 0;
    for vx in 0..alg.num_vertices() {
        let d = m.dims[vx];
        for k in 0..d {
            out[m.offset(vx) + k] = v[off + i * d + k].clone();
        }
        off += n * d;
    }
    out
}
