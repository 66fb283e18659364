//! Classical torsion classes of a window, found as sets of objects closed under quotients and
//! extensions. Submodules are enumerated over the prime field.

use crate::enumerate::projective_points;
use crate::LatticeError;
use std::collections::BTreeSet;
use torsidl_linalg::{Elem, Subspace};
use torsidl_quiver::{decompose, find_basis_iso, Algebra, ModuleRep};
use torsidl_spectroid::Window;
use torsidl_torsion::IdealTorsionPair;

const MAX_OBJECTS: usize = 20;

/// Every submodule of `m`, as sums of cyclic submodules.
pub fn all_submodules(alg: &Algebra, m: &ModuleRep, budget: usize) -> Result<Vec<Subspace>, LatticeError> {
    let f = alg.field();
    let n = m.total_dim();
    let cyclic: BTreeSet<Vec<Vec<Elem>>> = projective_points(f, n, budget)?
        .into_iter()
        .map(|v| m.submodule_closure(alg, &Subspace::from_vectors(f, n, vec![v])).basis_vectors())
        .collect();
    let mut all: BTreeSet<Vec<Vec<Elem>>> = BTreeSet::from([Vec::new()]);
    let mut frontier = vec![Subspace::zero(f, n)];
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let j = s.sum(&Subspace::from_vectors(f, n, c.clone()));
            if all.insert(j.basis_vectors()) {
                if all.len() > budget {
                    return Err(LatticeError::BudgetExceeded(budget));
                }
                frontier.push(j);
            }
        }
    }
    Ok(all.into_iter().map(|b| Subspace::from_vectors(f, n, b)).collect())
}

/// Bitmask of the window objects occurring as summands of `m`.
fn summand_mask(w: &Window, m: &ModuleRep) -> Result<u32, LatticeError> {
    let alg = w.algebra();
    let mut mask = 0u32;
    for s in decompose(alg, m)? {
        let x = (0..w.len())
            .find(|&x| find_basis_iso(alg, w.object(x), &s.module).is_some())
            .ok_or_else(|| LatticeError::OutsideWindow(m.name.clone()))?;
        mask |= 1 << x;
    }
    Ok(mask)
}

/// Torsion classes as sorted lists of object indices, in increasing bitmask order.
pub fn torsion_classes(w: &Window, budget: usize) -> Result<Vec<Vec<usize>>, LatticeError> {
    let n = w.len();
    if n > MAX_OBJECTS {
        return Err(LatticeError::BudgetExceeded(MAX_OBJECTS));
    }
    let alg = w.algebra();
    // quotients[x]: summands of quotients of X; extensions: (X, sub mask, quotient mask).
    let mut quotients = vec![0u32; n];
    let mut extensions = Vec::new();
    for x in 0..n {
        let m = w.object(x);
        for u in all_submodules(alg, m, budget)? {
            let (sub, _) = m.submodule(alg, &u, "U");
            let (quot, _) = m.quotient(alg, &u, "Q");
            let (sm, qm) = (summand_mask(w, &sub)?, summand_mask(w, &quot)?);
            quotients[x] |= qm;
            extensions.push((x, sm, qm));
        }
    }
    let mut out = Vec::new();
    for s in 0u32..(1 << n) {
        let quot_closed = (0..n).all(|x| s >> x & 1 == 0 || quotients[x] & !s == 0);
        let ext_closed = extensions.iter().all(|&(x, sm, qm)| sm & !s != 0 || qm & !s != 0 || s >> x & 1 == 1);
        if quot_closed && ext_closed {
            out.push((0..n).filter(|x| s >> x & 1 == 1).collect());
        }
    }
    Ok(out)
}

/// The pairs `(⟨T⟩, ⟨T⟩^⊥)` of torsion classes, each checked to be an ideal torsion pair.
pub fn torsion_class_pairs(w: &Window, classes: &[Vec<usize>]) -> Result<Vec<IdealTorsionPair>, LatticeError> {
    classes
        .iter()
        .map(|c| {
            let i = w.ideal_of_subcategory(c);
            let p = torsidl_torsion::torsion_closure(w, &i)?;
            if p.torsion != i {
                return Err(LatticeError::Precondition(format!("ideal of class {c:?} is not a torsion ideal")));
            }
            Ok(p)
        })
        .collect()
}
