//! Transport of ideal torsion pairs along the duality `D` to the opposite algebra.

use crate::pair::{pair_from_subfunctor, IdealTorsionPair};
use crate::{Subfunctor, TorsionError};
use torsidl_linalg::Subspace;
use torsidl_quiver::dualize_morphism;
use torsidl_spectroid::{Ideal, Window};

/// `D(i)` on the opposite window: `Dφ : DY -> DX` for `φ ∈ i(X, Y)`.
pub fn dualize_ideal(w: &Window, wop: &Window, i: &Ideal) -> Result<Ideal, TorsionError> {
    i.check_window(w)?;
    check_opposite(w, wop)?;
    let n = w.len();
    let pieces = (0..n)
        .map(|b| {
            (0..n)
                .map(|a| {
                    let vecs = i
                        .piece(a, b)
                        .basis_vectors()
                        .iter()
                        .map(|c| wop.coords(b, a, &dualize_morphism(&w.morphism(a, b, c))))
                        .collect();
                    Subspace::from_vectors(w.field(), wop.hom_dim(b, a), vecs)
                })
                .collect()
        })
        .collect();
    Ok(Ideal::from_pieces(wop, pieces))
}

fn check_opposite(w: &Window, wop: &Window) -> Result<(), TorsionError> {
    let ok = w.len() == wop.len() && (0..w.len()).all(|x| w.object(x).dims == wop.object(x).dims);
    if ok {
        Ok(())
    } else {
        Err(TorsionError::Mismatch("window is not the opposite of the given window".into()))
    }
}

/// The pair `(DJ, DI)` over the opposite algebra. Its subfunctor is `t(DX) = (tX)^⊥ ≅ D(X / tX)`.
pub fn dualize_pair(w: &Window, wop: &Window, p: &IdealTorsionPair) -> Result<IdealTorsionPair, TorsionError> {
    check_opposite(w, wop)?;
    let values = p.t.values().iter().map(Subspace::annihilator).collect();
    let q = pair_from_subfunctor(wop, &Subfunctor::from_values(wop, values)?)?;
    if q.torsion != dualize_ideal(w, wop, &p.torsionfree)? {
        return Err(TorsionError::Mismatch("dual torsion ideal differs from D(J)".into()));
    }
    if q.torsionfree != dualize_ideal(w, wop, &p.torsion)? {
        return Err(TorsionError::Mismatch("dual torsion-free ideal differs from D(I)".into()));
    }
    Ok(q)
}
