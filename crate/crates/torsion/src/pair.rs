//! Ideal torsion pairs on a window and their correspondence with subfunctors of the identity.
//!
//! A subfunctor `t` determines the pair `I = {φ : Im φ ⊆ tY}`, `J = {ψ : tX ⊆ ker ψ}`.
//! Conversely `tX = {φ(1) : φ ∈ I(A, X)}`.

use crate::subfunctor::{basis_total, images_under};
use crate::{Subfunctor, TorsionError};
use rayon::prelude::*;
use torsidl_linalg::{Elem, Matrix, Subspace};
use torsidl_quiver::hom_space;
use torsidl_spectroid::{Ideal, Window};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTorsionPair {
    pub torsion: Ideal,
    pub torsionfree: Ideal,
    pub t: Subfunctor,
    /// True iff the window is complete, so the pair is a pair of `mod A` and not a window restriction.
    pub exact: bool,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect()
}

fn assemble(w: &Window, flat: Vec<Subspace>) -> Ideal {
    let n = w.len();
    let pieces = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[Subspace]>::to_vec).collect() };
    Ideal::from_pieces(w, pieces)
}

/// Kernel of the linear map on Hom(X, Y) coordinates whose `k`-th column is `cols[k]`.
fn kernel_of_columns(w: &Window, rows: usize, cols: &[Vec<Elem>]) -> Subspace {
    if rows == 0 {
        return Subspace::full(w.field(), cols.len());
    }
    Matrix::from_columns(w.field(), rows, cols).kernel()
}

/// `{φ ∈ Hom(X, Y) : Im φ ⊆ V}` for a subspace `V` of `Y`.
pub(crate) fn maps_into(w: &Window, x: usize, y: usize, v: &Subspace) -> Subspace {
    let ann = v.annihilator_matrix();
    let cols: Vec<Vec<Elem>> =
        (0..w.hom_dim(x, y)).map(|k| ann.mul(&basis_total(w, x, y, k)).entries().to_vec()).collect();
    kernel_of_columns(w, ann.rows() * w.total_dim(x), &cols)
}

/// `{ψ ∈ Hom(X, Y) : ψ(V) = 0}` for a subspace `V` of `X`.
pub(crate) fn maps_killing(w: &Window, x: usize, y: usize, v: &Subspace) -> Subspace {
    let basis = Matrix::from_columns(w.field(), w.total_dim(x), &v.basis_vectors());
    let cols: Vec<Vec<Elem>> =
        (0..w.hom_dim(x, y)).map(|k| basis_total(w, x, y, k).mul(&basis).entries().to_vec()).collect();
    kernel_of_columns(w, w.total_dim(y) * v.dim(), &cols)
}

/// `tX = Σ_v {φ(e_v) : φ ∈ I(P(v), X)}`.
pub fn subfunctor_of_ideal(w: &Window, i: &Ideal) -> Subfunctor {
    let f = w.field();
    let values = (0..w.len())
        .map(|x| {
            let mut vecs = Vec::new();
            for (v, &p) in w.regular().iter().enumerate() {
                for c in i.piece(p, x).basis_vectors() {
                    vecs.push(w.morphism(p, x, &c).apply(f, w.generator(v)));
                }
            }
            Subspace::from_vectors(f, w.total_dim(x), vecs)
        })
        .collect();
    Subfunctor::from_values_unchecked(w, values)
}

/// The pair `(I, J)` of a validated subfunctor.
pub fn pair_from_subfunctor(w: &Window, t: &Subfunctor) -> Result<IdealTorsionPair, TorsionError> {
    t.validate(w)?;
    let ps = pairs(w.len());
    let torsion = ps.par_iter().map(|&(x, y)| maps_into(w, x, y, t.value(y))).collect();
    let torsionfree = ps.par_iter().map(|&(x, y)| maps_killing(w, x, y, t.value(x))).collect();
    Ok(IdealTorsionPair {
        torsion: assemble(w, torsion),
        torsionfree: assemble(w, torsionfree),
        t: t.clone(),
        exact: w.is_complete(),
    })
}

/// The subfunctor of a pair, recomputed from its torsion ideal at the regular module.
pub fn subfunctor_from_pair(w: &Window, p: &IdealTorsionPair) -> Subfunctor {
    subfunctor_of_ideal(w, &p.torsion)
}

/// The smallest torsion ideal containing `i`, with its pair.
pub fn torsion_closure(w: &Window, i: &Ideal) -> Result<IdealTorsionPair, TorsionError> {
    i.check_window(w)?;
    pair_from_subfunctor(w, &subfunctor_of_ideal(w, i))
}

/// The smallest torsion-free ideal containing `i`, with its pair.
///
/// `tX` is the intersection of the kernels of all `ψ ∈ i(X, Y)`. Composing with an injective
/// envelope preserves kernels, so the injectives of the window already give the full intersection.
pub fn torsionfree_closure(w: &Window, i: &Ideal) -> Result<IdealTorsionPair, TorsionError> {
    i.check_window(w)?;
    let f = w.field();
    let values = (0..w.len())
        .map(|x| {
            let mut t = Subspace::full(f, w.total_dim(x));
            for y in 0..w.len() {
                for c in i.piece(x, y).basis_vectors() {
                    t = t.intersect(&w.morphism(x, y, &c).total(f).kernel());
                }
            }
            t
        })
        .collect();
    pair_from_subfunctor(w, &Subfunctor::from_values_unchecked(w, values))
}

/// `I^⊥(X, Y) = {ψ : ψ ∘ φ = 0 for all φ ∈ I(W, X)}`.
pub fn perp_right(w: &Window, i: &Ideal) -> Result<Ideal, TorsionError> {
    i.check_window(w)?;
    let n = w.len();
    let flat = pairs(n)
        .par_iter()
        .map(|&(x, y)| {
            let d = w.hom_dim(x, y);
            let mut m = Matrix::zeros(w.field(), 0, d);
            for src in 0..n {
                for phi in i.piece(src, x).basis_vectors() {
                    m = m.vstack(&w.precompose_matrix(src, x, y, &phi));
                }
            }
            if m.rows() == 0 {
                Subspace::full(w.field(), d)
            } else {
                m.kernel()
            }
        })
        .collect();
    Ok(assemble(w, flat))
}

/// `^⊥J(X, Y) = {φ : ψ ∘ φ = 0 for all ψ ∈ J(Y, Z)}`.
pub fn perp_left(w: &Window, j: &Ideal) -> Result<Ideal, TorsionError> {
    j.check_window(w)?;
    let n = w.len();
    let flat = pairs(n)
        .par_iter()
        .map(|&(x, y)| {
            let d = w.hom_dim(x, y);
            let mut m = Matrix::zeros(w.field(), 0, d);
            for z in 0..n {
                for psi in j.piece(y, z).basis_vectors() {
                    m = m.vstack(&w.postcompose_matrix(x, y, z, &psi));
                }
            }
            if m.rows() == 0 {
                Subspace::full(w.field(), d)
            } else {
                m.kernel()
            }
        })
        .collect();
    Ok(assemble(w, flat))
}

/// Checks `J ∘ I = 0`, `I^⊥ = J`, `^⊥J = I` and that the torsion ideal recovers `t`.
pub fn verify_pair(w: &Window, p: &IdealTorsionPair) -> Result<(), TorsionError> {
    let fail = |what: &str| Err(TorsionError::Mismatch(format!("pair check failed: {what}")));
    if !w.ideal_product(&p.torsionfree, &p.torsion)?.is_zero() {
        return fail("J∘I ≠ 0");
    }
    if perp_right(w, &p.torsion)? != p.torsionfree {
        return fail("I^⊥ ≠ J");
    }
    if perp_left(w, &p.torsionfree)? != p.torsion {
        return fail("^⊥J ≠ I");
    }
    if subfunctor_from_pair(w, p) != p.t {
        return fail("t is not recovered from I(A, -)");
    }
    Ok(())
}

pub fn zero_pair(w: &Window) -> IdealTorsionPair {
    pair_from_subfunctor(w, &Subfunctor::zero(w)).expect("zero is a subfunctor")
}

pub fn unit_pair(w: &Window) -> IdealTorsionPair {
    pair_from_subfunctor(w, &Subfunctor::identity(w)).expect("identity is a subfunctor")
}

/// Pair of `t ∩ t'`; its torsion ideal is `I ∩ I'`.
pub fn pair_meet(w: &Window, p: &IdealTorsionPair, q: &IdealTorsionPair) -> Result<IdealTorsionPair, TorsionError> {
    pair_from_subfunctor(w, &p.t.meet(&q.t))
}

/// Pair of `t + t'`; its torsion ideal is the torsion closure of `I + I'`.
pub fn pair_join(w: &Window, p: &IdealTorsionPair, q: &IdealTorsionPair) -> Result<IdealTorsionPair, TorsionError> {
    pair_from_subfunctor(w, &p.t.join(&q.t))
}

/// The pair of `t t'`, where `t` belongs to `p` and `t'` to `q`. Its torsion ideal is `I' I`.
///
/// `t(t'M)` is computed as `Σ g(tY)` over `g ∈ I'(Y, M)` and cross-checked against the torsion
/// closure of the ideal product.
pub fn pair_product(w: &Window, p: &IdealTorsionPair, q: &IdealTorsionPair) -> Result<IdealTorsionPair, TorsionError> {
    let n = w.len();
    let values = (0..n)
        .into_par_iter()
        .map(|m| {
            let mut vecs = Vec::new();
            for y in 0..n {
                vecs.extend(images_under(w, y, m, q.torsion.piece(y, m), p.t.value(y)).basis_vectors());
            }
            Subspace::from_vectors(w.field(), w.total_dim(m), vecs)
        })
        .collect();
    let t = Subfunctor::from_values_unchecked(w, values);
    let via_ideals = subfunctor_of_ideal(w, &w.ideal_product(&q.torsion, &p.torsion)?);
    if via_ideals != t {
        return Err(TorsionError::Mismatch("product: t-side and ideal-side disagree".into()));
    }
    pair_from_subfunctor(w, &t)
}

/// The extension pair: `t''M` is the preimage in `M` of `t'(M / tM)`, where `t` belongs to `p`
/// and `t'` to `q`. Objects of its torsion ideal are extensions of a `q`-object by a `p`-object.
///
/// `t'` on the quotient is evaluated as `Σ g(t'Y)` over window objects `Y` and all `g : Y -> M/tM`,
/// which is exact whenever the quotient is a sum of window objects.
pub fn pair_diamond(w: &Window, p: &IdealTorsionPair, q: &IdealTorsionPair) -> Result<IdealTorsionPair, TorsionError> {
    let alg = w.algebra();
    let f = w.field();
    let values = (0..w.len())
        .into_par_iter()
        .map(|m| -> Result<Subspace, TorsionError> {
            let obj = w.object(m);
            let (quot, proj) = obj.quotient(alg, p.t.value(m), "quotient");
            let mut vecs = Vec::new();
            for y in 0..w.len() {
                let h = hom_space(alg, w.object(y), &quot)?;
                for g in h.basis() {
                    vecs.extend(q.t.value(y).image_under(&g.total(f)).basis_vectors());
                }
            }
            let tq = Subspace::from_vectors(f, quot.total_dim(), vecs);
            Ok(tq.preimage_under(&proj.total(f)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    pair_from_subfunctor(w, &Subfunctor::from_values_unchecked(w, values))
}

/// `t(tX) = tX` for every object, with `t(tX)` computed as in [`pair_product`].
pub fn is_idempotent(w: &Window, p: &IdealTorsionPair) -> Result<bool, TorsionError> {
    Ok(pair_product(w, p, p)?.t == p.t)
}

/// Whether the torsion ideal equals the ideal of maps factoring through its objects.
pub fn ob_generates(w: &Window, p: &IdealTorsionPair) -> bool {
    w.ideal_of_subcategory(&p.torsion.ob(w)) == p.torsion
}
