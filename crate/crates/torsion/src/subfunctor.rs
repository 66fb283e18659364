//! Subfunctors of the identity restricted to a window: one submodule per object,
//! preserved by every window morphism.

use crate::TorsionError;
use serde::{Deserialize, Serialize};
use torsidl_linalg::{Elem, Matrix, Subspace};
use torsidl_spectroid::Window;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subfunctor {
    window: String,
    /// `values[x]` lies in the total coordinate space of object `x`.
    values: Vec<Subspace>,
}

/// Per-object dimension data of a subfunctor, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfunctorDims {
    pub object: String,
    pub dim: usize,
    pub dim_vector: Vec<usize>,
}

/// Total matrix of the `k`-th Hom basis element `X -> Y`.
pub(crate) fn basis_total(w: &Window, x: usize, y: usize, k: usize) -> Matrix {
    w.hom(x, y).basis()[k].total(w.field())
}

/// Total matrix of the morphism with the given Hom coordinates.
pub(crate) fn coords_total(w: &Window, x: usize, y: usize, c: &[Elem]) -> Matrix {
    w.morphism(x, y, c).total(w.field())
}

/// `Σ_{g ∈ S} g(V)` for a subspace `S ⊆ Hom(X, Y)` and `V ⊆ X`.
pub(crate) fn images_under(w: &Window, x: usize, y: usize, s: &Subspace, v: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for g in s.basis_vectors() {
        vecs.extend(v.image_under(&coords_total(w, x, y, &g)).basis_vectors());
    }
    Subspace::from_vectors(w.field(), w.total_dim(y), vecs)
}

/// `Σ_{g ∈ Hom(X, Y)} g(V)`.
pub(crate) fn push_forward(w: &Window, x: usize, y: usize, v: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    if !v.is_zero() {
        for k in 0..w.hom_dim(x, y) {
            vecs.extend(v.image_under(&basis_total(w, x, y, k)).basis_vectors());
        }
    }
    Subspace::from_vectors(w.field(), w.total_dim(y), vecs)
}

impl Subfunctor {
    /// Wraps per-object values without validation.
    pub fn from_values_unchecked(w: &Window, values: Vec<Subspace>) -> Subfunctor {
        Subfunctor { window: w.id().to_string(), values }
    }

    /// Wraps per-object values, checking the submodule and functoriality conditions.
    pub fn from_values(w: &Window, values: Vec<Subspace>) -> Result<Subfunctor, TorsionError> {
        if values.len() != w.len() || values.iter().enumerate().any(|(x, v)| v.ambient_dim() != w.total_dim(x)) {
            return Err(TorsionError::Mismatch("subfunctor values do not match the window".into()));
        }
        let t = Subfunctor::from_values_unchecked(w, values);
        t.validate(w)?;
        Ok(t)
    }

    pub fn zero(w: &Window) -> Subfunctor {
        let values = (0..w.len()).map(|x| Subspace::zero(w.field(), w.total_dim(x))).collect();
        Subfunctor::from_values_unchecked(w, values)
    }

    pub fn identity(w: &Window) -> Subfunctor {
        let values = (0..w.len()).map(|x| Subspace::full(w.field(), w.total_dim(x))).collect();
        Subfunctor::from_values_unchecked(w, values)
    }

    /// Smallest subfunctor whose value at each object contains the given seed.
    ///
    /// Alternates closure under the algebra action with pushing forward along every
    /// Hom basis element until nothing changes.
    pub fn closure(w: &Window, seeds: Vec<Subspace>) -> Subfunctor {
        let alg = w.algebra();
        let mut cur = seeds;
        loop {
            let acted: Vec<Subspace> =
                cur.iter().enumerate().map(|(x, s)| w.object(x).submodule_closure(alg, s)).collect();
            let next: Vec<Subspace> = (0..w.len())
                .map(|y| {
                    let mut vecs = acted[y].basis_vectors();
                    for (x, s) in acted.iter().enumerate() {
                        vecs.extend(push_forward(w, x, y, s).basis_vectors());
                    }
                    Subspace::from_vectors(w.field(), w.total_dim(y), vecs)
                })
                .collect();
            if next == cur {
                return Subfunctor::from_values_unchecked(w, next);
            }
            cur = next;
        }
    }

    /// Smallest subfunctor containing `v` at object `x`.
    pub fn principal(w: &Window, x: usize, v: &[Elem]) -> Subfunctor {
        let seeds = (0..w.len())
            .map(|y| {
                if y == x {
                    Subspace::from_vectors(w.field(), w.total_dim(x), vec![v.to_vec()])
                } else {
                    Subspace::zero(w.field(), w.total_dim(y))
                }
            })
            .collect();
        Subfunctor::closure(w, seeds)
    }

    pub fn window_id(&self) -> &str {
        &self.window
    }

    pub fn value(&self, x: usize) -> &Subspace {
        &self.values[x]
    }

    pub fn values(&self) -> &[Subspace] {
        &self.values
    }

    pub fn check_window(&self, w: &Window) -> Result<(), TorsionError> {
        if self.window == w.id() {
            Ok(())
        } else {
            Err(TorsionError::Mismatch("subfunctor belongs to a different window".into()))
        }
    }

    /// Checks that each value is a submodule and that every Hom basis element maps values into values.
    pub fn validate(&self, w: &Window) -> Result<(), TorsionError> {
        self.check_window(w)?;
        let alg = w.algebra();
        for (x, v) in self.values.iter().enumerate() {
            if !w.object(x).is_submodule(alg, v) {
                return Err(TorsionError::NotSubmodule(w.object(x).name.clone()));
            }
        }
        for x in 0..w.len() {
            for y in 0..w.len() {
                for k in 0..w.hom_dim(x, y) {
                    if !self.values[x].image_under(&basis_total(w, x, y, k)).leq(&self.values[y]) {
                        return Err(TorsionError::NotFunctorial {
                            src: w.object(x).name.clone(),
                            dst: w.object(y).name.clone(),
                            index: k,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn leq(&self, other: &Subfunctor) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a.leq(b))
    }

    pub fn meet(&self, other: &Subfunctor) -> Subfunctor {
        Subfunctor {
            window: self.window.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.intersect(b)).collect(),
        }
    }

    pub fn join(&self, other: &Subfunctor) -> Subfunctor {
        Subfunctor {
            window: self.window.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.sum(b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Subspace::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().all(Subspace::is_full)
    }

    /// `Σ_x dim tX`, a strictly monotone size measure.
    pub fn total_dim(&self) -> usize {
        self.values.iter().map(Subspace::dim).sum()
    }

    /// An object and vector lying in `self` but not in `other`, if any.
    pub fn witness_not_below(&self, other: &Subfunctor) -> Option<(usize, Vec<Elem>)> {
        self.values
            .iter()
            .zip(&other.values)
            .enumerate()
            .find_map(|(x, (a, b))| a.basis_vectors().into_iter().find(|v| !b.contains(v)).map(|v| (x, v)))
    }

    pub fn dims(&self, w: &Window) -> Vec<SubfunctorDims> {
        self.values
            .iter()
            .enumerate()
            .map(|(x, v)| SubfunctorDims {
                object: w.object(x).name.clone(),
                dim: v.dim(),
                dim_vector: w.object(x).dim_vector_of(w.algebra(), v),
            })
            .collect()
    }
}
