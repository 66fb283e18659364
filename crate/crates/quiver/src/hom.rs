//! Hom spaces as solution spaces of the intertwining equations.

use crate::{Algebra, ModuleRep, Morphism, QuiverError};
use torsidl_linalg::{Elem, Matrix, Subspace};

/// `Hom(M, N)` with a canonical basis: the reduced row-echelon basis of the solution space
/// in the coordinates given by [`Morphism::flatten`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub src_dims: Vec<usize>,
    pub dst_dims: Vec<usize>,
    space: Subspace,
    basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Coordinates of `f` in the canonical basis; `None` if `f` is not in the space.
    pub fn coordinates(&self, f: &Morphism) -> Option<Vec<Elem>> {
        self.space.coordinates(&f.flatten())
    }

    /// The morphism with the given coordinates.
    pub fn element(&self, coords: &[Elem]) -> Morphism {
        unflatten(&self.space.combine(coords), &self.src_dims, &self.dst_dims, self.space.field())
    }
}

fn unflatten(v: &[Elem], src: &[usize], dst: &[usize], f: torsidl_linalg::Field) -> Morphism {
    let mut blocks = Vec::new();
    let mut off = 0;
    for (s, d) in src.iter().zip(dst) {
        let rows = (0..*d).map(|i| v[off + i * s..off + (i + 1) * s].to_vec()).collect();
        blocks.push(Matrix::from_rows(f, *s, rows));
        off += s * d;
    }
    Morphism { blocks }
}

/// Basis of `Hom_A(m, n)` obtained by solving the intertwining system.
pub fn hom_space(alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace, QuiverError> {
    let f = alg.field();
    let nv = alg.num_vertices();
    if m.dims.len() != nv
        || n.dims.len() != nv
        || m.maps.len() != alg.arrows().len()
        || n.maps.len() != alg.arrows().len()
    {
        return Err(QuiverError::AlgebraMismatch);
    }
    let mut var_off = vec![0usize; nv + 1];
    for v in 0..nv {
        var_off[v + 1] = var_off[v] + m.dims[v] * n.dims[v];
    }
    let nvars = var_off[nv];
    let var = |v: usize, r: usize, c: usize| var_off[v] + r * m.dims[v] + c;
    let mut rows = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.src, a.dst);
        let (ma, na) = (&m.maps[ai], &n.maps[ai]);
        // (N_a F_s - F_t M_a)[r][c] = 0
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![f.zero(); nvars];
                for k in 0..n.dims[s] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let j = var(s, k, c);
                        row[j] = f.add(&row[j], x);
                    }
                }
                for k in 0..m.dims[t] {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let j = var(t, r, k);
                        row[j] = f.sub(&row[j], x);
                    }
                }
                rows.push(row);
            }
        }
    }
    let space = Matrix::from_rows(f, nvars, rows).kernel();
    let basis = space.basis_vectors().iter().map(|v| unflatten(v, &m.dims, &n.dims, f)).collect();
    Ok(HomSpace { src_dims: m.dims.clone(), dst_dims: n.dims.clone(), space, basis })
}

/// Some isomorphism `m -> n` among the Hom basis, assuming `m` is indecomposable.
pub fn find_basis_iso(alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> Option<Morphism> {
    if m.dims != n.dims {
        return None;
    }
    let h = hom_space(alg, m, n).ok()?;
    h.basis().iter().find(|f| f.is_iso()).cloned()
}
