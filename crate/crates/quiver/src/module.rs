//! Representations of a bound quiver and the morphisms between them.
//!
//! A module stores one vector space per vertex and one matrix per arrow. The total
//! coordinate space concatenates the vertex spaces in vertex order.

use crate::{Algebra, QuiverError};
use torsidl_linalg::{Elem, Field, Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleRep {
    pub name: String,
    pub dims: Vec<usize>,
    /// `maps[a]` has shape `dims[dst(a)] x dims[src(a)]`.
    pub maps: Vec<Matrix>,
}

/// A module morphism given blockwise: `blocks[v]` maps vertex `v` of the source to vertex `v` of the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl ModuleRep {
    pub fn zero(alg: &Algebra, name: &str) -> ModuleRep {
        let f = alg.field();
        ModuleRep {
            name: name.to_string(),
            dims: vec![0; alg.num_vertices()],
            maps: alg.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect(),
        }
    }

    /// The simple module at vertex `v`.
    pub fn simple(alg: &Algebra, v: usize) -> ModuleRep {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg.arrows().iter().map(|a| Matrix::zeros(f, dims[a.dst], dims[a.src])).collect();
        ModuleRep { name: format!("S{}", alg.vertices()[v]), dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    pub fn field(&self, alg: &Algebra) -> Field {
        alg.field()
    }

    /// Checks shapes and that every relation acts as zero.
    pub fn validate(&self, alg: &Algebra) -> Result<(), QuiverError> {
        let bad = |reason: String| QuiverError::InvalidModule { module: self.name.clone(), reason };
        if self.dims.len() != alg.num_vertices() {
            return Err(bad(format!("expected {} vertex dimensions", alg.num_vertices())));
        }
        if self.maps.len() != alg.arrows().len() {
            return Err(bad(format!("expected {} arrow maps", alg.arrows().len())));
        }
        for (m, a) in self.maps.iter().zip(alg.arrows()) {
            if m.rows() != self.dims[a.dst] || m.cols() != self.dims[a.src] {
                return Err(bad(format!(
                    "map for arrow {:?} has shape {}x{}, expected {}x{}",
                    a.label,
                    m.rows(),
                    m.cols(),
                    self.dims[a.dst],
                    self.dims[a.src]
                )));
            }
            if m.field() != alg.field() {
                return Err(bad(format!("map for arrow {:?} is over the wrong field", a.label)));
            }
        }
        for (ri, rel) in alg.relations().iter().enumerate() {
            let Some((_, first)) = rel.terms.first() else { continue };
            let (s, d) = (alg.arrows()[first[0]].src, alg.arrows()[*first.last().unwrap()].dst);
            let mut acc = Matrix::zeros(alg.field(), self.dims[d], self.dims[s]);
            for (c, path) in &rel.terms {
                acc = acc.add(&self.path_matrix(path).scale(c));
            }
            if !acc.is_zero() {
                return Err(bad(format!("relation {ri} is not satisfied")));
            }
        }
        Ok(())
    }

    /// Matrix of a path (traversal order) from its source vertex space to its target vertex space.
    pub fn path_matrix(&self, arrows: &[usize]) -> Matrix {
        let mut it = arrows.iter();
        let first = it.next().expect("non-trivial path");
        let mut m = self.maps[*first].clone();
        for a in it {
            m = self.maps[*a].mul(&m);
        }
        m
    }

    /// Action of the basis path `i` of the algebra on the total space.
    pub fn basis_action(&self, alg: &Algebra, i: usize) -> Matrix {
        let f = alg.field();
        let p = &alg.basis()[i];
        let n = self.total_dim();
        let mut t = Matrix::zeros(f, n, n);
        let block = if p.is_trivial() { Matrix::identity(f, self.dims[p.src]) } else { self.path_matrix(&p.arrows) };
        t.set_block(self.offset(p.dst), self.offset(p.src), &block);
        t
    }

    /// Action of arrow `a` on the total space.
    pub fn arrow_total(&self, alg: &Algebra, a: usize) -> Matrix {
        let f = alg.field();
        let n = self.total_dim();
        let ar = &alg.arrows()[a];
        let mut t = Matrix::zeros(f, n, n);
        t.set_block(self.offset(ar.dst), self.offset(ar.src), &self.maps[a]);
        t
    }

    /// Projection onto vertex `v` on the total space.
    pub fn vertex_projector(&self, alg: &Algebra, v: usize) -> Matrix {
        let f = alg.field();
        let n = self.total_dim();
        let mut t = Matrix::zeros(f, n, n);
        t.set_block(self.offset(v), self.offset(v), &Matrix::identity(f, self.dims[v]));
        t
    }

    /// Smallest submodule of the total space containing `w`.
    pub fn submodule_closure(&self, alg: &Algebra, w: &Subspace) -> Subspace {
        let mut ops: Vec<Matrix> = (0..alg.num_vertices()).map(|v| self.vertex_projector(alg, v)).collect();
        ops.extend((0..alg.arrows().len()).map(|a| self.arrow_total(alg, a)));
        let mut cur = w.clone();
        loop {
            let mut vecs = cur.basis_vectors();
            for op in &ops {
                vecs.extend(cur.image_under(op).basis_vectors());
            }
            let next = Subspace::from_vectors(alg.field(), self.total_dim(), vecs);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Whether `w` is closed under the vertex idempotents and all arrows.
    pub fn is_submodule(&self, alg: &Algebra, w: &Subspace) -> bool {
        (0..alg.num_vertices()).all(|v| w.image_under(&self.vertex_projector(alg, v)).leq(w))
            && (0..alg.arrows().len()).all(|a| w.image_under(&self.arrow_total(alg, a)).leq(w))
    }

    /// The part of a graded subspace lying in vertex `v`, in local coordinates.
    pub fn vertex_part(&self, alg: &Algebra, w: &Subspace, v: usize) -> Subspace {
        let off = self.offset(v);
        let vecs = w.image_under(&self.vertex_projector(alg, v)).basis_vectors();
        let local = vecs.into_iter().map(|x| x[off..off + self.dims[v]].to_vec()).collect();
        Subspace::from_vectors(alg.field(), self.dims[v], local)
    }

    /// The submodule `w` as a module of its own, with its inclusion.
    pub fn submodule(&self, alg: &Algebra, w: &Subspace, name: &str) -> (ModuleRep, Morphism) {
        debug_assert!(self.is_submodule(alg, w));
        let f = alg.field();
        let parts: Vec<Subspace> = (0..alg.num_vertices()).map(|v| self.vertex_part(alg, w, v)).collect();
        let incl: Vec<Matrix> =
            parts.iter().zip(&self.dims).map(|(p, &d)| Matrix::from_columns(f, d, &p.basis_vectors())).collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let cols: Vec<Vec<Elem>> = parts[a.src]
                    .basis_vectors()
                    .iter()
                    .map(|b| parts[a.dst].coordinates(&self.maps[ai].mul_vec(b)).expect("submodule is closed"))
                    .collect();
                Matrix::from_columns(f, parts[a.dst].dim(), &cols)
            })
            .collect();
        let sub = ModuleRep { name: name.to_string(), dims: parts.iter().map(Subspace::dim).collect(), maps };
        (sub, Morphism { blocks: incl })
    }

    /// The quotient by the submodule `w`, with the projection.
    pub fn quotient(&self, alg: &Algebra, w: &Subspace, name: &str) -> (ModuleRep, Morphism) {
        debug_assert!(self.is_submodule(alg, w));
        let f = alg.field();
        let parts: Vec<Subspace> = (0..alg.num_vertices()).map(|v| self.vertex_part(alg, w, v)).collect();
        let keep: Vec<Vec<usize>> = parts.iter().map(Subspace::complement_indices).collect();
        let proj: Vec<Matrix> = (0..alg.num_vertices())
            .map(|v| {
                let d = self.dims[v];
                let cols: Vec<Vec<Elem>> = (0..d)
                    .map(|j| {
                        let mut e = vec![f.zero(); d];
                        e[j] = f.one();
                        let r = parts[v].reduce(&e);
                        keep[v].iter().map(|&c| r[c].clone()).collect()
                    })
                    .collect();
                Matrix::from_columns(f, keep[v].len(), &cols)
            })
            .collect();
        let maps = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let cols: Vec<Vec<Elem>> = keep[a.src]
                    .iter()
                    .map(|&c| {
                        let mut e = vec![f.zero(); self.dims[a.src]];
                        e[c] = f.one();
                        proj[a.dst].mul_vec(&self.maps[ai].mul_vec(&e))
                    })
                    .collect();
                Matrix::from_columns(f, keep[a.dst].len(), &cols)
            })
            .collect();
        let q = ModuleRep { name: name.to_string(), dims: keep.iter().map(Vec::len).collect(), maps };
        (q, Morphism { blocks: proj })
    }

    /// Direct sum with the canonical injections.
    pub fn direct_sum(alg: &Algebra, parts: &[&ModuleRep], name: &str) -> (ModuleRep, Vec<Morphism>, Vec<Morphism>) {
        let f = alg.field();
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..alg.arrows().len())
            .map(|a| Matrix::block_diag(f, &parts.iter().map(|m| m.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        let sum = ModuleRep { name: name.to_string(), dims: dims.clone(), maps };
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offs = vec![0usize; nv];
        for m in parts {
            let mut ib = Vec::new();
            let mut pb = Vec::new();
            for v in 0..nv {
                let mut i = Matrix::zeros(f, dims[v], m.dims[v]);
                i.set_block(offs[v], 0, &Matrix::identity(f, m.dims[v]));
                pb.push(i.transpose());
                ib.push(i);
                offs[v] += m.dims[v];
            }
            inj.push(Morphism { blocks: ib });
            proj.push(Morphism { blocks: pb });
        }
        (sum, inj, proj)
    }

    /// `n` copies of this module.
    pub fn power(&self, alg: &Algebra, n: usize) -> ModuleRep {
        let parts: Vec<&ModuleRep> = std::iter::repeat_n(self, n).collect();
        ModuleRep::direct_sum(alg, &parts, &format!("{}^{}", self.name, n)).0
    }

    /// The radical `Σ Im(arrows)` as a subspace of the total space.
    pub fn radical(&self, alg: &Algebra) -> Subspace {
        let mut vecs = Vec::new();
        for a in 0..alg.arrows().len() {
            vecs.extend(self.arrow_total(alg, a).image().basis_vectors());
        }
        Subspace::from_vectors(alg.field(), self.total_dim(), vecs)
    }

    /// The socle: common kernel of all arrows.
    pub fn socle(&self, alg: &Algebra) -> Subspace {
        let f = alg.field();
        let n = self.total_dim();
        let mut stacked = Matrix::zeros(f, 0, n);
        for a in 0..alg.arrows().len() {
            stacked = stacked.vstack(&self.arrow_total(alg, a));
        }
        stacked.kernel()
    }

    /// Dimension vector of a submodule given as a subspace.
    pub fn dim_vector_of(&self, alg: &Algebra, w: &Subspace) -> Vec<usize> {
        (0..alg.num_vertices()).map(|v| self.vertex_part(alg, w, v).dim()).collect()
    }

    pub fn with_name(mut self, name: &str) -> ModuleRep {
        self.name = name.to_string();
        self
    }
}

impl Morphism {
    pub fn zero(alg: &Algebra, src: &ModuleRep, dst: &ModuleRep) -> Morphism {
        let f = alg.field();
        Morphism { blocks: (0..alg.num_vertices()).map(|v| Matrix::zeros(f, dst.dims[v], src.dims[v])).collect() }
    }

    pub fn identity(alg: &Algebra, m: &ModuleRep) -> Morphism {
        let f = alg.field();
        Morphism { blocks: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect() }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, g: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, c: &Elem) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Block-diagonal matrix on total spaces.
    pub fn total(&self, field: Field) -> Matrix {
        Matrix::block_diag(field, &self.blocks)
    }

    pub fn apply(&self, field: Field, v: &[Elem]) -> Vec<Elem> {
        self.total(field).mul_vec(v)
    }

    /// Concatenation of the row-major block entries: the coordinate vector used by Hom spaces.
    pub fn flatten(&self) -> Vec<Elem> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && b.rank() == b.rows())
    }

    pub fn transpose(&self) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(Matrix::transpose).collect() }
    }

    /// Checks the intertwining equations `g_dst M_a = N_a g_src`.
    pub fn check(&self, alg: &Algebra, src: &ModuleRep, dst: &ModuleRep) -> Result<(), QuiverError> {
        for v in 0..alg.num_vertices() {
            let b = &self.blocks[v];
            if b.rows() != dst.dims[v] || b.cols() != src.dims[v] {
                return Err(QuiverError::NotAMorphism(format!("block at vertex {}", alg.vertices()[v])));
            }
        }
        for (ai, a) in alg.arrows().iter().enumerate() {
            let l = self.blocks[a.dst].mul(&src.maps[ai]);
            let r = dst.maps[ai].mul(&self.blocks[a.src]);
            if l != r {
                return Err(QuiverError::NotAMorphism(a.label.clone()));
            }
        }
        Ok(())
    }

    /// Kernel, its inclusion, cokernel, the projection onto it, and the image.
    pub fn kernel_cokernel_image(
        &self,
        alg: &Algebra,
        src: &ModuleRep,
        dst: &ModuleRep,
    ) -> (ModuleRep, Morphism, ModuleRep, Morphism, ModuleRep) {
        let f = alg.field();
        let t = self.total(f);
        let ker = t.kernel();
        let im = t.image();
        let (k, kin) = src.submodule(alg, &ker, &format!("ker({}->{})", src.name, dst.name));
        let (q, qpr) = dst.quotient(alg, &im, &format!("coker({}->{})", src.name, dst.name));
        let (i, _) = dst.submodule(alg, &im, &format!("im({}->{})", src.name, dst.name));
        (k, kin, q, qpr, i)
    }
}

/// Builds a module from integer matrices; shapes follow the arrow list.
pub fn module_from_i64(alg: &Algebra, name: &str, dims: &[usize], maps: &[&[i64]]) -> ModuleRep {
    let f = alg.field();
    let maps = alg.arrows().iter().zip(maps).map(|(a, e)| Matrix::from_i64(f, dims[a.dst], dims[a.src], e)).collect();
    ModuleRep { name: name.to_string(), dims: dims.to_vec(), maps }
}
