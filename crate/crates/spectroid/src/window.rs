//! A window: finitely many pairwise non-isomorphic indecomposables with Hom bases and
//! composition tensors.

use crate::SpectroidError;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::sync::OnceLock;
use torsidl_linalg::{Elem, Field, Matrix, Subspace};
use torsidl_quiver::{
    certify_local, dualize, find_basis_iso, hom_space, injective, projective, projective_generator, tau, tau_inverse,
    Algebra, HomSpace, ModuleRep, Morphism,
};

/// Number of leading objects whose composition triples are checked for associativity at build time.
const ASSOCIATIVITY_SPOT_CHECK: usize = 4;

#[derive(Clone, Debug)]
pub struct Window {
    id: String,
    alg: Algebra,
    objects: Vec<ModuleRep>,
    complete: bool,
    proj: Vec<usize>,
    generators: Vec<Vec<Elem>>,
    homs: Vec<Vec<HomSpace>>,
    /// `post[(x * n + y) * n + z][g]`: postcomposition with the `g`-th basis map `Y -> Z`,
    /// acting on Hom(X, Y) coordinates. Filled on first use.
    post: Vec<OnceLock<Vec<Matrix>>>,
    end_radicals: Vec<Subspace>,
    base_len: usize,
}

/// Serializable overview of a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSummary {
    pub id: String,
    pub field: String,
    pub complete: bool,
    pub objects: Vec<String>,
    pub dims: Vec<Vec<usize>>,
    /// `hom_dims[x][y] = dim Hom(X, Y)`.
    pub hom_dims: Vec<Vec<usize>>,
    pub projectives: Vec<String>,
}

fn fingerprint(alg: &Algebra, objects: &[ModuleRep], complete: bool) -> String {
    let mut h = Sha256::new();
    h.update(format!("{alg:?}").as_bytes());
    for m in objects {
        h.update(format!("{m:?}").as_bytes());
    }
    h.update([complete as u8]);
    hex::encode(h.finalize())
}

impl Window {
    /// Validates the objects and precomputes Hom spaces, composition tensors and End radicals.
    pub fn build(alg: &Algebra, objects: Vec<ModuleRep>, complete: bool) -> Result<Window, SpectroidError> {
        for m in &objects {
            m.validate(alg)?;
        }
        let certs: Vec<_> = objects.par_iter().map(|m| certify_local(alg, m)).collect();
        let mut end_radicals = Vec::new();
        for (m, c) in objects.iter().zip(certs) {
            end_radicals.push(c.ok_or_else(|| SpectroidError::Decomposable(m.name.clone()))?.radical);
        }
        for (i, m) in objects.iter().enumerate() {
            for n in &objects[..i] {
                if find_basis_iso(alg, n, m).is_some() {
                    return Err(SpectroidError::Duplicate(n.name.clone(), m.name.clone()));
                }
            }
        }
        let mut proj = Vec::new();
        let mut generators = Vec::new();
        for v in 0..alg.num_vertices() {
            let p = projective(alg, v);
            let found = objects.iter().enumerate().find_map(|(k, m)| find_basis_iso(alg, &p, m).map(|iso| (k, iso)));
            let (k, iso) = found.ok_or_else(|| SpectroidError::MissingProjective(alg.vertices()[v].clone()))?;
            proj.push(k);
            generators.push(iso.apply(alg.field(), &projective_generator(alg, v)));
        }
        let n = objects.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let flat: Vec<HomSpace> =
            pairs.par_iter().map(|&(x, y)| hom_space(alg, &objects[x], &objects[y])).collect::<Result<_, _>>()?;
        let homs: Vec<Vec<HomSpace>> = flat.chunks(n).map(<[HomSpace]>::to_vec).collect();
        let post = (0..n * n * n).map(|_| OnceLock::new()).collect();
        let id = fingerprint(alg, &objects, complete);
        let w =
            Window { id, alg: alg.clone(), objects, complete, proj, generators, homs, post, end_radicals, base_len: n };
        w.spot_check_associativity();
        Ok(w)
    }

    fn spot_check_associativity(&self) {
        let k = self.len().min(ASSOCIATIVITY_SPOT_CHECK);
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    for u in 0..k {
                        for f in self.homs[x][y].basis() {
                            for g in self.homs[y][z].basis() {
                                for h in self.homs[z][u].basis() {
                                    let (f, g, h) = (self.coords(x, y, f), self.coords(y, z, g), self.coords(z, u, h));
                                    let left = self.compose(x, z, u, &h, &self.compose(x, y, z, &g, &f));
                                    let right = self.compose(x, y, u, &self.compose(y, z, u, &h, &g), &f);
                                    assert_eq!(left, right, "composition tensor is not associative");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn objects(&self) -> &[ModuleRep] {
        &self.objects
    }

    pub fn object(&self, x: usize) -> &ModuleRep {
        &self.objects[x]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn index_of(&self, name: &str) -> Result<usize, SpectroidError> {
        self.objects.iter().position(|m| m.name == name).ok_or_else(|| SpectroidError::UnknownObject(name.into()))
    }

    /// Window index of the object isomorphic to `P(v)`.
    pub fn projective_index(&self, v: usize) -> usize {
        self.proj[v]
    }

    /// Window indices of `P(1), ..., P(n)`: the regular module as a formal sum.
    pub fn regular(&self) -> &[usize] {
        &self.proj
    }

    /// Total coordinates of `e_v` inside the window object isomorphic to `P(v)`.
    pub fn generator(&self, v: usize) -> &[Elem] {
        &self.generators[v]
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomSpace {
        &self.homs[x][y]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.homs[x][y].dim()
    }

    pub fn total_dim(&self, x: usize) -> usize {
        self.objects[x].total_dim()
    }

    /// The Jacobson radical of `End(X)` in End-basis coordinates.
    pub fn end_radical(&self, x: usize) -> &Subspace {
        &self.end_radicals[x]
    }

    /// Coordinates of a morphism `X -> Y`; panics if it is not one.
    pub fn coords(&self, x: usize, y: usize, f: &Morphism) -> Vec<Elem> {
        self.homs[x][y].coordinates(f).expect("morphism between window objects")
    }

    pub fn try_coords(&self, x: usize, y: usize, f: &Morphism) -> Result<Vec<Elem>, SpectroidError> {
        self.homs[x][y].coordinates(f).ok_or_else(|| {
            SpectroidError::ForeignMorphism(format!("{} -> {}", self.objects[x].name, self.objects[y].name))
        })
    }

    pub fn morphism(&self, x: usize, y: usize, coords: &[Elem]) -> Morphism {
        self.homs[x][y].element(coords)
    }

    /// Identity coordinates in `End(X)`.
    pub fn identity_coords(&self, x: usize) -> Vec<Elem> {
        self.coords(x, x, &Morphism::identity(&self.alg, &self.objects[x]))
    }

    fn post_tensor(&self, x: usize, y: usize, z: usize) -> &[Matrix] {
        let n = self.len();
        self.post[(x * n + y) * n + z].get_or_init(|| postcomposition_tensor(self.field(), &self.homs, x, y, z))
    }

    /// `g ∘ f` in coordinates, for `f : X -> Y` and `g : Y -> Z`.
    pub fn compose(&self, x: usize, y: usize, z: usize, g: &[Elem], f: &[Elem]) -> Vec<Elem> {
        self.postcompose_matrix(x, y, z, g).mul_vec(f)
    }

    /// The linear map `Hom(X, Y) -> Hom(X, Z)`, `f ↦ g ∘ f`.
    pub fn postcompose_matrix(&self, x: usize, y: usize, z: usize, g: &[Elem]) -> Matrix {
        let fld = self.field();
        let mut m = Matrix::zeros(fld, self.hom_dim(x, z), self.hom_dim(x, y));
        for (c, l) in g.iter().zip(self.post_tensor(x, y, z)) {
            if !c.is_zero() {
                m = m.add(&l.scale(c));
            }
        }
        m
    }

    /// The linear map `Hom(Y, Z) -> Hom(X, Z)`, `g ↦ g ∘ f`.
    pub fn precompose_matrix(&self, x: usize, y: usize, z: usize, f: &[Elem]) -> Matrix {
        let cols: Vec<Vec<Elem>> = self.post_tensor(x, y, z).iter().map(|l| l.mul_vec(f)).collect();
        Matrix::from_columns(self.field(), self.hom_dim(x, z), &cols)
    }

    /// `span{ t ∘ s : t ∈ T ⊆ Hom(Y, Z), s ∈ S ⊆ Hom(X, Y) }`.
    pub fn compose_spaces(&self, x: usize, y: usize, z: usize, t: &Subspace, s: &Subspace) -> Subspace {
        let d = self.hom_dim(x, z);
        if t.is_zero() || s.is_zero() || d == 0 {
            return Subspace::zero(self.field(), d);
        }
        let mut vecs = Vec::new();
        for tv in t.basis_vectors() {
            vecs.extend(s.image_under(&self.postcompose_matrix(x, y, z, &tv)).basis_vectors());
        }
        Subspace::from_vectors(self.field(), d, vecs)
    }

    /// Dimension matrix and object data for reports.
    pub fn summary(&self) -> WindowSummary {
        let n = self.len();
        WindowSummary {
            id: self.id.clone(),
            field: self.field().to_string(),
            complete: self.complete,
            objects: self.objects.iter().map(|m| m.name.clone()).collect(),
            dims: self.objects.iter().map(|m| m.dims.clone()).collect(),
            hom_dims: (0..n).map(|x| (0..n).map(|y| self.hom_dim(x, y)).collect()).collect(),
            projectives: self.proj.iter().map(|&k| self.objects[k].name.clone()).collect(),
        }
    }

    /// Number of objects supplied by the user; translates appended by
    /// [`Window::extend_by_translates`] come after them.
    pub fn base_len(&self) -> usize {
        self.base_len
    }

    /// Appends `τ⁻ᵏ P(v)` and `τᵏ I(v)` for `1 ≤ k ≤ depth` that are nonzero and not already present.
    ///
    /// Radical chains inside a finite window always terminate, so long chains through the
    /// preprojective and preinjective parts need these translates to be visible.
    pub fn extend_by_translates(&self, depth: usize) -> Result<Window, SpectroidError> {
        let alg = &self.alg;
        let mut objects = self.objects.clone();
        let push = |m: ModuleRep, objects: &mut Vec<ModuleRep>| -> bool {
            if m.total_dim() == 0 || certify_local(alg, &m).is_none() {
                return false;
            }
            if !objects.iter().any(|o| find_basis_iso(alg, o, &m).is_some()) {
                objects.push(m);
            }
            true
        };
        for v in 0..alg.num_vertices() {
            let mut x = self.objects[self.proj[v]].clone();
            let base = x.name.clone();
            for k in 1..=depth {
                x = tau_inverse(alg, &x).with_name(&format!("tau^-{k}({base})"));
                if !push(x.clone(), &mut objects) {
                    break;
                }
            }
            let inj = injective(alg, v);
            let mut y =
                self.objects.iter().find(|o| find_basis_iso(alg, o, &inj).is_some()).cloned().unwrap_or_else(|| {
                    push(inj.clone(), &mut objects);
                    inj
                });
            let base = y.name.clone();
            for k in 1..=depth {
                y = tau(alg, &y).with_name(&format!("tau^{k}({base})"));
                if !push(y.clone(), &mut objects) {
                    break;
                }
            }
        }
        let mut w = Window::build(alg, objects, self.complete)?;
        w.base_len = self.base_len;
        Ok(w)
    }

    /// The window over the opposite algebra formed by the duals `D X`.
    pub fn opposite(&self) -> Result<Window, SpectroidError> {
        let op = self.alg.opposite();
        let objs = self.objects.iter().map(dualize).collect();
        Window::build(&op, objs, self.complete)
    }
}

fn postcomposition_tensor(f: Field, homs: &[Vec<HomSpace>], x: usize, y: usize, z: usize) -> Vec<Matrix> {
    let (hxy, hyz, hxz) = (&homs[x][y], &homs[y][z], &homs[x][z]);
    hyz.basis()
        .iter()
        .map(|g| {
            let cols: Vec<Vec<Elem>> = hxy
                .basis()
                .iter()
                .map(|fm| hxz.coordinates(&g.compose(fm)).expect("composites of morphisms are morphisms"))
                .collect();
            Matrix::from_columns(f, hxz.dim(), &cols)
        })
        .collect()
}
