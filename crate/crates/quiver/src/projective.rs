//! Indecomposable projectives and injectives, projective covers, and the AR translate.

use crate::{hom_space, Algebra, ModuleRep, Morphism};
use torsidl_linalg::{Elem, Matrix};

/// Basis indices of the paths starting at `i`, grouped by target vertex.
fn paths_from(alg: &Algebra, i: usize) -> Vec<Vec<usize>> {
    let mut by_dst = vec![Vec::new(); alg.num_vertices()];
    for (k, p) in alg.basis().iter().enumerate() {
        if p.src == i {
            by_dst[p.dst].push(k);
        }
    }
    by_dst
}

/// `P(i) = A e_i`, spanned by the basis paths starting at `i`.
pub fn projective(alg: &Algebra, i: usize) -> ModuleRep {
    let f = alg.field();
    let by_dst = paths_from(alg, i);
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let ab = alg.arrow_basis_index(ai);
            let mut m = Matrix::zeros(f, by_dst[a.dst].len(), by_dst[a.src].len());
            for (c, &p) in by_dst[a.src].iter().enumerate() {
                for (k, x) in alg.mul_basis(ab, p) {
                    let r = by_dst[a.dst].iter().position(|q| q == k).expect("path keeps its source");
                    m.set(r, c, f.add(m.get(r, c), x));
                }
            }
            m
        })
        .collect();
    ModuleRep { name: format!("P{}", alg.vertices()[i]), dims: by_dst.iter().map(Vec::len).collect(), maps }
}

/// Coordinates of `e_i` inside `projective(alg, i)`.
pub fn projective_generator(alg: &Algebra, i: usize) -> Vec<Elem> {
    let f = alg.field();
    let p = projective(alg, i);
    let by_dst = paths_from(alg, i);
    let e = alg.idempotent(i);
    let mut v = vec![f.zero(); p.total_dim()];
    let pos = by_dst[i].iter().position(|&k| k == e).unwrap();
    v[p.offset(i) + pos] = f.one();
    v
}

/// The regular module `A` and its summands `P(i)` in vertex order.
pub fn regular_module(alg: &Algebra) -> (ModuleRep, Vec<ModuleRep>) {
    let ps: Vec<ModuleRep> = (0..alg.num_vertices()).map(|i| projective(alg, i)).collect();
    let refs: Vec<&ModuleRep> = ps.iter().collect();
    let (a, _, _) = ModuleRep::direct_sum(alg, &refs, "A");
    (a, ps)
}

/// `I(i) = D(e_i A)`, the injective envelope of the simple at `i`.
pub fn injective(alg: &Algebra, i: usize) -> ModuleRep {
    let op = alg.opposite();
    crate::dualize(&projective(&op, i)).with_name(&format!("I{}", alg.vertices()[i]))
}

/// Right multiplication by arrow `a : i -> j`, as the morphism `P(j) -> P(i)`, `x ↦ x a`.
pub fn right_mult_arrow(alg: &Algebra, a: usize) -> Morphism {
    let f = alg.field();
    let ar = &alg.arrows()[a];
    let (i, j) = (ar.src, ar.dst);
    let from = paths_from(alg, j);
    let to = paths_from(alg, i);
    let ab = alg.arrow_basis_index(a);
    let blocks = (0..alg.num_vertices())
        .map(|u| {
            let mut m = Matrix::zeros(f, to[u].len(), from[u].len());
            for (c, &x) in from[u].iter().enumerate() {
                for (k, val) in alg.mul_basis(x, ab) {
                    let r = to[u].iter().position(|q| q == k).expect("path from i");
                    m.set(r, c, f.add(m.get(r, c), val));
                }
            }
            m
        })
        .collect();
    Morphism { blocks }
}

/// Dimensions of the top `M / rad M` at each vertex.
pub fn top_dims(alg: &Algebra, m: &ModuleRep) -> Vec<usize> {
    let rad = m.radical(alg);
    (0..alg.num_vertices()).map(|v| m.dims[v] - m.vertex_part(alg, &rad, v).dim()).collect()
}

/// A projective cover `P -> M`, with `P` as a direct sum of `P(i)` listed by vertex.
pub fn projective_cover(alg: &Algebra, m: &ModuleRep) -> (ModuleRep, Vec<usize>, Morphism) {
    let f = alg.field();
    let rad = m.radical(alg);
    let mut gens: Vec<(usize, Vec<Elem>)> = Vec::new();
    for v in 0..alg.num_vertices() {
        let part = m.vertex_part(alg, &rad, v);
        for c in part.complement_indices() {
            let mut e = vec![f.zero(); m.dims[v]];
            e[c] = f.one();
            gens.push((v, e));
        }
    }
    let ps: Vec<ModuleRep> = gens.iter().map(|(v, _)| projective(alg, *v)).collect();
    let refs: Vec<&ModuleRep> = ps.iter().collect();
    let (p, _, _) = ModuleRep::direct_sum(alg, &refs, &format!("cover({})", m.name));
    let mut blocks: Vec<Matrix> = (0..alg.num_vertices()).map(|u| Matrix::zeros(f, m.dims[u], p.dims[u])).collect();
    let mut col_off = vec![0usize; alg.num_vertices()];
    for (g, (v, e)) in gens.iter().enumerate() {
        let by_dst = paths_from(alg, *v);
        for u in 0..alg.num_vertices() {
            for (c, &k) in by_dst[u].iter().enumerate() {
                let path = &alg.basis()[k];
                let img = if path.is_trivial() { e.clone() } else { m.path_matrix(&path.arrows).mul_vec(e) };
                for (r, x) in img.into_iter().enumerate() {
                    blocks[u].set(r, col_off[u] + c, x);
                }
            }
            col_off[u] += ps[g].dims[u];
        }
    }
    (p, gens.iter().map(|g| g.0).collect(), Morphism { blocks })
}

/// `Hom_A(P, A)` as a representation of the opposite quiver: vertex `i` holds `Hom(P, P(i))`.
fn hom_into_regular(alg: &Algebra, p: &ModuleRep) -> (ModuleRep, Vec<crate::HomSpace>) {
    let f = alg.field();
    let ps: Vec<ModuleRep> = (0..alg.num_vertices()).map(|i| projective(alg, i)).collect();
    let homs: Vec<crate::HomSpace> = ps.iter().map(|pi| hom_space(alg, p, pi).expect("same algebra")).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // arrow a : i -> j acts on Hom(P, A) as the opposite arrow j -> i, f ↦ ρ_a ∘ f
            let rho = right_mult_arrow(alg, ai);
            let cols: Vec<Vec<Elem>> = homs[a.dst]
                .basis()
                .iter()
                .map(|g| homs[a.src].coordinates(&rho.compose(g)).expect("postcomposition stays in Hom"))
                .collect();
            Matrix::from_columns(f, homs[a.src].dim(), &cols)
        })
        .collect();
    let dims = homs.iter().map(crate::HomSpace::dim).collect();
    (ModuleRep { name: format!("Hom({},A)", p.name), dims, maps }, homs)
}

/// The Auslander-Reiten translate `τ M = D Tr M` from a minimal projective presentation.
/// Projective summands of `M` contribute nothing.
pub fn tau(alg: &Algebra, m: &ModuleRep) -> ModuleRep {
    let f = alg.field();
    let (p0, _, e0) = projective_cover(alg, m);
    let ker = e0.total(f).kernel();
    let (k, kin) = p0.submodule(alg, &ker, "K");
    let (p1, _, e1) = projective_cover(alg, &k);
    let d1 = kin.compose(&e1);
    let (h0, homs0) = hom_into_regular(alg, &p0);
    let (h1, homs1) = hom_into_regular(alg, &p1);
    let blocks = (0..alg.num_vertices())
        .map(|i| {
            let cols: Vec<Vec<Elem>> = homs0[i]
                .basis()
                .iter()
                .map(|g| homs1[i].coordinates(&g.compose(&d1)).expect("precomposition stays in Hom"))
                .collect();
            Matrix::from_columns(f, homs1[i].dim(), &cols)
        })
        .collect();
    let h = Morphism { blocks };
    let op = alg.opposite();
    let (_, _, tr, _, _) = h.kernel_cokernel_image(&op, &h0, &h1);
    crate::dualize(&tr).with_name(&format!("tau({})", m.name))
}

/// Injective envelope of the top of `m`: `⊕ I(v)^{top_v}`.
pub fn injective_hull_of_top(alg: &Algebra, m: &ModuleRep) -> ModuleRep {
    let tops = top_dims(alg, m);
    let inj: Vec<ModuleRep> =
        tops.iter().enumerate().flat_map(|(v, &d)| std::iter::repeat_n(injective(alg, v), d)).collect();
    let refs: Vec<&ModuleRep> = inj.iter().collect();
    ModuleRep::direct_sum(alg, &refs, &format!("E(top {})", m.name)).0
}

/// The inverse translate `τ⁻¹ M = Tr D M`, computed as `D τ_{A^op} D M`.
pub fn tau_inverse(alg: &Algebra, m: &ModuleRep) -> ModuleRep {
    let op = alg.opposite();
    crate::dualize(&tau(&op, &crate::dualize(m))).with_name(&format!("tau^-1({})", m.name))
}
