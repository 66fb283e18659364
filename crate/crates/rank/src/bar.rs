//! The bar morphism `φ̄ : A -> M^n` with `φ̄(1) = (φ(a_1), ..., φ(a_n))` over the path basis.

use crate::RankError;
use torsidl_linalg::{Elem, Matrix};
use torsidl_quiver::{regular_module, Algebra, ModuleRep, Morphism};

/// `φ̄` with, for every basis path `a`, the scalar block matrix `α = (c_ij)` of left
/// multiplication by `a` (`a a_i = Σ_j c_ij a_j`) satisfying `φ̄(a) = α φ̄(1)`.
#[derive(Clone, Debug)]
pub struct BarMorphism {
    pub target: ModuleRep,
    pub morphism: Morphism,
    /// `witnesses[k]` belongs to the basis path `k`.
    pub witnesses: Vec<Morphism>,
}

/// Position of each basis path in the total coordinates of the regular module.
pub fn regular_coordinates(alg: &Algebra) -> Vec<usize> {
    let (a, _) = regular_module(alg);
    let basis = alg.basis();
    (0..basis.len())
        .map(|k| {
            let p = &basis[k];
            let before: usize = (0..p.src).map(|i| basis.iter().filter(|q| q.src == i && q.dst == p.dst).count()).sum();
            let within = basis[..k].iter().filter(|q| q.src == p.src && q.dst == p.dst).count();
            a.offset(p.dst) + before + within
        })
        .collect()
}

fn blocks_of(alg: &Algebra, src: &ModuleRep, dst: &ModuleRep, total: &Matrix) -> Morphism {
    let blocks = (0..alg.num_vertices())
        .map(|v| {
            let (r0, c0) = (dst.offset(v), src.offset(v));
            total.block(r0, r0 + dst.dims[v], c0, c0 + src.dims[v])
        })
        .collect();
    Morphism { blocks }
}

pub fn bar_morphism(alg: &Algebra, m: &ModuleRep, phi: &Morphism) -> Result<BarMorphism, RankError> {
    let f = alg.field();
    let (a, _) = regular_module(alg);
    phi.check(alg, &a, m).map_err(|_| RankError::NotRegularSource)?;
    let n = alg.dim();
    let pos = regular_coordinates(alg);
    let unit_vec = |k: usize| -> Vec<Elem> {
        let mut v = vec![f.zero(); a.total_dim()];
        v[pos[k]] = f.one();
        v
    };
    let images: Vec<Vec<Elem>> = (0..n).map(|k| phi.apply(f, &unit_vec(k))).collect();
    let target = m.power(alg, n);
    // Blocks of M^n are interleaved by vertex; place copy i of M at each vertex.
    let place = |vals: &[Vec<Elem>]| -> Vec<Elem> {
        let mut out = vec![f.zero(); target.total_dim()];
        for v in 0..alg.num_vertices() {
            for (i, x) in vals.iter().enumerate() {
                for d in 0..m.dims[v] {
                    out[target.offset(v) + i * m.dims[v] + d] = x[m.offset(v) + d].clone();
                }
            }
        }
        out
    };
    let one = place(&images);
    let mut cols = vec![vec![f.zero(); target.total_dim()]; a.total_dim()];
    for k in 0..n {
        cols[pos[k]] = target.basis_action(alg, k).mul_vec(&one);
    }
    let total = Matrix::from_columns(f, target.total_dim(), &cols);
    let morphism = blocks_of(alg, &a, &target, &total);
    morphism.check(alg, &a, &target)?;
    let mut witnesses = Vec::new();
    for k in 0..n {
        let mut c = Matrix::zeros(f, n, n);
        for i in 0..n {
            for (j, x) in alg.mul_basis(k, i) {
                c.set(i, *j, f.add(c.get(i, *j), x));
            }
        }
        // α acts on the copy index: copy i of the result is Σ_j c_ij (copy j).
        let alpha_total = Matrix::from_columns(
            f,
            target.total_dim(),
            &(0..target.total_dim())
                .map(|col| {
                    let mut e = vec![f.zero(); target.total_dim()];
                    e[col] = f.one();
                    let copies = unplace(alg, m, n, &target, &e);
                    let mixed: Vec<Vec<Elem>> = (0..n)
                        .map(|i| {
                            let mut acc = vec![f.zero(); m.total_dim()];
                            for j in 0..n {
                                if !c.get(i, j).is_zero() {
                                    acc = acc
                                        .iter()
                                        .zip(&copies[j])
                                        .map(|(x, y)| f.add(x, &f.mul(c.get(i, j), y)))
                                        .collect();
                                }
                            }
                            acc
                        })
                        .collect();
                    place(&mixed)
                })
                .collect::<Vec<_>>(),
        );
        let alpha = blocks_of(alg, &target, &target, &alpha_total);
        alpha.check(alg, &target, &target)?;
        if alpha.apply(f, &one) != morphism.apply(f, &unit_vec(k)) {
            return Err(RankError::Mismatch(format!("bar witness fails for basis path {}", alg.path_name(k))));
        }
        witnesses.push(alpha);
    }
    Ok(BarMorphism { target, morphism, witnesses })
}

/// Splits a vector of `M^n` into its `n` copies of `M`.
fn unplace(alg: &Algebra, m: &ModuleRep, n: usize, target: &ModuleRep, v: &[Elem]) -> Vec<Vec<Elem>> {
    let f = alg.field();
    let mut out = vec![vec![f.zero(); m.total_dim()]; n];
    for vx in 0..alg.num_vertices() {
        for (i, copy) in out.iter_mut().enumerate() {
            for d in 0..m.dims[vx] {
                copy[m.offset(vx) + d] = v[target.offset(vx) + i * m.dims[vx] + d].clone();
            }
        }
    }
    out
}
