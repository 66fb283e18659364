//! Certificates of infinite descending behaviour inside the subfunctor lattice, computed on a
//! finite window: strictly descending chains below a morphism in a deep radical power, and the
//! ascending chain of iterated extension pairs of a subcategory.

use crate::{FiniteLattice, LatticeError};
use serde::Serialize;
use torsidl_linalg::{Elem, Field, Subspace};
use torsidl_spectroid::Window;
use torsidl_torsion::{bisubmodules, pair_diamond, torsion_closure, IdealTorsionPair, Subfunctor, SubfunctorDims};

/// An object and a vector lying in one chain member but not in the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictnessWitness {
    pub step: usize,
    pub object: String,
    pub vector: Vec<String>,
}

/// `t_0 ≥ t_1 ≥ ... ≥ t_depth ≥ t'` where `t_i` is generated by the images of `Im φ` under
/// `rad^i(X, -)` and `t'` is generated by `ψ(Im φ)`.
#[derive(Clone, Debug)]
pub struct ChainCertificate {
    pub source: usize,
    pub target: usize,
    pub depth: usize,
    pub chain: Vec<Subfunctor>,
    pub bottom: Subfunctor,
    pub witnesses: Vec<StrictnessWitness>,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCertificateExport {
    pub source: String,
    pub target: String,
    pub depth: usize,
    pub strict: bool,
    pub chain: Vec<Vec<SubfunctorDims>>,
    pub bottom: Vec<SubfunctorDims>,
    pub witnesses: Vec<StrictnessWitness>,
}

impl ChainCertificate {
    pub fn export(&self, w: &Window) -> ChainCertificateExport {
        ChainCertificateExport {
            source: w.object(self.source).name.clone(),
            target: w.object(self.target).name.clone(),
            depth: self.depth,
            strict: self.strict,
            chain: self.chain.iter().map(|t| t.dims(w)).collect(),
            bottom: self.bottom.dims(w),
            witnesses: self.witnesses.clone(),
        }
    }
}

fn format_vector(f: Field, v: &[Elem]) -> Vec<String> {
    v.iter().map(|x| f.format(x)).collect()
}

/// Witnesses for `chain[i] > chain[i + 1]` (descending) or `chain[i + 1] > chain[i]` (ascending).
fn strictness(w: &Window, chain: &[Subfunctor], descending: bool) -> (Vec<StrictnessWitness>, bool) {
    let mut out = Vec::new();
    let mut strict = true;
    for (i, pair) in chain.windows(2).enumerate() {
        let (big, small) = if descending { (&pair[0], &pair[1]) } else { (&pair[1], &pair[0]) };
        match big.witness_not_below(small) {
            Some((x, v)) if small.leq(big) => out.push(StrictnessWitness {
                step: i,
                object: w.object(x).name.clone(),
                vector: format_vector(w.field(), &v),
            }),
            _ => strict = false,
        }
    }
    (out, strict)
}

/// `Σ_{b ∈ S} b(V)` for a subspace `S ⊆ Hom(X, Y)` given in Hom coordinates.
fn images(w: &Window, x: usize, y: usize, s: &Subspace, v: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for b in s.basis_vectors() {
        vecs.extend(v.image_under(&w.morphism(x, y, &b).total(w.field())).basis_vectors());
    }
    Subspace::from_vectors(w.field(), w.total_dim(y), vecs)
}

/// A descending chain certificate for `ψ : X -> Y` with Hom coordinates `psi`.
///
/// `ψ` must lie in `rad^omega_depth(X, Y)` and `depth ≤ omega_depth`. The generating map
/// `φ : P(v) -> X` is the first Hom basis element from an indecomposable projective with `ψφ ≠ 0`.
pub fn descending_chain_certificate(
    w: &Window,
    x: usize,
    y: usize,
    psi: &[Elem],
    depth: usize,
    omega_depth: usize,
) -> Result<ChainCertificate, LatticeError> {
    if depth > omega_depth {
        return Err(LatticeError::Precondition(format!("depth {depth} exceeds radical depth {omega_depth}")));
    }
    let f = w.field();
    let rad = w.radical_ideal();
    let rows = w.power_rows(&rad, &[x], omega_depth);
    if psi.iter().all(Elem::is_zero) || !rows[omega_depth][0][y].contains(psi) {
        return Err(LatticeError::Precondition(format!(
            "morphism {} -> {} is not a nonzero element of rad^{omega_depth}",
            w.object(x).name,
            w.object(y).name
        )));
    }
    let psi_total = w.morphism(x, y, psi).total(f);
    let image = w
        .regular()
        .iter()
        .flat_map(|&p| (0..w.hom_dim(p, x)).map(move |k| (p, k)))
        .map(|(p, k)| {
            let phi = w.hom(p, x).basis()[k].total(f);
            Subspace::full(f, w.total_dim(p)).image_under(&phi)
        })
        .find(|im| !im.image_under(&psi_total).is_zero())
        .ok_or_else(|| LatticeError::Precondition("no map from a projective survives composition".into()))?;
    let chain: Vec<Subfunctor> = (0..=depth)
        .map(|i| {
            let seeds = (0..w.len()).map(|z| images(w, x, z, &rows[i][0][z], &image)).collect();
            Subfunctor::closure(w, seeds)
        })
        .collect();
    let mut seeds: Vec<Subspace> = (0..w.len()).map(|z| Subspace::zero(f, w.total_dim(z))).collect();
    seeds[y] = image.image_under(&psi_total);
    let bottom = Subfunctor::closure(w, seeds);
    if !bottom.leq(&chain[depth]) {
        return Err(LatticeError::Precondition("bottom of the chain is not below the last member".into()));
    }
    let (witnesses, strict) = strictness(w, &chain, true);
    Ok(ChainCertificate { source: x, target: y, depth, chain, bottom, witnesses, strict })
}

/// `t_1 ≤ t_2 ≤ ... ≤ t_{n_max}` where `t_1` belongs to the torsion closure of the ideal of maps
/// factoring through `objs` and `t_{n+1}` to the extension pair of `t_n` by `t_1`.
#[derive(Clone, Debug)]
pub struct DiamondChain {
    pub pairs: Vec<IdealTorsionPair>,
    pub witnesses: Vec<StrictnessWitness>,
    /// `strict_steps[i]` tells whether `t_{i+1} < t_{i+2}`.
    pub strict_steps: Vec<bool>,
}

impl DiamondChain {
    pub fn subfunctors(&self) -> Vec<&Subfunctor> {
        self.pairs.iter().map(|p| &p.t).collect()
    }
}

pub fn diamond_power_chain(w: &Window, objs: &[usize], n_max: usize) -> Result<DiamondChain, LatticeError> {
    let first = torsion_closure(w, &w.ideal_of_subcategory(objs))?;
    let mut pairs = vec![first.clone()];
    for _ in 1..n_max {
        let next = pair_diamond(w, pairs.last().expect("nonempty"), &first)?;
        pairs.push(next);
    }
    let ts: Vec<Subfunctor> = pairs.iter().map(|p| p.t.clone()).collect();
    let mut strict_steps = Vec::new();
    let mut witnesses = Vec::new();
    for (i, pair) in ts.windows(2).enumerate() {
        if !pair[0].leq(&pair[1]) {
            return Err(LatticeError::Precondition(format!("diamond chain decreases at step {i}")));
        }
        let (mut ws, strict) = strictness(w, pair, false);
        for s in &mut ws {
            s.step = i;
        }
        witnesses.extend(ws);
        strict_steps.push(strict);
    }
    Ok(DiamondChain { pairs, witnesses, strict_steps })
}

/// All bi-submodules of object `c`, ordered by inclusion.
pub fn bisubmodule_lattice(w: &Window, c: usize, budget: usize) -> Result<FiniteLattice<Subspace>, LatticeError> {
    FiniteLattice::from_order(bisubmodules(w, c, budget)?, Subspace::leq)
}
