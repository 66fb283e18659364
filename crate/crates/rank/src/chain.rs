//! Radical chains `rad^n(A, M)` and the projective rank.

use crate::RankError;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use torsidl_linalg::Subspace;
use torsidl_spectroid::{Ideal, Window};

/// The smallest ordinal `α` with `Hom(A, M) ⊆ rad^α(A, M)` failing at `α + 1`, as far as a window
/// can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrdinalTag {
    Finite(usize),
    /// `ω·(k+1)`-deep evidence: full through the depth budget after `k` extra `rad^ω` factors.
    OmegaPlus {
        k: usize,
        window_relative: bool,
    },
    ExceedsBudget,
}

impl OrdinalTag {
    fn key(&self) -> (usize, usize) {
        match *self {
            OrdinalTag::Finite(n) => (0, n),
            OrdinalTag::OmegaPlus { k, .. } => (1, k),
            OrdinalTag::ExceedsBudget => (2, 0),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, OrdinalTag::Finite(_))
    }
}

impl PartialOrd for OrdinalTag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdinalTag {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::fmt::Display for OrdinalTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrdinalTag::Finite(n) => write!(f, "{n}"),
            OrdinalTag::OmegaPlus { k: 0, .. } => write!(f, "ω"),
            OrdinalTag::OmegaPlus { k, .. } => write!(f, "ω+{k}"),
            OrdinalTag::ExceedsBudget => write!(f, ">budget"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankReport {
    pub module: String,
    /// `chain[n] = dim rad^n(A, M)`.
    pub chain: Vec<usize>,
    pub tag: OrdinalTag,
    pub preprojective: bool,
    /// False when the window is incomplete.
    pub exact: bool,
}

/// Successive columns `rad^k(-, Z)` for `k = 0, 1, ...`, stopping early once a column repeats.
fn radical_columns(w: &Window, rad: &Ideal, z: usize, depth: usize) -> Vec<Vec<Subspace>> {
    let m = w.len();
    let mut out = vec![(0..m).map(|y| Subspace::full(w.field(), w.hom_dim(y, z))).collect::<Vec<_>>()];
    for _ in 0..depth {
        let prev = out.last().unwrap();
        let next: Vec<Subspace> = (0..m)
            .into_par_iter()
            .map(|y| {
                let mut acc = Subspace::zero(w.field(), w.hom_dim(y, z));
                for u in 0..m {
                    acc = acc.sum(&w.compose_spaces(y, u, z, &prev[u], rad.piece(y, u)));
                }
                acc
            })
            .collect();
        let stable = &next == prev;
        out.push(next);
        if stable {
            break;
        }
    }
    out
}

/// Tag of a chain of dimensions whose entry 0 is the full Hom dimension.
fn tag_of(chain: &[usize]) -> OrdinalTag {
    let full = chain[0];
    match chain.iter().position(|&d| d < full) {
        Some(n) => OrdinalTag::Finite(n - 1),
        None if full == 0 => OrdinalTag::Finite(0),
        // A finite window cannot certify an infinite ordinal, so this is always window-relative.
        None => OrdinalTag::OmegaPlus { k: 0, window_relative: true },
    }
}

/// `dim rad^n(A, ⊕ objs)` for `n` up to `depth`, with its tag. The tag is `Finite(n)` at the last
/// `n` where the chain is full; a chain that stays full through `depth` is reported as `ω`-deep.
pub fn rad_chain_of_sum(w: &Window, objs: &[usize], depth: usize) -> (Vec<usize>, OrdinalTag) {
    let rad = w.radical_ideal();
    let cols: Vec<Vec<usize>> = objs
        .par_iter()
        .map(|&z| {
            radical_columns(w, &rad, z, depth)
                .iter()
                .map(|col| w.regular().iter().map(|&p| col[p].dim()).sum())
                .collect()
        })
        .collect();
    let len = cols.iter().map(Vec::len).max().unwrap_or(1);
    let chain: Vec<usize> =
        (0..len).map(|n| cols.iter().map(|c| c.get(n).copied().unwrap_or(*c.last().unwrap())).sum()).collect();
    let chain = trim(chain);
    let tag = tag_of(&chain);
    (chain, tag)
}

/// Drops the repeated tail of a stabilized chain.
fn trim(mut chain: Vec<usize>) -> Vec<usize> {
    while chain.len() >= 2 && chain[chain.len() - 1] == chain[chain.len() - 2] && chain[chain.len() - 1] == 0 {
        chain.pop();
    }
    chain
}

pub fn rad_chain(w: &Window, m: usize, depth: usize) -> RankReport {
    let (chain, tag) = rad_chain_of_sum(w, &[m], depth);
    RankReport { module: w.object(m).name.clone(), chain, preprojective: tag.is_finite(), tag, exact: w.is_complete() }
}

/// Refines an `ω`-deep chain: the largest `k ≤ k_max` with `Hom(A, M) ⊆ W^{k+1}(A, M)`, where
/// `W = rad^depth` and the intermediate objects of the powers of `W` are the base objects of
/// the window. Objects added as translates only serve as intermediates inside `W` itself.
pub fn projective_rank(w: &Window, m: usize, depth: usize, k_max: usize) -> Result<OrdinalTag, RankError> {
    let (_, tag) = rad_chain_of_sum(w, &[m], depth);
    if tag.is_finite() {
        return Ok(tag);
    }
    if m >= w.base_len() {
        return Err(RankError::Mismatch(format!("{} is not a base object of the window", w.object(m).name)));
    }
    let rad = w.radical_ideal();
    let base: Vec<usize> = (0..w.base_len()).collect();
    // wrow[y][z] = W(y, z) for base y
    let wrow = w.power_rows(&rad, &base, depth).pop().expect("rows of the top power");
    // v[r][y] = W^{k+1}(P_r, y) for base y
    let mut v: Vec<Vec<Subspace>> =
        w.regular().iter().map(|&p| base.iter().map(|&y| wrow[p][y].clone()).collect()).collect();
    for k in 0..=k_max + 1 {
        if !v.iter().all(|row| row[m].is_full()) {
            return Ok(if k == 0 { tag } else { OrdinalTag::OmegaPlus { k: k - 1, window_relative: true } });
        }
        if k <= k_max {
            v = next_power(w, &v, &wrow, &base);
        }
    }
    Ok(OrdinalTag::ExceedsBudget)
}

/// `W^{j+1}(P_r, z) = Σ_{Y base} W(Y, z) ∘ W^j(P_r, Y)` for base `z`.
fn next_power(w: &Window, v: &[Vec<Subspace>], wrow: &[Vec<Subspace>], base: &[usize]) -> Vec<Vec<Subspace>> {
    w.regular()
        .par_iter()
        .enumerate()
        .map(|(r, &p)| {
            base.iter()
                .map(|&z| {
                    let mut acc = Subspace::zero(w.field(), w.hom_dim(p, z));
                    for &y in base {
                        acc = acc.sum(&w.compose_spaces(p, y, z, &wrow[y][z], &v[r][y]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
