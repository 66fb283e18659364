//! Left `rad^n`-approximations built by composing radical approximations.

use crate::RankError;
use torsidl_linalg::Elem;
use torsidl_spectroid::Window;
use torsidl_torsion::{left_approximation, minimize, verify_approximation, ApproxKind, ApproxResult};

/// Composite `g ∘ f` of two left approximations with `g.source == f.target`.
fn compose(w: &Window, g: &ApproxResult, f: &ApproxResult) -> ApproxResult {
    let field = w.field();
    let components = g
        .target
        .iter()
        .enumerate()
        .map(|(u, &uz)| {
            f.source
                .iter()
                .enumerate()
                .map(|(s, &sx)| {
                    let mut acc: Vec<Elem> = vec![field.zero(); w.hom_dim(sx, uz)];
                    for (t, &ty) in f.target.iter().enumerate() {
                        let c = w.compose(sx, ty, uz, &g.components[u][t], &f.components[t][s]);
                        acc = acc.iter().zip(&c).map(|(a, b)| field.add(a, b)).collect();
                    }
                    acc
                })
                .collect()
        })
        .collect();
    ApproxResult {
        kind: ApproxKind::Left,
        source: f.source.clone(),
        target: g.target.clone(),
        components,
        minimal: false,
    }
}

/// The minimal left `rad^n`-approximation of `⊕ sources`, composed from `n` minimal left
/// radical approximations and checked against `rad^n` computed on the window.
pub fn left_radn_approximation(w: &Window, sources: &[usize], n: usize) -> Result<ApproxResult, RankError> {
    if n == 0 {
        return Err(RankError::InvalidDepth);
    }
    let rad = w.radical_ideal();
    let mut acc = left_approximation(w, sources, &rad, true)?;
    for _ in 1..n {
        let step = left_approximation(w, &acc.target, &rad, true)?;
        acc = minimize(w, &compose(w, &step, &acc));
    }
    let radn = w.ideal_power(&rad, n)?;
    if !verify_approximation(w, &acc, &radn) {
        return Err(RankError::Mismatch(format!("composed rad^{n}-approximation does not factor rad^{n}")));
    }
    Ok(acc)
}

/// The `n ≤ n_max` with some `ψ : A -> X` in `rad^n \ rad^{n+1}`. Each answer is cross-checked
/// against whether `X` is a summand of the target of the minimal left `rad^n`-approximation of `A`
/// (the identity of `A` when `n = 0`).
pub fn summand_occurrences(w: &Window, x: usize, n_max: usize) -> Result<Vec<usize>, RankError> {
    let rad = w.radical_ideal();
    let cols = w.power_columns(&rad, &[x], n_max + 1);
    let dim = |k: usize| -> usize { w.regular().iter().map(|&p| cols[k][0][p].dim()).sum() };
    let mut out = Vec::new();
    for n in 0..=n_max {
        let occurs = dim(n) > dim(n + 1);
        let in_target = if n == 0 {
            w.regular().contains(&x)
        } else {
            left_radn_approximation(w, w.regular(), n)?.target.contains(&x)
        };
        if occurs != in_target {
            return Err(RankError::Mismatch(format!(
                "{} at n = {n}: radical layer says {occurs}, approximation says {in_target}",
                w.object(x).name
            )));
        }
        if occurs {
            out.push(n);
        }
    }
    Ok(out)
}
