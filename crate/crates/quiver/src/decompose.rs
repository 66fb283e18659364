//! Krull-Schmidt decomposition via Fitting's lemma, with locality certificates.

use crate::{find_basis_iso, hom_space, Algebra, HomSpace, ModuleRep, Morphism, QuiverError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use torsidl_linalg::{Elem, Field, Matrix, Subspace};

const SMALL_PRIME_ENUMERATION: u32 = 257;
const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

/// Evidence that `End(M)` is local with residue field `k`: a two-sided ideal of codimension one
/// whose `nilpotency`-th power vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalityCertificate {
    /// The Jacobson radical in coordinates of the canonical `End(M)` basis.
    pub radical: Subspace,
    pub nilpotency: usize,
}

/// One indecomposable summand and how often it occurs.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: ModuleRep,
    pub multiplicity: usize,
    pub certificate: LocalityCertificate,
}

/// Residue of each endomorphism basis element, assuming `End(M)/rad ≅ k`.
fn residues(field: Field, basis: &[Morphism], n: usize) -> Option<Vec<Elem>> {
    basis
        .iter()
        .map(|b| {
            let t = b.total(field);
            match field {
                Field::Rationals => field.div(&t.trace(), &field.from_i64(n as i64)).ok(),
                Field::Prime(p) => {
                    // x^(p^s) kills the nilpotent part and fixes the scalar part once p^s >= n.
                    let mut e = p as u64;
                    while e < n as u64 {
                        e *= p as u64;
                    }
                    let te = t.pow(e);
                    let lam = te.get(0, 0).clone();
                    (te == Matrix::identity(field, n).scale(&lam)).then_some(lam)
                }
            }
        })
        .collect()
}

fn product_space(end: &HomSpace, left: &Subspace, right: &Subspace) -> Subspace {
    let f = left.field();
    let mut vecs = Vec::new();
    for x in left.basis_vectors() {
        let xm = end.element(&x);
        for y in right.basis_vectors() {
            let p = xm.compose(&end.element(&y));
            vecs.push(end.coordinates(&p).expect("End is closed under composition"));
        }
    }
    Subspace::from_vectors(f, end.dim(), vecs)
}

/// Certifies that `End(m)` is local with one-dimensional residue field.
pub fn certify_local(alg: &Algebra, m: &ModuleRep) -> Option<LocalityCertificate> {
    let n = m.total_dim();
    if n == 0 {
        return None;
    }
    let f = alg.field();
    let end = hom_space(alg, m, m).ok()?;
    let lams = residues(f, end.basis(), n)?;
    let functional = Matrix::from_rows(f, end.dim(), vec![lams]);
    let rad = functional.kernel();
    if rad.dim() + 1 != end.dim() {
        return None;
    }
    let full = Subspace::full(f, end.dim());
    if !product_space(&end, &rad, &full).leq(&rad) || !product_space(&end, &full, &rad).leq(&rad) {
        return None;
    }
    let mut power = rad.clone();
    let mut k = 1;
    while !power.is_zero() {
        if k > n {
            return None;
        }
        power = product_space(&end, &power, &rad);
        k += 1;
    }
    Some(LocalityCertificate { radical: rad, nilpotency: k })
}

/// The Jacobson radical of `End(m)` for an indecomposable `m`, in End-basis coordinates.
pub fn end_radical(alg: &Algebra, m: &ModuleRep) -> Result<Subspace, QuiverError> {
    certify_local(alg, m).map(|c| c.radical).ok_or_else(|| QuiverError::DecompositionUndecided(m.name.clone()))
}

/// Roots of the minimal polynomial of `t` lying in the base field, as far as they can be found.
fn eigen_candidates(field: Field, t: &Matrix) -> Vec<Elem> {
    if let Field::Prime(p) = field {
        if p <= SMALL_PRIME_ENUMERATION {
            return (0..p as i64).map(|x| field.from_i64(x)).collect();
        }
    }
    let n = t.rows();
    let mut powers = vec![Matrix::identity(field, n)];
    let coeffs = loop {
        let next = powers.last().unwrap().mul(t);
        let cols: Vec<Vec<Elem>> = powers.iter().map(|p| p.entries().to_vec()).collect();
        let a = Matrix::from_columns(field, n * n, &cols);
        if let Some(c) = a.solve(next.entries()) {
            break c;
        }
        powers.push(next);
    };
    // minimal polynomial: t^k - Σ c_i t^i
    let mut poly: Vec<Elem> = coeffs.iter().map(|c| field.neg(c)).collect();
    poly.push(field.one());
    let eval = |x: &Elem| poly.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c));
    let mut cands: Vec<Elem> = Vec::new();
    match field {
        Field::Prime(_) => {
            for x in -3..=3 {
                cands.push(field.from_i64(x));
            }
        }
        Field::Rationals => {
            let ints = integer_coefficients(&poly);
            cands.extend(rational_root_candidates(&ints).into_iter().map(Elem::Q));
        }
    }
    let mut roots: Vec<Elem> = cands.into_iter().filter(|x| eval(x).is_zero()).collect();
    roots.sort();
    roots.dedup();
    roots
}

fn integer_coefficients(poly: &[Elem]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in poly {
        if let Elem::Q(q) = c {
            l = l.lcm(q.denom());
        }
    }
    poly.iter()
        .map(|c| match c {
            Elem::Q(q) => (q * BigRational::from_integer(l.clone())).to_integer(),
            Elem::P(_) => unreachable!(),
        })
        .collect()
}

fn divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_u64()?;
    if n > ROOT_SEARCH_LIMIT {
        return None;
    }
    Some((1..=n as i64).filter(|d| n as i64 % d == 0).collect())
}

fn rational_root_candidates(ints: &[BigInt]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero()];
    let Some(lo) = ints.iter().position(|c| !c.is_zero()) else { return out };
    let a0 = &ints[lo];
    let lead = ints.last().unwrap();
    let (Some(ps), Some(qs)) = (divisors(a0), divisors(lead)) else {
        for x in -3..=3 {
            out.push(BigRational::from_integer(BigInt::from(x)));
        }
        return out;
    };
    for p in &ps {
        for q in &qs {
            for s in [1i64, -1] {
                out.push(BigRational::new(BigInt::from(s * p), BigInt::from(*q)));
            }
        }
    }
    out
}

/// Tries Fitting decompositions `M = Im φ^n ⊕ Ker φ^n` for a deterministic candidate list.
fn fitting_split(alg: &Algebra, m: &ModuleRep) -> Result<Option<(Subspace, Subspace)>, QuiverError> {
    let f = alg.field();
    let n = m.total_dim();
    let end = hom_space(alg, m, m)?;
    let basis: Vec<Matrix> = end.basis().iter().map(|b| b.total(f)).collect();
    let mut cands: Vec<Matrix> = basis.clone();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i < j {
                cands.push(basis[i].add(&basis[j]));
            }
            if i != j {
                cands.push(basis[i].mul(&basis[j]));
            }
        }
    }
    let id = Matrix::identity(f, n);
    for c in &cands {
        for lam in eigen_candidates(f, c) {
            let shifted = c.sub(&id.scale(&lam));
            let pw = shifted.pow(n as u64);
            let r = pw.rank();
            if r > 0 && r < n {
                return Ok(Some((pw.image(), pw.kernel())));
            }
        }
    }
    Ok(None)
}

fn split_into_local(
    alg: &Algebra,
    m: &ModuleRep,
    out: &mut Vec<(ModuleRep, LocalityCertificate)>,
) -> Result<(), QuiverError> {
    if m.total_dim() == 0 {
        return Ok(());
    }
    if let Some(cert) = certify_local(alg, m) {
        out.push((m.clone(), cert));
        return Ok(());
    }
    let Some((im, ker)) = fitting_split(alg, m)? else {
        return Err(QuiverError::DecompositionUndecided(m.name.clone()));
    };
    let (a, _) = m.submodule(alg, &im, &m.name);
    let (b, _) = m.submodule(alg, &ker, &m.name);
    split_into_local(alg, &a, out)?;
    split_into_local(alg, &b, out)
}

/// Indecomposable summands of `m` grouped by isomorphism class, each with a locality certificate.
pub fn decompose(alg: &Algebra, m: &ModuleRep) -> Result<Vec<Summand>, QuiverError> {
    let mut pieces = Vec::new();
    split_into_local(alg, m, &mut pieces)?;
    let mut out: Vec<Summand> = Vec::new();
    for (piece, cert) in pieces {
        if let Some(s) = out.iter_mut().find(|s| find_basis_iso(alg, &s.module, &piece).is_some()) {
            s.multiplicity += 1;
        } else {
            let k = out.len();
            out.push(Summand {
                module: piece.with_name(&format!("{}#{}", m.name, k)),
                multiplicity: 1,
                certificate: cert,
            });
        }
    }
    debug_assert_eq!(out.iter().map(|s| s.module.total_dim() * s.multiplicity).sum::<usize>(), m.total_dim());
    Ok(out)
}

/// Whether `m` is indecomposable (local endomorphism ring with residue field `k`).
pub fn is_indecomposable(alg: &Algebra, m: &ModuleRep) -> bool {
    certify_local(alg, m).is_some()
}

/// Isomorphism test by comparing decompositions.
pub fn is_isomorphic(alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> Result<bool, QuiverError> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.total_dim() == 0 {
        return Ok(true);
    }
    if is_indecomposable(alg, m) {
        return Ok(find_basis_iso(alg, m, n).is_some());
    }
    let dm = decompose(alg, m)?;
    let dn = decompose(alg, n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    Ok(dm.iter().all(|s| {
        dn.iter().any(|t| t.multiplicity == s.multiplicity && find_basis_iso(alg, &s.module, &t.module).is_some())
    }))
}
