//! Randomized invariant suites over the bundled windows, driven by a deterministic proptest runner.

use super::{brute_force_subfunctors, Checks, Corpora};
use crate::CliError;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use torsidl_linalg::{Elem, Field, Subspace};
use torsidl_quiver::{hom_space, Algebra, ModuleRep};
use torsidl_spectroid::{Ideal, Window};
use torsidl_torsion::*;

pub const CASES: u32 = 200;

struct Fixture {
    w: Window,
    wop: Window,
    subfunctors: Vec<Subfunctor>,
}

/// The first `COMPLETE` fixtures are complete windows.
const COMPLETE: usize = 3;

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

fn property<S: Strategy>(
    checks: &mut Checks,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let result = runner.run(&strategy, test);
    let detail = match &result {
        Ok(()) => format!("{CASES} cases"),
        Err(e) => e.to_string(),
    };
    checks.check(name, result.is_ok(), detail);
}

fn coords(w: &Window, d: usize, seed: usize) -> Vec<Elem> {
    let f = w.field();
    let p = f.characteristic() as usize;
    let mut s = seed;
    (0..d)
        .map(|_| {
            let e = f.from_i64((s % p) as i64);
            s /= p;
            e
        })
        .collect()
}

fn random_ideal(w: &Window, picks: &[(usize, usize, usize)]) -> Result<Ideal, TestCaseError> {
    let n = w.len();
    let gens: Vec<_> = picks
        .iter()
        .filter_map(|&(a, b, c)| {
            let (x, y) = (a % n, b % n);
            let d = w.hom_dim(x, y);
            (d > 0).then(|| (x, y, w.morphism(x, y, &coords(w, d, c))))
        })
        .collect();
    w.ideal_from_generators(&gens).map_err(fail)
}

fn random_pair(w: &Window, p: &[(usize, usize, usize)]) -> Result<IdealTorsionPair, TestCaseError> {
    torsion_closure(w, &random_ideal(w, p)?).map_err(fail)
}

fn picks() -> impl Strategy<Value = Vec<(usize, usize, usize)>> {
    prop::collection::vec((0usize..64, 0usize..64, 0usize..4096), 0..4)
}

fn subset(n: usize, mask: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// `Σ g(C)` over `g : C -> U` for `C` in `gen`, computed on modules.
fn trace(alg: &Algebra, gen: &[&ModuleRep], u: &ModuleRep) -> Result<Subspace, TestCaseError> {
    let f = alg.field();
    let mut vecs = Vec::new();
    for c in gen {
        for g in hom_space(alg, c, u).map_err(fail)?.basis() {
            vecs.extend(g.total(f).image().basis_vectors());
        }
    }
    Ok(Subspace::from_vectors(f, u.total_dim(), vecs))
}

/// Objects `X` with a submodule `U` generated by `c1` and `X/U` generated by `c2`.
fn extension_objects(w: &Window, c1: &[usize], c2: &[usize]) -> Result<Vec<usize>, TestCaseError> {
    let alg = w.algebra();
    let g1: Vec<&ModuleRep> = c1.iter().map(|&x| w.object(x)).collect();
    let g2: Vec<&ModuleRep> = c2.iter().map(|&x| w.object(x)).collect();
    let mut out = Vec::new();
    for x in 0..w.len() {
        let m = w.object(x);
        if m.total_dim() > 6 {
            return Err(fail(format!("{} exceeds dimension 6", m.name)));
        }
        for u in torsidl_lattice::all_submodules(alg, m, torsidl_lattice::DEFAULT_BUDGET).map_err(fail)? {
            let (um, _) = m.submodule(alg, &u, "U");
            let (q, _) = m.quotient(alg, &u, "Q");
            if trace(alg, &g1, &um)?.is_full() && trace(alg, &g2, &q)?.is_full() {
                out.push(x);
                break;
            }
        }
    }
    Ok(out)
}

fn transpose(d: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = d.len();
    (0..n).map(|i| (0..n).map(|j| d[j][i]).collect()).collect()
}

fn fixtures(c: &Corpora) -> Result<Vec<Fixture>, CliError> {
    let ws = vec![
        c.window("a2")?,
        c.window("a3")?,
        c.window("dualnumbers")?,
        c.sub_window("kronecker", &["P1", "P2", "R1_0", "R2_0", "R1_1", "I1", "I2"])?,
    ];
    ws.into_iter()
        .map(|w| {
            let subfunctors = if w.is_complete() { brute_force_subfunctors(&w)? } else { Vec::new() };
            Ok(Fixture { wop: w.opposite()?, w, subfunctors })
        })
        .collect()
}

pub(crate) fn run(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    let fx = fixtures(c)?;
    let all = 0..fx.len();

    property(checks, "perp pairs: I-perp = J and perp-J = I", (all.clone(), picks()), |(k, p)| {
        let w = &fx[k].w;
        let i = random_ideal(w, &p)?;
        let j = perp_right(w, &i).map_err(fail)?;
        let ii = perp_left(w, &j).map_err(fail)?;
        prop_assert!(w.ideal_leq(&i, &ii).map_err(fail)?);
        prop_assert_eq!(perp_right(w, &ii).map_err(fail)?, j.clone());
        prop_assert!(w.ideal_product(&j, &ii).map_err(fail)?.is_zero());
        let c = torsion_closure(w, &i).map_err(fail)?;
        verify_pair(w, &c).map_err(fail)?;
        if w.is_complete() {
            prop_assert_eq!(c.torsion, ii);
            prop_assert_eq!(c.torsionfree, j);
        }
        Ok(())
    });

    property(checks, "pair to subfunctor roundtrip", (all.clone(), picks()), |(k, p)| {
        let w = &fx[k].w;
        let c = random_pair(w, &p)?;
        let back = pair_from_subfunctor(w, &subfunctor_from_pair(w, &c)).map_err(fail)?;
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(torsion_closure(w, &c.torsion).map_err(fail)?, c.clone());
        prop_assert_eq!(torsionfree_closure(w, &c.torsionfree).map_err(fail)?.t, c.t);
        Ok(())
    });

    let epi_mono = (all.clone(), picks(), 0usize..64, 0usize..64, 0usize..64, 0usize..4096, 0usize..4096);
    property(
        checks,
        "torsion ideals epi-closed, torsionfree ideals mono-closed",
        epi_mono,
        |(k, p, x, y, z, s1, s2)| {
            let w = &fx[k].w;
            let c = random_pair(w, &p)?;
            let n = w.len();
            let (x, y, z) = (x % n, y % n, z % n);
            let e = coords(w, w.hom_dim(z, x), s1);
            let phi = coords(w, w.hom_dim(x, y), s2);
            if w.morphism(z, x, &e).rank() == w.total_dim(x)
                && c.torsion.contains_coords(z, y, &w.compose(z, x, y, &phi, &e))
            {
                prop_assert!(c.torsion.contains_coords(x, y, &phi));
            }
            let m = coords(w, w.hom_dim(y, z), s1);
            if w.morphism(y, z, &m).rank() == w.total_dim(y)
                && c.torsionfree.contains_coords(x, z, &w.compose(x, y, z, &m, &phi))
            {
                prop_assert!(c.torsionfree.contains_coords(x, y, &phi));
            }
            Ok(())
        },
    );

    property(checks, "meet and join match ideal operations", (all.clone(), picks(), picks()), |(k, a, b)| {
        let w = &fx[k].w;
        let (p, q) = (random_pair(w, &a)?, random_pair(w, &b)?);
        let m = pair_meet(w, &p, &q).map_err(fail)?;
        prop_assert_eq!(&m.torsion, &w.ideal_meet(&p.torsion, &q.torsion).map_err(fail)?);
        let tf = w.ideal_join(&p.torsionfree, &q.torsionfree).map_err(fail)?;
        prop_assert_eq!(&m.torsionfree, &torsionfree_closure(w, &tf).map_err(fail)?.torsionfree);
        let j = pair_join(w, &p, &q).map_err(fail)?;
        let tj = w.ideal_join(&p.torsion, &q.torsion).map_err(fail)?;
        prop_assert_eq!(&j.torsion, &torsion_closure(w, &tj).map_err(fail)?.torsion);
        prop_assert_eq!(&j.torsionfree, &w.ideal_meet(&p.torsionfree, &q.torsionfree).map_err(fail)?);
        verify_pair(w, &m).map_err(fail)?;
        verify_pair(w, &j).map_err(fail)?;
        Ok(())
    });

    property(checks, "dim tM = dim I(A, M)", (all.clone(), picks()), |(k, p)| {
        let w = &fx[k].w;
        let c = random_pair(w, &p)?;
        for x in 0..w.len() {
            prop_assert_eq!(c.t.value(x).dim(), c.torsion.regular_dim(w, x));
        }
        Ok(())
    });

    property(checks, "duality complements dimensions", (all.clone(), picks()), |(k, p)| {
        let (w, wop) = (&fx[k].w, &fx[k].wop);
        let c = random_pair(w, &p)?;
        let d = dualize_pair(w, wop, &c).map_err(fail)?;
        for x in 0..w.len() {
            prop_assert_eq!(d.t.value(x).dim(), w.total_dim(x) - c.t.value(x).dim());
        }
        prop_assert_eq!(d.torsion.dims(), transpose(&c.torsionfree.dims()));
        prop_assert_eq!(d.torsionfree.dims(), transpose(&c.torsion.dims()));
        verify_pair(wop, &d).map_err(fail)?;
        Ok(())
    });

    property(checks, "product: t-side equals ideal side", (all.clone(), picks(), picks()), |(k, a, b)| {
        let w = &fx[k].w;
        let (p, q) = (random_pair(w, &a)?, random_pair(w, &b)?);
        let pr = pair_product(w, &p, &q).map_err(fail)?;
        let prod = w.ideal_product(&q.torsion, &p.torsion).map_err(fail)?;
        prop_assert!(w.ideal_leq(&prod, &pr.torsion).map_err(fail)?);
        prop_assert_eq!(&pr.t, &subfunctor_of_ideal(w, &prod));
        prop_assert!(pr.t.leq(&p.t.meet(&q.t)));
        verify_pair(w, &pr).map_err(fail)?;
        Ok(())
    });

    property(
        checks,
        "diamond equals extension enumeration (dims <= 6)",
        (0..COMPLETE, 0usize..64, 0usize..64),
        |(k, m1, m2)| {
            let w = &fx[k].w;
            let n = w.len();
            let (c1, c2) = (subset(n, m1), subset(n, m2));
            let p = torsion_closure(w, &w.ideal_of_subcategory(&c1)).map_err(fail)?;
            let q = torsion_closure(w, &w.ideal_of_subcategory(&c2)).map_err(fail)?;
            let d = pair_diamond(w, &p, &q).map_err(fail)?;
            let e = extension_objects(w, &c1, &c2)?;
            prop_assert_eq!(d.torsion.ob(w), e.clone());
            let expected = torsion_closure(w, &w.ideal_of_subcategory(&e)).map_err(fail)?;
            prop_assert_eq!(&d.torsion, &expected.torsion);
            prop_assert!(p.t.leq(&d.t));
            Ok(())
        },
    );

    property(checks, "idempotent iff generated by its objects", (0..COMPLETE, 0usize..4096), |(k, pick)| {
        let f = &fx[k];
        let t = &f.subfunctors[pick % f.subfunctors.len()];
        let p = pair_from_subfunctor(&f.w, t).map_err(fail)?;
        prop_assert_eq!(is_idempotent(&f.w, &p).map_err(fail)?, ob_generates(&f.w, &p));
        Ok(())
    });

    let approx = (all.clone(), picks(), 0usize..64, any::<bool>(), any::<bool>());
    property(checks, "approximations factor and are minimal", approx, |(k, p, src, left, useful)| {
        let w = &fx[k].w;
        let i = if useful { random_pair(w, &p)?.torsion } else { random_ideal(w, &p)? };
        let objs = {
            let s = subset(w.len(), src);
            if s.is_empty() {
                w.regular().to_vec()
            } else {
                s
            }
        };
        let a = if left { left_approximation(w, &objs, &i, true) } else { right_approximation(w, &objs, &i, true) }
            .map_err(fail)?;
        prop_assert!(verify_approximation(w, &a, &i));
        let side = if left { a.target.len() } else { a.source.len() };
        for drop in 0..side {
            let mut b = a.clone();
            if left {
                b.target.remove(drop);
                b.components.remove(drop);
            } else {
                b.source.remove(drop);
                for row in &mut b.components {
                    row.remove(drop);
                }
            }
            prop_assert!(!verify_approximation(w, &b, &i));
        }
        Ok(())
    });

    let vecs = || prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..5);
    property(
        checks,
        "dim(U + V) + dim(U ∩ V) = dim U + dim V",
        (any::<bool>(), vecs(), vecs()),
        |(rational, u, v)| {
            let f = if rational { Field::Rationals } else { Field::prime(3).map_err(fail)? };
            let conv = |vs: &[Vec<i64>]| vs.iter().map(|r| r.iter().map(|&e| f.from_i64(e)).collect()).collect();
            let (u, v) = (Subspace::from_vectors(f, 5, conv(&u)), Subspace::from_vectors(f, 5, conv(&v)));
            prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
            prop_assert!(u.intersect(&v).leq(&u) && u.leq(&u.sum(&v)));
            Ok(())
        },
    );
    Ok(())
}
