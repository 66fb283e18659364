mod common;

use common::*;
use torsidl_linalg::Subspace;
use torsidl_quiver::{load_corpus, projective, ModuleRep};
use torsidl_spectroid::*;

#[test]
fn a2_hom_table() {
    let w = window("a2");
    let s = w.summary();
    assert_eq!(s.objects, vec!["S1", "S2", "P1"]);
    // rows are sources, columns targets
    assert_eq!(s.hom_dims, vec![vec![1, 0, 0], vec![0, 1, 1], vec![1, 0, 1]]);
    assert_eq!(s.projectives, vec!["P1", "S2"]);
    assert!(s.complete);
}

#[test]
fn dual_numbers_window() {
    let w = window("dualnumbers");
    assert_eq!(w.len(), 2);
    let a = w.index_of("A").unwrap();
    assert_eq!(w.radical_ideal().piece(a, a).dim(), 1);
    assert_eq!(w.hom_dim(a, a), 2);
}

#[test]
fn duplicate_and_decomposable_objects_are_rejected() {
    let c = load_corpus(&corpus_dir("a2")).unwrap();
    let s1 = c.modules[0].clone();
    let mut mods = c.modules.clone();
    mods.push(s1.clone().with_name("S1'"));
    assert_eq!(
        Window::build(&c.algebra, mods, true).unwrap_err(),
        SpectroidError::Duplicate("S1".into(), "S1'".into())
    );
    let mut mods = c.modules.clone();
    mods.push(s1.power(&c.algebra, 2));
    assert!(matches!(Window::build(&c.algebra, mods, true), Err(SpectroidError::Decomposable(_))));
    let mods = vec![c.modules[0].clone(), c.modules[2].clone()];
    assert_eq!(Window::build(&c.algebra, mods, true).unwrap_err(), SpectroidError::MissingProjective("2".into()));
}

#[test]
fn generators_map_to_idempotents() {
    let w = window("kronecker");
    for v in 0..2 {
        let p = projective(w.algebra(), v);
        let x = w.projective_index(v);
        assert_eq!(w.object(x).dims, p.dims);
        assert_eq!(w.generator(v).iter().filter(|e| !e.is_zero()).count(), 1);
    }
}

#[test]
fn a2_radical() {
    let w = window("a2");
    let rad = w.radical_ideal();
    let (s1, s2, p1) = (0, 1, 2);
    assert_eq!(rad.piece(p1, s1).dim(), 1);
    assert_eq!(rad.piece(s2, p1).dim(), 1);
    for x in 0..3 {
        assert!(!rad.contains_coords(x, x, &w.identity_coords(x)));
        assert_eq!(rad.piece(x, x).dim(), 0);
    }
    assert!(w.is_ideal(&rad));
    assert!(w.ideal_power(&rad, 2).unwrap().is_zero());
    let (om, step) = w.omega_power(&rad, DEFAULT_STABILIZATION_BUDGET).unwrap();
    assert!(om.is_zero());
    assert_eq!(step, 2);
}

#[test]
fn product_with_unit_ideal() {
    let w = window("a3");
    let rad = w.radical_ideal();
    let unit = w.unit_ideal();
    assert_eq!(w.ideal_product(&rad, &unit).unwrap(), rad);
    assert_eq!(w.ideal_product(&unit, &rad).unwrap(), rad);
}

#[test]
fn subcategory_ideals_on_a2() {
    let w = window("a2");
    let (s1, s2, p1) = (0, 1, 2);
    let c2 = w.ideal_of_subcategory(&[s2]);
    assert_eq!(c2.piece(p1, s1).dim(), 0);
    assert!(c2.piece(s2, p1).is_full());
    assert!(c2.piece(s2, s2).is_full());
    assert!(w.ideal_of_subcategory(&[]).is_zero());
    assert_eq!(w.ideal_of_subcategory(&[0, 1, 2]), w.unit_ideal());
    let c1 = w.ideal_of_subcategory(&[s1]);
    assert!(w.ideal_meet(&c1, &c2).unwrap().is_zero());
    assert_eq!(w.ideal_meet(&c1, &w.unit_ideal()).unwrap(), c1);
    assert_eq!(w.ideal_join(&w.zero_ideal(), &c1).unwrap(), c1);
    assert!(w.ideal_leq(&c1, &w.unit_ideal()).unwrap());
    assert!(!w.ideal_leq(&c1, &c2).unwrap());
    assert_eq!(c2.ob(&w), vec![s2]);
}

#[test]
fn generated_ideal_matches_subcategory_ideal() {
    let w = window("a2");
    let s2 = 1;
    let id = w.morphism(s2, s2, &w.identity_coords(s2));
    let g = w.ideal_from_generators(&[(s2, s2, id)]).unwrap();
    assert_eq!(g, w.ideal_of_subcategory(&[s2]));
}

#[test]
fn foreign_morphisms_and_windows_are_rejected() {
    let w = window("a2");
    let v = window("a3");
    assert_eq!(w.ideal_meet(&w.unit_ideal(), &v.unit_ideal()).unwrap_err(), SpectroidError::WindowMismatch);
    let alg = w.algebra();
    let bogus = torsidl_quiver::Morphism::identity(alg, &ModuleRep::simple(alg, 0));
    assert!(matches!(w.ideal_from_generators(&[(0, 2, bogus)]), Err(SpectroidError::ForeignMorphism(_))));
    assert!(matches!(w.index_of("X"), Err(SpectroidError::UnknownObject(_))));
}

#[test]
fn finite_window_radical_is_nilpotent() {
    // Literal stabilization inside a finite window always reaches zero.
    let w = window("kronecker");
    let (om, _) = w.omega_power(&w.radical_ideal(), DEFAULT_STABILIZATION_BUDGET).unwrap();
    assert!(om.is_zero());
}

#[test]
fn translates_make_long_radical_chains_visible() {
    let base = window("kronecker");
    let w = base.extend_by_translates(5).unwrap();
    assert_eq!(w.base_len(), 20);
    assert_eq!(w.len(), 36);
    let rad = w.radical_ideal();
    let rows = w.power_rows(&rad, w.regular(), 8);
    for x in 0..w.base_len() {
        let name = &w.object(x).name;
        let full: usize = w.regular().iter().map(|&p| w.hom_dim(p, x)).sum();
        let deep: usize = rows[8].iter().map(|r| r[x].dim()).sum();
        if name.starts_with('R') || name.starts_with('I') {
            assert_eq!(deep, full, "{name}");
        } else {
            assert_eq!(deep, 0, "{name}");
        }
    }
}

#[test]
fn rows_and_columns_agree_with_full_powers() {
    let w = window("a3");
    let rad = w.radical_ideal();
    let all: Vec<usize> = (0..w.len()).collect();
    let rows = w.power_rows(&rad, &all, 3);
    let cols = w.power_columns(&rad, &all, 3);
    for n in 0..=3 {
        let p = w.ideal_power(&rad, n).unwrap();
        for x in 0..w.len() {
            for y in 0..w.len() {
                assert_eq!(&rows[n][x][y], p.piece(x, y));
                assert_eq!(&cols[n][y][x], p.piece(x, y));
            }
        }
    }
}

#[test]
fn opposite_window_dualizes_objects() {
    let w = window("a2");
    let op = w.opposite().unwrap();
    assert_eq!(op.len(), 3);
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(op.hom_dim(y, x), w.hom_dim(x, y));
        }
    }
}

#[test]
fn compose_spaces_of_zero_is_zero() {
    let w = window("a2");
    let z = Subspace::zero(w.field(), w.hom_dim(1, 2));
    assert!(w.compose_spaces(1, 2, 0, &Subspace::full(w.field(), w.hom_dim(2, 0)), &z).is_zero());
}
