mod common;

use common::{all_subfunctors, idx, sub_window, window};
use std::sync::OnceLock;
use torsidl_lattice::*;
use torsidl_linalg::Subspace;
use torsidl_quiver::{hom_space, regular_module};
use torsidl_spectroid::Window;
use torsidl_torsion::{is_left_determined, pair_from_subfunctor, torsion_closure, torsionfree_closure, Subfunctor};

fn kronecker_extended() -> &'static Window {
    static W: OnceLock<Window> = OnceLock::new();
    W.get_or_init(|| window("kronecker").extend_by_translates(5).unwrap())
}

fn sorted(mut v: Vec<Subfunctor>) -> Vec<Vec<Vec<Vec<torsidl_linalg::Elem>>>> {
    let mut keys: Vec<_> = v.drain(..).map(|t| t.values().iter().map(Subspace::basis_vectors).collect()).collect();
    keys.sort();
    keys
}

#[test]
fn a2_enumeration_matches_brute_force() {
    let w = window("a2");
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
    assert_eq!(l.len(), 8);
    assert!(l.is_modular());
    assert!(!l.is_chain());
    for t in &l.elements {
        t.validate(&w).unwrap();
    }
    assert_eq!(sorted(l.elements.clone()), sorted(all_subfunctors(&w)));
}

#[test]
fn dual_numbers_enumeration_is_a_four_chain() {
    let w = window("dualnumbers");
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
    assert_eq!(l.len(), 4);
    assert!(l.is_chain());
    assert_eq!(sorted(l.elements.clone()), sorted(all_subfunctors(&w)));
    assert_eq!(mdim(&l), MDim::Value(0));
}

#[test]
fn single_simple_has_two_subfunctors() {
    let spec: torsidl_quiver::AlgebraSpec =
        serde_json::from_str(r#"{"field": {"Fp": 3}, "vertices": ["1"], "arrows": [], "relations": []}"#).unwrap();
    let alg = spec.build().unwrap();
    let w = Window::build(&alg, vec![torsidl_quiver::ModuleRep::simple(&alg, 0)], true).unwrap();
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
    assert_eq!(l.len(), 2);
    assert_eq!(mdim(&l), MDim::Value(0));
}

#[test]
fn rational_field_is_rejected() {
    let mut c = torsidl_quiver::load_corpus(&common::corpus_dir("a2")).unwrap();
    let spec = torsidl_quiver::AlgebraSpec {
        field: torsidl_quiver::FieldSpec::from_field(torsidl_linalg::Field::Rationals),
        ..c.algebra_spec.clone()
    };
    let alg = spec.build().unwrap();
    let mods = c.module_specs.drain(..).map(|m| m.to_module(&alg).unwrap()).collect();
    let w = Window::build(&alg, mods, true).unwrap();
    assert_eq!(enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap_err(), LatticeError::InfiniteField);
}

#[test]
fn budget_is_enforced() {
    let w = window("a2");
    assert_eq!(enumerate_subfunctors(&w, 4).unwrap_err(), LatticeError::BudgetExceeded(4));
}

#[test]
fn mdim_of_singleton_is_minus_one() {
    let l = FiniteLattice::from_order(vec![()], |_, _| true).unwrap();
    assert_eq!(mdim(&l), MDim::Value(-1));
}

#[test]
fn torsion_classes_and_embedding() {
    let w = window("a2");
    let classes = torsion_classes(&w, DEFAULT_BUDGET).unwrap();
    assert_eq!(classes.len(), 5);
    let (s1, s2, p1) = (idx(&w, "S1"), idx(&w, "S2"), idx(&w, "P1"));
    let mut expected = vec![vec![], vec![s1], vec![s2], vec![s1, p1], vec![s1, s2, p1]];
    for c in &mut expected {
        c.sort();
    }
    let mut got = classes.clone();
    got.sort();
    expected.sort();
    assert_eq!(got, expected);
    let pairs = torsion_class_pairs(&w, &classes).unwrap();
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
    let mut ts: Vec<Subfunctor> = pairs.iter().map(|p| p.t.clone()).collect();
    for t in &ts {
        assert!(l.elements.contains(t));
    }
    ts.sort_by_key(|t| t.total_dim());
    ts.dedup();
    assert_eq!(ts.len(), 5);

    let d = window("dualnumbers");
    assert_eq!(torsion_classes(&d, DEFAULT_BUDGET).unwrap().len(), 2);
}

#[test]
fn quotients_outside_the_window_are_reported() {
    let w = sub_window("a2", &["P1", "S2"]);
    assert!(matches!(torsion_classes(&w, DEFAULT_BUDGET), Err(LatticeError::OutsideWindow(_))));
}

#[test]
fn torsion_dimension_on_representation_finite_windows() {
    for name in ["a2", "a3", "dualnumbers"] {
        let r = torsion_dimension_report(&window(name), &TdOptions::default()).unwrap();
        assert_eq!(r.value, Some(MDim::Value(0)), "{name}");
        assert!(r.exact);
        assert!(r.certificates.is_empty());
    }
}

#[test]
fn torsion_dimension_on_kronecker_is_evidence_only() {
    let opts = TdOptions { certificate_depth: 3, omega_depth: 8, max_certificates: 2, ..TdOptions::default() };
    let r = torsion_dimension_report(kronecker_extended(), &opts).unwrap();
    assert_eq!(r.value, None);
    assert!(!r.exact);
    assert!(!r.certificates.is_empty());
    assert!(r.certificates.iter().all(|c| c.strict && c.chain.len() == 4 && c.witnesses.len() == 3));
}

/// Smallest brute-force subfunctor containing `v` at `x`.
fn principal_oracle(w: &Window, x: usize, v: &[torsidl_linalg::Elem]) -> Subfunctor {
    all_subfunctors(w).into_iter().filter(|t| t.value(x).contains(v)).min_by_key(Subfunctor::total_dim).unwrap()
}

#[test]
fn principal_subfunctors_on_a2() {
    let w = window("a2");
    let f = w.field();
    let p1 = idx(&w, "P1");
    let s1 = idx(&w, "S1");
    let s2 = idx(&w, "S2");
    let zero = vec![f.zero(); w.total_dim(p1)];
    assert!(principal_subfunctor(&w, p1, &zero).is_zero());
    let soc = w.object(p1).socle(w.algebra()).basis_vectors()[0].clone();
    let t = principal_subfunctor(&w, p1, &soc);
    assert_eq!(t, principal_oracle(&w, p1, &soc));
    assert_eq!((t.value(p1).dim(), t.value(s1).dim(), t.value(s2).dim()), (1, 0, 0));
    let top = w.generator(0).to_vec();
    let t = principal_subfunctor(&w, p1, &top);
    assert_eq!(t, principal_oracle(&w, p1, &top));
    assert_eq!((t.value(p1).dim(), t.value(s1).dim(), t.value(s2).dim()), (2, 1, 0));
}

#[test]
fn subfunctor_of_a_morphism_from_the_regular_module() {
    let w = window("a2");
    let alg = w.algebra();
    let f = w.field();
    let (a, _) = regular_module(alg);
    for x in 0..w.len() {
        for phi in hom_space(alg, &a, w.object(x)).unwrap().basis() {
            let t = subfunctor_from_morphism(&w, x, phi).unwrap();
            let image = phi.total(f).image();
            let mut expected = Subfunctor::zero(&w);
            for v in image.basis_vectors() {
                expected = expected.join(&principal_oracle(&w, x, &v));
            }
            assert_eq!(t, expected);
        }
    }
}

#[test]
fn left_determined_count_matches_bisubmodules() {
    for name in ["a2", "dualnumbers"] {
        let w = window(name);
        let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
        for c in 0..w.len() {
            let determined: Vec<Subfunctor> = l
                .elements
                .iter()
                .filter(|t| is_left_determined(&w, &pair_from_subfunctor(&w, t).unwrap().torsion, &[c]))
                .cloned()
                .collect();
            let bisubs = bisubmodule_lattice(&w, c, DEFAULT_BUDGET).unwrap();
            assert_eq!(determined.len(), bisubs.len(), "{name} {}", w.object(c).name);
            let mut at_c: Vec<Vec<_>> = determined.iter().map(|t| t.value(c).basis_vectors()).collect();
            at_c.sort();
            at_c.dedup();
            assert_eq!(at_c.len(), determined.len());
            if name == "a2" && w.object(c).name == "P1" {
                assert_eq!(bisubs.len(), 3);
                assert!(bisubs.is_chain());
            }
        }
    }
}

#[test]
fn kronecker_tube_functors() {
    let w = window("kronecker");
    for lambda in ["0", "1", "inf"] {
        let r1 = idx(&w, &format!("R1_{lambda}"));
        let ideal = w.ideal_of_subcategory(&[r1]);
        let gen = torsion_closure(&w, &ideal).unwrap().t;
        let cogen = torsionfree_closure(&w, &ideal).unwrap().t;
        for j in 1..=4 {
            let rj = idx(&w, &format!("R{j}_{lambda}"));
            let m = w.object(rj);
            assert_eq!(m.dim_vector_of(w.algebra(), gen.value(rj)), vec![1, 1], "gen R{j}_{lambda}");
            assert_eq!(m.dim_vector_of(w.algebra(), cogen.value(rj)), vec![j - 1, j - 1], "cogen R{j}_{lambda}");
        }
    }
}

#[test]
fn kronecker_diamond_chain() {
    let w = window("kronecker");
    for lambda in ["0", "1", "inf"] {
        let r1 = idx(&w, &format!("R1_{lambda}"));
        let chain = diamond_power_chain(&w, &[r1], 4).unwrap();
        for (i, t) in chain.subfunctors().into_iter().enumerate() {
            for k in 1..=4 {
                let rk = idx(&w, &format!("R{k}_{lambda}"));
                let n = (i + 1).min(k);
                assert_eq!(w.object(rk).dim_vector_of(w.algebra(), t.value(rk)), vec![n, n]);
            }
        }
        assert_eq!(chain.strict_steps, vec![true; 3]);
        assert_eq!(chain.witnesses.len(), 3);
    }
}

#[test]
fn diamond_chain_edge_cases() {
    let w = window("a2");
    let s2 = idx(&w, "S2");
    let chain = diamond_power_chain(&w, &[s2], 3).unwrap();
    let ts = chain.subfunctors();
    assert_eq!(ts[0], ts[1]);
    assert_eq!(ts[1], ts[2]);
    let p1 = idx(&w, "P1");
    assert_eq!((ts[0].value(p1).dim(), ts[0].value(s2).dim()), (1, 1));
    assert_eq!(chain.strict_steps, vec![false, false]);

    let all: Vec<usize> = (0..w.len()).collect();
    let chain = diamond_power_chain(&w, &all, 3).unwrap();
    assert!(chain.subfunctors().iter().all(|t| t.is_identity()));
}

#[test]
fn descending_chain_certificate_on_kronecker() {
    let w = kronecker_extended();
    let x = idx(w, "P2");
    let y = idx(w, "R1_0");
    let rad = w.radical_ideal();
    let psi = w.power_rows(&rad, &[x], 8)[8][0][y].basis_vectors()[0].clone();
    let c = descending_chain_certificate(w, x, y, &psi, 4, 8).unwrap();
    assert_eq!(c.chain.len(), 5);
    assert!(c.strict);
    assert_eq!(c.witnesses.len(), 4);
    for (i, wit) in c.witnesses.iter().enumerate() {
        let obj = w.index_of(&wit.object).unwrap();
        let v: Vec<_> = wit.vector.iter().map(|s| w.field().parse(s).unwrap()).collect();
        assert!(c.chain[i].value(obj).contains(&v));
        assert!(!c.chain[i + 1].value(obj).contains(&v));
    }
    assert!(c.bottom.leq(&c.chain[4]));
    assert!(!c.bottom.is_zero());

    let trivial = descending_chain_certificate(w, x, y, &psi, 0, 8).unwrap();
    assert_eq!(trivial.chain.len(), 1);
    assert!(trivial.strict);
}

#[test]
fn descending_chain_certificate_needs_a_deep_morphism() {
    let w = window("a2");
    let (s2, p1) = (idx(&w, "S2"), idx(&w, "P1"));
    assert_eq!(w.hom_dim(s2, p1), 1);
    let psi = vec![w.field().one()];
    let err = descending_chain_certificate(&w, s2, p1, &psi, 1, 4).unwrap_err();
    assert!(matches!(err, LatticeError::Precondition(_)));
}

#[test]
fn lattice_export_is_canonical() {
    let w = window("a2");
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
    let e = export_lattice(&w, &l);
    assert_eq!(e.count, 8);
    assert_eq!(e.elements[0].dims, vec![0, 0, 0]);
    assert_eq!(e.elements[7].dims, vec![1, 1, 2]);
    assert!(e.modular);
    let again = export_lattice(&w, &enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap());
    assert_eq!(serde_json::to_string(&e).unwrap(), serde_json::to_string(&again).unwrap());
}
