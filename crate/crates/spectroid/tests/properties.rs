//! Randomized ideal-arithmetic checks over the bundled windows.

mod common;

use common::*;
use proptest::prelude::*;
use std::sync::OnceLock;
use torsidl_linalg::Elem;
use torsidl_spectroid::{Ideal, Window};

fn windows() -> &'static [Window] {
    static W: OnceLock<Vec<Window>> = OnceLock::new();
    W.get_or_init(|| {
        vec![
            window("a2"),
            window("a3"),
            window("dualnumbers"),
            sub_window("kronecker", &["P1", "P2", "R1_0", "R2_0", "R1_1", "I1", "I2"]),
        ]
    })
}

/// The ideal generated by a pseudo-random selection of basis morphisms.
fn random_ideal(w: &Window, picks: &[(usize, usize, usize)]) -> Ideal {
    let n = w.len();
    let f = w.field();
    let mut gens = Vec::new();
    for &(a, b, c) in picks {
        let (x, y) = (a % n, b % n);
        let d = w.hom_dim(x, y);
        if d == 0 {
            continue;
        }
        let mut v: Vec<Elem> = vec![f.zero(); d];
        v[c % d] = f.one();
        gens.push((x, y, w.morphism(x, y, &v)));
    }
    w.ideal_from_generators(&gens).unwrap()
}

fn picks() -> impl Strategy<Value = Vec<(usize, usize, usize)>> {
    prop::collection::vec((0usize..64, 0usize..64, 0usize..64), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_ideals_are_two_sided(k in 0usize..4, p in picks()) {
        let w = &windows()[k];
        let i = random_ideal(w, &p);
        prop_assert!(w.is_ideal(&i));
        prop_assert!(w.ideal_leq(&i, &w.unit_ideal()).unwrap());
    }

    #[test]
    fn product_is_associative(k in 0usize..4, a in picks(), b in picks(), c in picks()) {
        let w = &windows()[k];
        let (a, b, c) = (random_ideal(w, &a), random_ideal(w, &b), random_ideal(w, &c));
        let left = w.ideal_product(&w.ideal_product(&a, &b).unwrap(), &c).unwrap();
        let right = w.ideal_product(&a, &w.ideal_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_lies_in_both_factors(k in 0usize..4, a in picks(), b in picks()) {
        let w = &windows()[k];
        let (a, b) = (random_ideal(w, &a), random_ideal(w, &b));
        let p = w.ideal_product(&a, &b).unwrap();
        prop_assert!(w.is_ideal(&p));
        prop_assert!(w.ideal_leq(&p, &w.ideal_meet(&a, &b).unwrap()).unwrap());
    }

    #[test]
    fn meet_and_join_are_ideals(k in 0usize..4, a in picks(), b in picks()) {
        let w = &windows()[k];
        let (a, b) = (random_ideal(w, &a), random_ideal(w, &b));
        let m = w.ideal_meet(&a, &b).unwrap();
        let j = w.ideal_join(&a, &b).unwrap();
        prop_assert!(w.is_ideal(&m) && w.is_ideal(&j));
        prop_assert!(w.ideal_leq(&m, &a).unwrap() && w.ideal_leq(&a, &j).unwrap());
        prop_assert_eq!(w.ideal_meet(&a, &j).unwrap(), a.clone());
    }

    #[test]
    fn radical_powers_descend(k in 0usize..4, n in 0usize..5) {
        let w = &windows()[k];
        let rad = w.radical_ideal();
        let p = w.ideal_power(&rad, n).unwrap();
        let q = w.ideal_power(&rad, n + 1).unwrap();
        prop_assert!(w.ideal_leq(&q, &p).unwrap());
        let (om, step) = w.omega_power(&rad, 64).unwrap();
        let total: usize = (0..w.len()).flat_map(|x| (0..w.len()).map(move |y| (x, y))).map(|(x, y)| w.hom_dim(x, y)).sum();
        prop_assert!(step <= total.max(1));
        prop_assert!(w.ideal_leq(&w.ideal_product(&om, &om).unwrap(), &om).unwrap());
    }
}
