mod common;

use common::{all_subfunctors, corpus, idx, window};
use proptest::prelude::*;
use std::sync::OnceLock;
use torsidl_lattice::*;
use torsidl_linalg::{Elem, Subspace};
use torsidl_spectroid::Window;
use torsidl_torsion::{pair_from_subfunctor, pair_join, pair_meet, Subfunctor};

const NAMES: [&str; 3] = ["a2", "a3", "dualnumbers"];

struct Fixture {
    window: Window,
    lattice: FiniteLattice<Subfunctor>,
    brute: Vec<Subfunctor>,
}

fn fixtures() -> &'static Vec<Fixture> {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        NAMES
            .iter()
            .map(|n| {
                let window = window(n);
                let lattice = enumerate_subfunctors(&window, DEFAULT_BUDGET).unwrap();
                let brute = all_subfunctors(&window);
                Fixture { window, lattice, brute }
            })
            .collect()
    })
}

fn kronecker_extended() -> &'static Window {
    static W: OnceLock<Window> = OnceLock::new();
    W.get_or_init(|| window("kronecker").extend_by_translates(5).unwrap())
}

/// `rad^8(X, -)` rows for X among the first projectives of the extended Kronecker window.
fn kronecker_rows() -> &'static Vec<Vec<Subspace>> {
    static R: OnceLock<Vec<Vec<Subspace>>> = OnceLock::new();
    R.get_or_init(|| {
        let w = kronecker_extended();
        let rad = w.radical_ideal();
        let sources: Vec<usize> = ["P1", "P2"].iter().map(|n| idx(w, n)).collect();
        w.power_rows(&rad, &sources, 8).pop().unwrap()
    })
}

fn vector(w: &Window, dim: usize, seed: &[i64]) -> Vec<Elem> {
    (0..dim).map(|i| w.field().from_i64(seed[i % seed.len()] + i as i64 * seed[0])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumerated_lattice_is_modular_with_consistent_tables(k in 0usize..3, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let fx = &fixtures()[k];
        let l = &fx.lattice;
        let (a, b, c) = (a % l.len(), b % l.len(), c % l.len());
        let (ta, tb) = (&l.elements[a], &l.elements[b]);
        prop_assert_eq!(&l.elements[l.meet[a][b]], &ta.meet(tb));
        prop_assert_eq!(&l.elements[l.join[a][b]], &ta.join(tb));
        let w = &fx.window;
        let (pa, pb) = (pair_from_subfunctor(w, ta).unwrap(), pair_from_subfunctor(w, tb).unwrap());
        prop_assert_eq!(&pair_meet(w, &pa, &pb).unwrap().t, &l.elements[l.meet[a][b]]);
        prop_assert_eq!(&pair_join(w, &pa, &pb).unwrap().t, &l.elements[l.join[a][b]]);
        if l.leq[a][c] {
            prop_assert_eq!(l.join[a][l.meet[b][c]], l.meet[l.join[a][b]][c]);
        }
        prop_assert_eq!(l.leq[a][b], ta.leq(tb));
    }

    #[test]
    fn enumeration_agrees_with_brute_force_and_validates(k in 0usize..3, i in 0usize..64) {
        let fx = &fixtures()[k];
        prop_assert_eq!(fx.lattice.len(), fx.brute.len());
        let t = &fx.brute[i % fx.brute.len()];
        prop_assert!(fx.lattice.elements.contains(t));
        let e = &fx.lattice.elements[i % fx.lattice.len()];
        prop_assert!(e.validate(&fx.window).is_ok());
    }

    #[test]
    fn count_is_invariant_under_reordering(k in 0usize..3, perm in Just(()).prop_perturb(|_, mut rng| rng.next_u64())) {
        let c = corpus(NAMES[k]);
        let mut mods = c.modules.clone();
        let mut s = perm;
        for i in (1..mods.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            mods.swap(i, (s >> 33) as usize % (i + 1));
        }
        let w = Window::build(&c.algebra, mods, true).unwrap();
        let l = enumerate_subfunctors(&w, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(l.len(), fixtures()[k].lattice.len());
        prop_assert_eq!(l.is_chain(), fixtures()[k].lattice.is_chain());
        prop_assert_eq!(mdim(&l), MDim::Value(0));
    }

    #[test]
    fn principal_subfunctor_is_smallest_containing_the_vector(k in 0usize..3, x in 0usize..8, seed in proptest::collection::vec(-5i64..5, 1..6)) {
        let fx = &fixtures()[k];
        let w = &fx.window;
        let x = x % w.len();
        let v = vector(w, w.total_dim(x), &seed);
        let t = principal_subfunctor(w, x, &v);
        prop_assert!(t.value(x).contains(&v));
        for s in &fx.brute {
            if s.value(x).contains(&v) {
                prop_assert!(t.leq(s));
            }
        }
    }

    #[test]
    fn hasse_edges_are_length_one_intervals(k in 0usize..3, a in 0usize..64, b in 0usize..64) {
        let l = &fixtures()[k].lattice;
        let (a, b) = (a % l.len(), b % l.len());
        let edges = l.hasse_edges();
        prop_assert_eq!(edges.contains(&(a, b)), l.interval_length(a, b) == Some(1));
        if l.leq[a][b] {
            let la = l.interval_length(l.bottom(), a).unwrap();
            let lb = l.interval_length(l.bottom(), b).unwrap();
            prop_assert!(la <= lb);
        }
    }

    #[test]
    fn certificate_witnesses_separate_consecutive_members(src in 0usize..2, y in 0usize..64, coeffs in proptest::collection::vec(0i64..2, 1..4), depth in 0usize..5) {
        let w = kronecker_extended();
        let x = idx(w, ["P1", "P2"][src]);
        let rows = kronecker_rows();
        let candidates: Vec<usize> = (0..w.len()).filter(|&t| !rows[src][t].is_zero()).collect();
        let y = candidates[y % candidates.len()];
        let basis = rows[src][y].basis_vectors();
        let mut psi = rows[src][y].combine(&(0..basis.len()).map(|i| w.field().from_i64(coeffs[i % coeffs.len()])).collect::<Vec<_>>());
        if psi.iter().all(Elem::is_zero) {
            psi = basis[0].clone();
        }
        let c = descending_chain_certificate(w, x, y, &psi, depth, 8).unwrap();
        prop_assert_eq!(c.chain.len(), depth + 1);
        prop_assert!(c.bottom.leq(&c.chain[depth]));
        for pair in c.chain.windows(2) {
            prop_assert!(pair[1].leq(&pair[0]));
        }
        for wit in &c.witnesses {
            let obj = w.index_of(&wit.object).unwrap();
            let v: Vec<Elem> = wit.vector.iter().map(|s| w.field().parse(s).unwrap()).collect();
            prop_assert!(c.chain[wit.step].value(obj).contains(&v));
            prop_assert!(!c.chain[wit.step + 1].value(obj).contains(&v));
        }
        prop_assert_eq!(c.strict, c.witnesses.len() == depth);
    }
}
