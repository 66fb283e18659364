//! Randomized invariants of the subspace layer.

use proptest::prelude::*;
use torsidl_linalg::{Elem, Field, Matrix, Subspace};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(5))]
}

fn vectors(f: Field, n: usize, k: usize, seed: Vec<i64>) -> Vec<Vec<Elem>> {
    (0..k).map(|i| (0..n).map(|j| f.from_i64(seed[(i * n + j) % seed.len()])).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dimension_formula(f in field_strategy(), n in 1usize..6, ka in 0usize..5, kb in 0usize..5,
                         sa in prop::collection::vec(-3i64..4, 1..40),
                         sb in prop::collection::vec(-3i64..4, 1..40)) {
        let u = Subspace::from_vectors(f, n, vectors(f, n, ka, sa));
        let w = Subspace::from_vectors(f, n, vectors(f, n, kb, sb));
        let (s, i) = u.sum_and_intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(u.leq(&s) && w.leq(&s) && i.leq(&u) && i.leq(&w));
        prop_assert_eq!(s, u.sum(&w));
    }

    #[test]
    fn rref_is_idempotent(f in field_strategy(), r in 1usize..5, c in 1usize..6,
                          seed in prop::collection::vec(-4i64..5, 1..30)) {
        let entries: Vec<i64> = (0..r * c).map(|i| seed[i % seed.len()]).collect();
        let m = Matrix::from_i64(f, r, c, &entries);
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(once.rank, twice.rank);
        prop_assert_eq!(m.kernel().dim(), c - once.rank);
        for v in m.kernel().basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(Elem::is_zero));
        }
    }

    #[test]
    fn canonical_form_is_basis_independent(f in field_strategy(), n in 1usize..5, k in 1usize..4,
                                           seed in prop::collection::vec(-3i64..4, 1..30),
                                           mix in prop::collection::vec(-2i64..3, 16)) {
        let vs = vectors(f, n, k, seed);
        let u = Subspace::from_vectors(f, n, vs.clone());
        let mut mixed = vs.clone();
        for (i, row) in mixed.iter_mut().enumerate() {
            for (j, other) in vs.iter().enumerate() {
                if i != j {
                    let c = f.from_i64(mix[(i * 4 + j) % 16]);
                    for (x, y) in row.iter_mut().zip(other) {
                        *x = f.add(x, &f.mul(&c, y));
                    }
                }
            }
        }
        let mut all = mixed;
        all.extend(vs);
        prop_assert_eq!(u, Subspace::from_vectors(f, n, all));
    }
}
