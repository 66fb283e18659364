//! Randomized checks over small representations of A2 and the Kronecker quiver.

mod common;

use common::*;
use proptest::prelude::*;
use torsidl_linalg::{Elem, Field, Matrix};
use torsidl_quiver::*;

fn random_module(alg: &Algebra, dims: &[usize], seed: &[u32]) -> ModuleRep {
    let f = alg.field();
    let mut it = seed.iter().cycle();
    let maps = alg
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.dst], dims[a.src]);
            let rows = (0..r).map(|_| (0..c).map(|_| f.from_i64(*it.next().unwrap() as i64)).collect()).collect();
            Matrix::from_rows(f, c, rows)
        })
        .collect();
    ModuleRep { name: "M".into(), dims: dims.to_vec(), maps }
}

/// Counts morphisms by enumerating every block matrix over F_2.
fn brute_force_hom_count(alg: &Algebra, m: &ModuleRep, n: &ModuleRep) -> usize {
    let f = alg.field();
    let sizes: Vec<usize> = (0..alg.num_vertices()).map(|v| m.dims[v] * n.dims[v]).collect();
    let total: usize = sizes.iter().sum();
    let mut count = 0;
    for mask in 0u64..(1 << total) {
        let mut bit = 0;
        let blocks = (0..alg.num_vertices())
            .map(|v| {
                let rows = (0..n.dims[v])
                    .map(|_| {
                        (0..m.dims[v])
                            .map(|_| {
                                let x = (mask >> bit) & 1;
                                bit += 1;
                                f.from_i64(x as i64)
                            })
                            .collect()
                    })
                    .collect();
                Matrix::from_rows(f, m.dims[v], rows)
            })
            .collect();
        if (Morphism { blocks }).check(alg, m, n).is_ok() {
            count += 1;
        }
    }
    count
}

fn dims_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..=2, 2)
}

fn seed_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..2, 1..16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hom_dimension_matches_enumeration(
        d1 in dims_strategy(), d2 in dims_strategy(), s1 in seed_strategy(), s2 in seed_strategy(), kron in any::<bool>()
    ) {
        let alg = if kron { kronecker(f2()) } else { a2(f2()) };
        let m = random_module(&alg, &d1, &s1);
        let n = random_module(&alg, &d2, &s2);
        let h = hom_space(&alg, &m, &n).unwrap();
        prop_assert_eq!(1usize << h.dim(), brute_force_hom_count(&alg, &m, &n));
        for b in h.basis() {
            prop_assert!(b.check(&alg, &m, &n).is_ok());
        }
    }

    #[test]
    fn decomposition_preserves_dimension(d in prop::collection::vec(0usize..=3, 2), s in seed_strategy()) {
        let alg = kronecker(Field::prime(3).unwrap());
        let m = random_module(&alg, &d, &s);
        match decompose(&alg, &m) {
            Ok(parts) => {
                let mut dims = vec![0usize; 2];
                for p in &parts {
                    prop_assert!(certify_local(&alg, &p.module).is_some());
                    for v in 0..2 {
                        dims[v] += p.module.dims[v] * p.multiplicity;
                    }
                }
                prop_assert_eq!(dims, m.dims.clone());
                let sums: Vec<ModuleRep> = parts.iter().map(|p| p.module.power(&alg, p.multiplicity)).collect();
                let refs: Vec<&ModuleRep> = sums.iter().collect();
                let (rebuilt, _, _) = ModuleRep::direct_sum(&alg, &refs, "rebuilt");
                prop_assert!(is_isomorphic(&alg, &rebuilt, &m).unwrap());
            }
            Err(e) => prop_assert!(matches!(e, QuiverError::DecompositionUndecided(_))),
        }
    }

    #[test]
    fn double_dual_is_identity(d in dims_strategy(), s in seed_strategy()) {
        let alg = kronecker(f2());
        let m = random_module(&alg, &d, &s);
        let dm = dualize(&m);
        prop_assert!(dm.validate(&alg.opposite()).is_ok());
        prop_assert!(double_dual_iso(&alg, &m).is_iso());
        let n = random_module(&alg, &d, &s.iter().rev().copied().collect::<Vec<_>>());
        let h = hom_space(&alg, &m, &n).unwrap();
        let hd = hom_space(&alg.opposite(), &dualize(&n), &dm).unwrap();
        prop_assert_eq!(h.dim(), hd.dim());
    }

    #[test]
    fn hom_from_regular_is_total_dimension(d in prop::collection::vec(0usize..=3, 2), s in seed_strategy()) {
        let alg = kronecker(f2());
        let m = random_module(&alg, &d, &s);
        let (reg, _) = regular_module(&alg);
        prop_assert_eq!(hom_space(&alg, &reg, &m).unwrap().dim(), m.total_dim());
    }

    #[test]
    fn module_product_is_associative(x in prop::collection::vec(0i64..5, 4), y in prop::collection::vec(0i64..5, 4), z in prop::collection::vec(0i64..5, 4)) {
        let alg = kronecker(Field::prime(5).unwrap());
        let f = alg.field();
        let v = |w: &[i64]| -> Vec<Elem> { w.iter().map(|&c| f.from_i64(c)).collect() };
        let (x, y, z) = (v(&x), v(&y), v(&z));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        prop_assert_eq!(alg.mul(&alg.unit(), &x), x.clone());
    }
}
