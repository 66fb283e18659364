//! The standard duality `D = Hom_k(-, k)` between modules over `A` and over `A^op`.

use crate::{Algebra, ModuleRep, Morphism};

/// `D M` over the opposite algebra: same vertex dimensions, transposed arrow maps.
pub fn dualize(m: &ModuleRep) -> ModuleRep {
    ModuleRep {
        name: format!("D{}", m.name),
        dims: m.dims.clone(),
        maps: m.maps.iter().map(|a| a.transpose()).collect(),
    }
}

/// `D f : D N -> D M` for `f : M -> N`.
pub fn dualize_morphism(f: &Morphism) -> Morphism {
    f.transpose()
}

/// The natural isomorphism `D D M -> M` in dual-basis coordinates, checked to intertwine.
pub fn double_dual_iso(alg: &Algebra, m: &ModuleRep) -> Morphism {
    let dd = dualize(&dualize(m));
    let iso = Morphism::identity(alg, m);
    iso.check(alg, &dd, m).expect("double dual agrees with the original module");
    iso
}
