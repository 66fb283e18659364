//! Canonical JSON export of an enumerated subfunctor lattice.

use crate::FiniteLattice;
use serde::Serialize;
use sha2::{Digest, Sha256};
use torsidl_spectroid::Window;
use torsidl_torsion::Subfunctor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementExport {
    /// Dimension of the value at each window object, in window order.
    pub dims: Vec<usize>,
    /// SHA-256 of the reduced bases of all values.
    pub hash: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeExport {
    pub window: String,
    pub objects: Vec<String>,
    pub count: usize,
    pub elements: Vec<ElementExport>,
    pub hasse: Vec<(usize, usize)>,
    pub modular: bool,
    pub chain: bool,
}

pub fn subfunctor_hash(w: &Window, t: &Subfunctor) -> String {
    let f = w.field();
    let mut h = Sha256::new();
    for (x, v) in t.values().iter().enumerate() {
        h.update(format!("{x}:"));
        for b in v.basis_vectors() {
            let row: Vec<String> = b.iter().map(|e| f.format(e)).collect();
            h.update(row.join(","));
            h.update(";");
        }
        h.update("|");
    }
    hex::encode(h.finalize())
}

pub fn export_lattice(w: &Window, l: &FiniteLattice<Subfunctor>) -> LatticeExport {
    LatticeExport {
        window: w.id().to_string(),
        objects: w.objects().iter().map(|m| m.name.clone()).collect(),
        count: l.len(),
        elements: l
            .elements
            .iter()
            .map(|t| ElementExport { dims: t.values().iter().map(|v| v.dim()).collect(), hash: subfunctor_hash(w, t) })
            .collect(),
        hasse: l.hasse_edges(),
        modular: l.is_modular(),
        chain: l.is_chain(),
    }
}
