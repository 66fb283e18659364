//! Torsion-dimension reports: the m-dimension of the enumerated lattice on a complete window, and
//! descending chain certificates (lower-bound evidence only) on an incomplete one.

use crate::{descending_chain_certificate, enumerate_subfunctors, mdim, ChainCertificateExport, LatticeError, MDim};
use serde::Serialize;
use torsidl_spectroid::Window;

#[derive(Clone, Copy, Debug)]
pub struct TdOptions {
    pub budget: usize,
    /// Length of each certificate chain on an incomplete window.
    pub certificate_depth: usize,
    /// Radical depth required of the morphism below each certificate chain.
    pub omega_depth: usize,
    pub max_certificates: usize,
}

impl Default for TdOptions {
    fn default() -> Self {
        TdOptions { budget: crate::DEFAULT_BUDGET, certificate_depth: 3, omega_depth: 6, max_certificates: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionDimensionReport {
    pub window: String,
    /// Present only for complete windows.
    pub value: Option<MDim>,
    pub exact: bool,
    pub lattice_size: Option<usize>,
    pub certificates: Vec<ChainCertificateExport>,
}

pub fn torsion_dimension_report(w: &Window, opts: &TdOptions) -> Result<TorsionDimensionReport, LatticeError> {
    if w.is_complete() {
        let l = enumerate_subfunctors(w, opts.budget)?;
        return Ok(TorsionDimensionReport {
            window: w.id().to_string(),
            value: Some(mdim(&l)),
            exact: true,
            lattice_size: Some(l.len()),
            certificates: Vec::new(),
        });
    }
    let rad = w.radical_ideal();
    let mut certificates = Vec::new();
    'search: for x in 0..w.base_len() {
        let rows = w.power_rows(&rad, &[x], opts.omega_depth);
        for y in 0..w.base_len() {
            let deep = &rows[opts.omega_depth][0][y];
            if let Some(psi) = deep.basis_vectors().into_iter().next() {
                let c = descending_chain_certificate(w, x, y, &psi, opts.certificate_depth, opts.omega_depth);
                if let Some(c) = c.ok().filter(|c| c.strict) {
                    certificates.push(c.export(w));
                    if certificates.len() >= opts.max_certificates {
                        break 'search;
                    }
                }
            }
        }
    }
    Ok(TorsionDimensionReport {
        window: w.id().to_string(),
        value: None,
        exact: false,
        lattice_size: None,
        certificates,
    })
}
