//! Serializable summaries of pairs.

use crate::pair::{is_idempotent, ob_generates, IdealTorsionPair};
use crate::{SubfunctorDims, TorsionError};
use serde::{Deserialize, Serialize};
use torsidl_spectroid::Window;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub window: String,
    pub exact: bool,
    pub t: Vec<SubfunctorDims>,
    /// `torsion_dims[x][y] = dim I(X, Y)`.
    pub torsion_dims: Vec<Vec<usize>>,
    pub torsionfree_dims: Vec<Vec<usize>>,
    pub ob_torsion: Vec<String>,
    pub idempotent: bool,
    pub generated_by_objects: bool,
}

pub fn pair_report(w: &Window, p: &IdealTorsionPair) -> Result<PairReport, TorsionError> {
    Ok(PairReport {
        window: w.id().to_string(),
        exact: p.exact,
        t: p.t.dims(w),
        torsion_dims: p.torsion.dims(),
        torsionfree_dims: p.torsionfree.dims(),
        ob_torsion: p.torsion.ob(w).into_iter().map(|x| w.object(x).name.clone()).collect(),
        idempotent: is_idempotent(w, p)?,
        generated_by_objects: ob_generates(w, p),
    })
}
