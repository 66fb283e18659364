//! Command implementations. Each returns a [`Report`]; the binary only parses flags and writes.

use crate::suites::{run_suite, SuiteOutcome, SUITES};
use crate::{cache, CliError, Report, WindowSpec};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::Path;
use torsidl_lattice::{
    descending_chain_certificate, diamond_power_chain, enumerate_subfunctors, export_lattice, mdim,
    torsion_dimension_report, MDim, TdOptions,
};
use torsidl_rank::{projective_rank, rad_chain, OrdinalTag};
use torsidl_spectroid::{Window, WindowSummary};
use torsidl_torsion::{
    is_left_determined, is_right_determined, pair_from_subfunctor, pair_report, torsion_closure, torsionfree_closure,
    IdealTorsionPair, PairReport, Subfunctor,
};

/// A window loaded for a command, optionally extended by translates.
pub struct Session {
    pub window: Window,
    pub key: String,
    pub extend: usize,
}

impl Session {
    pub fn new(spec: &WindowSpec, extend: usize) -> Result<Session, CliError> {
        let base = spec.build()?;
        let window = if extend > 0 { base.extend_by_translates(extend)? } else { base };
        Ok(Session { window, key: spec.hash(), extend })
    }

    fn inputs(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::from([("window".to_string(), self.key.clone())]);
        if self.extend > 0 {
            m.insert("extend".to_string(), self.extend.to_string());
        }
        m
    }

    pub fn object(&self, name: &str) -> Result<usize, CliError> {
        self.window.index_of(name).map_err(|_| CliError::Usage(format!("unknown object {name:?}")))
    }

    fn objects(&self, names: &[String]) -> Result<Vec<usize>, CliError> {
        names.iter().map(|n| self.object(n)).collect()
    }
}

#[derive(Serialize)]
struct WindowPayload {
    key: String,
    summary: WindowSummary,
}

pub fn window_build(spec: &WindowSpec, cache_dir: &Path) -> Result<Report, CliError> {
    let w = spec.build()?;
    let cached = cache::store(cache_dir, spec, w.summary())?;
    let inputs = BTreeMap::from([("window".to_string(), cached.key.clone())]);
    Ok(Report::new("window build", inputs, w.is_complete(), WindowPayload { key: cached.key, summary: cached.summary }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Closure {
    /// Torsion closure of the maps factoring through the objects.
    Gen,
    /// Torsionfree closure of the maps factoring through the objects.
    Cogen,
    /// The maps factoring through the objects, which must already form a torsion ideal.
    Ideal,
}

pub enum PairSelector {
    Closure(Closure, Vec<String>),
    /// `zero`, `one`, or `OBJECT:c1,c2,...` for the subfunctor generated by one vector.
    Subfunctor(String),
}

#[derive(Serialize)]
struct PairPayload {
    t_dims: BTreeMap<String, usize>,
    report: PairReport,
    left_determined_by: Vec<String>,
    right_determined_by: Vec<String>,
}

fn parse_seed(s: &Session, seed: &str) -> Result<Subfunctor, CliError> {
    let w = &s.window;
    match seed {
        "zero" => Ok(Subfunctor::zero(w)),
        "one" => Ok(Subfunctor::identity(w)),
        _ => {
            let (name, coords) = seed.split_once(':').ok_or_else(|| {
                CliError::Usage(format!("subfunctor seed {seed:?} is not zero, one or OBJECT:coords"))
            })?;
            let x = s.object(name)?;
            let f = w.field();
            let v = coords
                .split(',')
                .map(|c| f.parse(c.trim()).map_err(|e| CliError::Usage(format!("coordinate {c:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != w.total_dim(x) {
                return Err(CliError::Usage(format!(
                    "{name} has dimension {}, got {} coordinates",
                    w.total_dim(x),
                    v.len()
                )));
            }
            Ok(Subfunctor::principal(w, x, &v))
        }
    }
}

pub fn select_pair(s: &Session, sel: &PairSelector) -> Result<IdealTorsionPair, CliError> {
    let w = &s.window;
    Ok(match sel {
        PairSelector::Closure(kind, names) => {
            let ideal = w.ideal_of_subcategory(&s.objects(names)?);
            match kind {
                Closure::Gen => torsion_closure(w, &ideal)?,
                Closure::Cogen => torsionfree_closure(w, &ideal)?,
                Closure::Ideal => {
                    let p = torsion_closure(w, &ideal)?;
                    if p.torsion != ideal {
                        return Err(CliError::Validation(format!(
                            "maps through {names:?} do not form a torsion ideal"
                        )));
                    }
                    p
                }
            }
        }
        PairSelector::Subfunctor(seed) => pair_from_subfunctor(w, &parse_seed(s, seed)?)?,
    })
}

pub fn pair(s: &Session, sel: &PairSelector) -> Result<Report, CliError> {
    let w = &s.window;
    let p = select_pair(s, sel)?;
    let report = pair_report(w, &p)?;
    let names = |pred: &dyn Fn(usize) -> bool| -> Vec<String> {
        (0..w.len()).filter(|&c| pred(c)).map(|c| w.object(c).name.clone()).collect()
    };
    let payload = PairPayload {
        t_dims: report.t.iter().map(|d| (d.object.clone(), d.dim)).collect(),
        left_determined_by: names(&|c| is_left_determined(w, &p.torsion, &[c])),
        right_determined_by: names(&|c| is_right_determined(w, &p.torsion, &[c])),
        report,
    };
    Ok(Report::new("pair", s.inputs(), p.exact, payload))
}

/// `Finite(n)`, `OmegaPlus(k)` or `ExceedsBudget`.
pub fn tag_label(t: &OrdinalTag) -> String {
    match t {
        OrdinalTag::Finite(n) => format!("Finite({n})"),
        OrdinalTag::OmegaPlus { k, .. } => format!("OmegaPlus({k})"),
        OrdinalTag::ExceedsBudget => "ExceedsBudget".to_string(),
    }
}

#[derive(Serialize)]
struct RankPayload {
    module: String,
    tag: String,
    ordinal: String,
    chain_dims: Vec<usize>,
    preprojective: bool,
    projective_rank: String,
    window_relative: bool,
}

pub fn rank(s: &Session, module: &str, depth: usize, omega_budget: usize) -> Result<Report, CliError> {
    let w = &s.window;
    let m = s.object(module)?;
    let r = rad_chain(w, m, depth);
    let prk = projective_rank(w, m, depth, omega_budget)?;
    let payload = RankPayload {
        module: r.module.clone(),
        tag: tag_label(&r.tag),
        ordinal: r.tag.to_string(),
        chain_dims: r.chain.clone(),
        preprojective: r.preprojective,
        projective_rank: tag_label(&prk),
        window_relative: !r.tag.is_finite() || !w.is_complete(),
    };
    Ok(Report::new("rank", s.inputs(), r.exact, payload))
}

pub enum LatticeQuery {
    Enumerate { budget: usize },
    Mdim { budget: usize },
    TorsionDimension(TdOptions),
    Certify { source: String, target: String, depth: usize, omega_depth: usize },
    Diamond { objects: Vec<String>, n_max: usize },
}

#[derive(Serialize)]
struct MdimPayload {
    count: usize,
    mdim: MDim,
}

#[derive(Serialize)]
struct DiamondPayload {
    chain: Vec<BTreeMap<String, usize>>,
    strict_steps: Vec<bool>,
    witnesses: Vec<torsidl_lattice::StrictnessWitness>,
}

pub fn lattice(s: &Session, q: &LatticeQuery) -> Result<Report, CliError> {
    let w = &s.window;
    let exact = w.is_complete();
    match q {
        LatticeQuery::Enumerate { budget } => {
            let l = enumerate_subfunctors(w, *budget)?;
            Ok(Report::new("lattice enumerate", s.inputs(), exact, export_lattice(w, &l)))
        }
        LatticeQuery::Mdim { budget } => {
            let l = enumerate_subfunctors(w, *budget)?;
            Ok(Report::new("lattice mdim", s.inputs(), exact, MdimPayload { count: l.len(), mdim: mdim(&l) }))
        }
        LatticeQuery::TorsionDimension(opts) => {
            let r = torsion_dimension_report(w, opts)?;
            Ok(Report::new("lattice td", s.inputs(), r.exact, r))
        }
        LatticeQuery::Certify { source, target, depth, omega_depth } => {
            let (x, y) = (s.object(source)?, s.object(target)?);
            let rows = w.power_rows(&w.radical_ideal(), &[x], *omega_depth);
            let psi = rows[*omega_depth][0][y].basis_vectors().into_iter().next().ok_or_else(|| {
                CliError::Validation(format!("no nonzero map {source} -> {target} in rad^{omega_depth}"))
            })?;
            let c = descending_chain_certificate(w, x, y, &psi, *depth, *omega_depth)?;
            Ok(Report::new("lattice certify", s.inputs(), false, c.export(w)))
        }
        LatticeQuery::Diamond { objects, n_max } => {
            let chain = diamond_power_chain(w, &s.objects(objects)?, *n_max)?;
            let dims = chain
                .subfunctors()
                .iter()
                .map(|t| (0..w.len()).map(|x| (w.object(x).name.clone(), t.value(x).dim())).collect())
                .collect();
            let payload = DiamondPayload { chain: dims, strict_steps: chain.strict_steps, witnesses: chain.witnesses };
            Ok(Report::new("lattice diamond", s.inputs(), exact, payload))
        }
    }
}

/// Runs one suite, or every suite for `all`.
pub fn verify(suite: &str, corpora: &Path) -> Result<(Report, Vec<SuiteOutcome>), CliError> {
    let names: Vec<&str> = if suite == "all" { SUITES.iter().map(|s| s.0).collect() } else { vec![suite] };
    let outcomes = names.iter().map(|n| run_suite(n, corpora)).collect::<Result<Vec<_>, _>>()?;
    let inputs = BTreeMap::from([("suite".to_string(), suite.to_string())]);
    let passed = outcomes.iter().all(|o| o.passed);
    #[derive(Serialize)]
    struct VerifyPayload<'a> {
        passed: bool,
        suites: &'a [SuiteOutcome],
    }
    let report = Report::new("verify", inputs, true, VerifyPayload { passed, suites: &outcomes });
    Ok((report, outcomes))
}
