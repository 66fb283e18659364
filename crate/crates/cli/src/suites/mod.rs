//! Bundled verification suites, one per acceptance criterion, each with a runtime budget.

mod properties;

use crate::CliError;
use serde::Serialize;
use std::fmt::Debug;
use std::path::{Path, PathBuf};
use std::time::Instant;
use torsidl_lattice::{
    bisubmodule_lattice, descending_chain_certificate, diamond_power_chain, enumerate_subfunctors, mdim,
    torsion_class_pairs, torsion_classes, torsion_dimension_report, MDim, TdOptions, DEFAULT_BUDGET,
};
use torsidl_linalg::Subspace;
use torsidl_quiver::{find_basis_iso, load_corpus};
use torsidl_rank::{projective_rank, rad_chain, OrdinalTag};
use torsidl_spectroid::Window;
use torsidl_torsion::{is_left_determined, pair_from_subfunctor, torsion_closure, torsionfree_closure, Subfunctor};

pub const CORPORA_ENV: &str = "TORSIDL_CORPORA";

/// Suite name, the criterion it checks, and its runtime budget in seconds (`None`: unbounded).
pub const SUITES: &[(&str, &str, Option<u64>)] = &[
    ("a2-census", "subfunctor census and torsion classes of A2", Some(1)),
    ("dualnumbers", "dual numbers: chain of four, m-dimension and report", Some(1)),
    ("rep-finite-td", "torsion dimension zero on representation-finite windows", Some(10)),
    ("kronecker-5", "Kronecker radical chains and projective ranks", Some(30)),
    ("kronecker-6.9", "Kronecker tube functors, diamond chain and chain certificate", Some(60)),
    ("bijection", "left-determined torsion ideals versus bi-submodules", Some(5)),
    ("properties", "randomized invariant suites", None),
];

/// Kronecker windows are extended by this many translates for radical-depth evidence.
pub const KRONECKER_EXTENSION: usize = 5;
pub const KRONECKER_DEPTH: usize = 8;
const LAMBDAS: [&str; 3] = ["0", "1", "inf"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub description: String,
    pub checks: Vec<Check>,
    /// Wall-clock time; left out of reports so they stay byte-stable.
    #[serde(skip)]
    pub elapsed_ms: u128,
    pub budget_ms: Option<u128>,
    pub passed: bool,
}

impl SuiteOutcome {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Default)]
pub(crate) struct Checks {
    items: Vec<Check>,
}

impl Checks {
    pub(crate) fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub(crate) fn eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, got: T, expected: T) {
        let passed = got == expected;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {expected:?}") };
        self.check(name, passed, detail);
    }
}

/// Flag first, then the environment variable, then `./corpora`, then the source tree.
pub fn corpora_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    if let Some(env) = std::env::var_os(CORPORA_ENV) {
        return PathBuf::from(env);
    }
    let local = PathBuf::from("corpora");
    if local.join("a2").is_dir() {
        return local;
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpora")
}

pub(crate) struct Corpora {
    dir: PathBuf,
}

impl Corpora {
    pub(crate) fn window(&self, name: &str) -> Result<Window, CliError> {
        let c = load_corpus(&self.dir.join(name))?;
        Ok(Window::build(&c.algebra, c.modules, c.manifest.complete)?)
    }

    /// The named objects of a corpus as an incomplete window.
    pub(crate) fn sub_window(&self, name: &str, keep: &[&str]) -> Result<Window, CliError> {
        let c = load_corpus(&self.dir.join(name))?;
        let mods = c.modules.into_iter().filter(|m| keep.contains(&m.name.as_str())).collect();
        Ok(Window::build(&c.algebra, mods, false)?)
    }

    pub(crate) fn kronecker_extended(&self) -> Result<Window, CliError> {
        Ok(self.window("kronecker")?.extend_by_translates(KRONECKER_EXTENSION)?)
    }
}

fn idx(w: &Window, name: &str) -> Result<usize, CliError> {
    Ok(w.index_of(name)?)
}

pub fn run_suite(name: &str, corpora: &Path) -> Result<SuiteOutcome, CliError> {
    let &(_, description, budget) =
        SUITES.iter().find(|(n, _, _)| *n == name).ok_or_else(|| CliError::Usage(format!("unknown suite {name:?}")))?;
    let c = Corpora { dir: corpora.to_path_buf() };
    let mut checks = Checks::default();
    let start = Instant::now();
    let result = match name {
        "a2-census" => a2_census(&c, &mut checks),
        "dualnumbers" => dual_numbers(&c, &mut checks),
        "rep-finite-td" => rep_finite_td(&c, &mut checks),
        "kronecker-5" => kronecker_ranks(&c, &mut checks),
        "kronecker-6.9" => kronecker_tubes(&c, &mut checks),
        "bijection" => bijection(&c, &mut checks),
        "properties" => properties::run(&c, &mut checks),
        _ => unreachable!("suite table and dispatch agree"),
    };
    if let Err(e) = result {
        checks.check("suite ran to completion", false, e.to_string());
    }
    let elapsed = start.elapsed().as_millis();
    let budget_ms = budget.map(|s| u128::from(s) * 1000);
    if let Some(b) = budget_ms {
        checks.check(format!("runtime within {} s", b / 1000), elapsed < b, "");
    }
    let passed = checks.items.iter().all(|c| c.passed);
    Ok(SuiteOutcome {
        suite: name.to_string(),
        description: description.to_string(),
        checks: checks.items,
        elapsed_ms: elapsed,
        budget_ms,
        passed,
    })
}

/// Every assignment of submodules to objects that passes the functoriality validator.
pub(crate) fn brute_force_subfunctors(w: &Window) -> Result<Vec<Subfunctor>, CliError> {
    let subs: Vec<Vec<Subspace>> = w
        .objects()
        .iter()
        .map(|m| torsidl_lattice::all_submodules(w.algebra(), m, DEFAULT_BUDGET))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    let mut choice = vec![0usize; w.len()];
    loop {
        let values = choice.iter().enumerate().map(|(x, &c)| subs[x][c].clone()).collect();
        if let Ok(t) = Subfunctor::from_values(w, values) {
            out.push(t);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < subs[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn same_elements(a: &[Subfunctor], b: &[Subfunctor]) -> bool {
    a.len() == b.len() && a.iter().all(|t| b.contains(t))
}

/// Census of one complete window: enumeration versus the brute-force oracle, and torsion classes
/// embedded through the ideal of maps factoring through them.
fn census(w: &Window, label: &str, pairs: usize, classes: usize, checks: &mut Checks) -> Result<bool, CliError> {
    let l = enumerate_subfunctors(w, DEFAULT_BUDGET)?;
    let brute = brute_force_subfunctors(w)?;
    checks.eq(format!("{label}: enumerated ideal torsion pairs"), l.len(), pairs);
    checks.eq(format!("{label}: brute-force assignment oracle"), brute.len(), pairs);
    checks.check(format!("{label}: enumeration equals oracle"), same_elements(&l.elements, &brute), "");
    checks.check(format!("{label}: lattice is modular"), l.is_modular(), "");
    let tc = torsion_classes(w, DEFAULT_BUDGET)?;
    checks.eq(format!("{label}: torsion classes"), tc.len(), classes);
    let embedded: Vec<Subfunctor> = torsion_class_pairs(w, &tc)?.into_iter().map(|p| p.t).collect();
    checks.check(
        format!("{label}: torsion classes land in the lattice"),
        embedded.iter().all(|t| l.elements.contains(t)),
        "",
    );
    let distinct = embedded.iter().enumerate().all(|(i, t)| !embedded[..i].contains(t));
    checks.check(format!("{label}: embedding is injective"), distinct, "");
    Ok(l.is_chain())
}

fn a2_census(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    census(&c.window("a2")?, "A2", 8, 5, checks)?;
    Ok(())
}

fn dual_numbers(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    let w = c.window("dualnumbers")?;
    let chain = census(&w, "dual numbers", 4, 2, checks)?;
    checks.check("dual numbers: pairs form a chain", chain, "");
    let l = enumerate_subfunctors(&w, DEFAULT_BUDGET)?;
    checks.eq("dual numbers: m-dimension", mdim(&l), MDim::Value(0));
    let r = torsion_dimension_report(&w, &TdOptions::default())?;
    checks.eq("dual numbers: torsion dimension report", (r.value, r.exact), (Some(MDim::Value(0)), true));
    Ok(())
}

fn rep_finite_td(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    for name in ["a2", "a3", "dualnumbers"] {
        let r = torsion_dimension_report(&c.window(name)?, &TdOptions::default())?;
        checks.eq(format!("{name}: torsion dimension"), (r.value, r.exact), (Some(MDim::Value(0)), true));
    }
    Ok(())
}

fn kronecker_ranks(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    let w = c.kronecker_extended()?;
    let omega = OrdinalTag::OmegaPlus { k: 0, window_relative: true };
    for k in 1..=4usize {
        let r = rad_chain(&w, idx(&w, &format!("P{k}"))?, KRONECKER_DEPTH);
        // Nonzero maps P_i -> P_k lie exactly in rad^{k-i}; Hom(P2, P1) = 0.
        let drop = if k == 1 { 0 } else { k - 2 };
        checks.eq(format!("rad chain tag of P{k}"), r.tag, OrdinalTag::Finite(drop));
        checks.check(
            format!("rad chain of P{k} drops after {drop}"),
            r.chain[drop + 1] < r.chain[0],
            format!("{:?}", r.chain),
        );
    }
    for j in 1..=4 {
        for lambda in LAMBDAS {
            let name = format!("R{j}_{lambda}");
            checks.eq(format!("rad chain tag of {name}"), rad_chain(&w, idx(&w, &name)?, KRONECKER_DEPTH).tag, omega);
        }
        let name = format!("I{j}");
        let x = idx(&w, &name)?;
        checks.eq(format!("rad chain tag of {name}"), rad_chain(&w, x, KRONECKER_DEPTH).tag, omega);
        checks.eq(
            format!("projective rank of {name} with omega budget 2"),
            projective_rank(&w, x, KRONECKER_DEPTH, 2)?,
            OrdinalTag::OmegaPlus { k: 1, window_relative: true },
        );
    }
    Ok(())
}

/// Dimension vector of `t` at `x`, and whether the submodule is isomorphic to window object `iso`.
fn value_is(w: &Window, t: &Subfunctor, x: usize, iso: Option<usize>) -> (Vec<usize>, bool) {
    let alg = w.algebra();
    let m = w.object(x);
    let dims = m.dim_vector_of(alg, t.value(x));
    let matches = match iso {
        None => t.value(x).is_zero(),
        Some(y) => find_basis_iso(alg, &m.submodule(alg, t.value(x), "t").0, w.object(y)).is_some(),
    };
    (dims, matches)
}

fn kronecker_tubes(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    let w = c.window("kronecker")?;
    for lambda in LAMBDAS {
        let r1 = idx(&w, &format!("R1_{lambda}"))?;
        let ideal = w.ideal_of_subcategory(&[r1]);
        let gen = torsion_closure(&w, &ideal)?.t;
        let cogen = torsionfree_closure(&w, &ideal)?.t;
        let rs: Vec<usize> = (1..=4).map(|j| idx(&w, &format!("R{j}_{lambda}"))).collect::<Result<_, _>>()?;
        for j in 1..=4 {
            let rj = rs[j - 1];
            let (dims, iso) = value_is(&w, &gen, rj, Some(r1));
            checks.check(
                format!("gen side t R{j}_{lambda} = R1_{lambda}"),
                iso && dims == vec![1, 1],
                format!("{dims:?}"),
            );
            let below = (j > 1).then(|| rs[j - 2]);
            let (dims, iso) = value_is(&w, &cogen, rj, below);
            checks.check(
                format!("cogen side r R{j}_{lambda} = R{}_{lambda}", j - 1),
                iso && dims == vec![j - 1, j - 1],
                format!("{dims:?}"),
            );
        }
        let chain = diamond_power_chain(&w, &[r1], 4)?;
        for (i, t) in chain.subfunctors().into_iter().enumerate() {
            for k in 1..=4 {
                let n = (i + 1).min(k);
                let (dims, iso) = value_is(&w, t, rs[k - 1], Some(rs[n - 1]));
                checks.check(
                    format!("diamond power t_{} R{k}_{lambda} = R{n}_{lambda}", i + 1),
                    iso && dims == vec![n, n],
                    format!("{dims:?}"),
                );
            }
        }
    }
    let ext = c.kronecker_extended()?;
    let (x, y) = (idx(&ext, "P2")?, idx(&ext, "R1_0")?);
    let rows = ext.power_rows(&ext.radical_ideal(), &[x], KRONECKER_DEPTH);
    let psi = rows[KRONECKER_DEPTH][0][y]
        .basis_vectors()
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Verification("no morphism P2 -> R1_0 in the deep radical power".into()))?;
    let cert = descending_chain_certificate(&ext, x, y, &psi, 4, KRONECKER_DEPTH)?;
    checks.check(
        "strict depth-4 descending chain below P2 -> R1_0",
        cert.strict && cert.chain.len() == 5 && cert.witnesses.len() == 4,
        format!("strict {} with {} witnesses", cert.strict, cert.witnesses.len()),
    );
    Ok(())
}

fn bijection(c: &Corpora, checks: &mut Checks) -> Result<(), CliError> {
    for name in ["a2", "dualnumbers"] {
        let w = c.window(name)?;
        let l = enumerate_subfunctors(&w, DEFAULT_BUDGET)?;
        let pairs = l.elements.iter().map(|t| pair_from_subfunctor(&w, t)).collect::<Result<Vec<_>, _>>()?;
        for obj in 0..w.len() {
            let label = format!("{name} C = {}", w.object(obj).name);
            let determined: Vec<_> = pairs.iter().filter(|p| is_left_determined(&w, &p.torsion, &[obj])).collect();
            let bisubs = bisubmodule_lattice(&w, obj, DEFAULT_BUDGET)?;
            checks.eq(format!("{label}: determined ideals = bi-submodules"), determined.len(), bisubs.len());
            let values: Vec<&Subspace> = determined.iter().map(|p| p.t.value(obj)).collect();
            let injective = values.iter().enumerate().all(|(i, v)| !values[..i].contains(v));
            checks.check(format!("{label}: I -> tC is injective"), injective, "");
            if name == "a2" && w.object(obj).name == "P1" {
                checks.eq("A2 C = P1: count", (determined.len(), bisubs.len()), (3, 3));
            }
        }
    }
    Ok(())
}
