//! Serializable algebra and module specifications (JSON or TOML).

use crate::{Algebra, ModuleRep, QuiverError, QuiverPresentation, DEFAULT_PATH_BOUND};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use torsidl_linalg::{Field, Matrix};

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, QuiverError> {
        match self {
            FieldSpec::Named(s) if s == "Q" => Ok(Field::Rationals),
            FieldSpec::Named(s) => Err(QuiverError::Spec(format!("unknown field {s:?}; use \"Q\" or {{\"Fp\": p}}"))),
            FieldSpec::Prime { fp } => Ok(Field::prime(*fp)?),
        }
    }

    pub fn from_field(f: Field) -> FieldSpec {
        match f {
            Field::Rationals => FieldSpec::Named("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { fp: p as u64 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub src: String,
    pub dst: String,
    pub label: String,
}

/// A coefficient written as a string (`"a/b"`) or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Int(i) => i.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: Scalar,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTerm>>,
    #[serde(default = "default_path_bound")]
    pub path_bound: usize,
}

fn default_path_bound() -> usize {
    DEFAULT_PATH_BOUND
}

/// Matrix entries, either as nested rows or flat in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Rows(Vec<Vec<Scalar>>),
    Flat(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleSpec {
    pub name: String,
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, MatrixSpec>,
}

/// Parses JSON, falling back to TOML when the text does not look like JSON.
pub fn parse_document<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, QuiverError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        serde_json::from_str(text).map_err(|e| QuiverError::Spec(e.to_string()))
    } else {
        toml::from_str(text).map_err(|e| QuiverError::Spec(e.to_string()))
    }
}

impl AlgebraSpec {
    pub fn presentation(&self) -> Result<QuiverPresentation, QuiverError> {
        let field = self.field.to_field()?;
        let relations = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| Ok((field.parse(&t.coeff.text())?, t.path.clone())))
                    .collect::<Result<Vec<_>, QuiverError>>()
            })
            .collect::<Result<_, _>>()?;
        Ok(QuiverPresentation {
            field,
            vertices: self.vertices.clone(),
            arrows: self.arrows.iter().map(|a| (a.src.clone(), a.dst.clone(), a.label.clone())).collect(),
            relations,
            path_bound: self.path_bound,
        })
    }

    pub fn build(&self) -> Result<Algebra, QuiverError> {
        Algebra::build(&self.presentation()?)
    }
}

impl ModuleSpec {
    /// Converts to a validated representation of `alg`.
    pub fn to_module(&self, alg: &Algebra) -> Result<ModuleRep, QuiverError> {
        let f = alg.field();
        let bad = |reason: String| QuiverError::InvalidModule { module: self.name.clone(), reason };
        for v in self.dims.keys() {
            if alg.vertex_index(v).is_none() {
                return Err(QuiverError::UnknownVertex(v.clone()));
            }
        }
        for a in self.maps.keys() {
            if alg.arrow_index(a).is_none() {
                return Err(QuiverError::UnknownArrow(a.clone()));
            }
        }
        let dims: Vec<usize> = alg.vertices().iter().map(|v| self.dims.get(v).copied().unwrap_or(0)).collect();
        let mut maps = Vec::new();
        for a in alg.arrows() {
            let (r, c) = (dims[a.dst], dims[a.src]);
            let entries: Vec<Scalar> = match self.maps.get(&a.label) {
                None if r * c == 0 => Vec::new(),
                None => return Err(bad(format!("missing map for arrow {:?}", a.label))),
                Some(MatrixSpec::Flat(v)) if v.is_empty() && r * c == 0 => Vec::new(),
                Some(MatrixSpec::Flat(v)) => v.clone(),
                Some(MatrixSpec::Rows(rows)) => {
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(bad(format!("arrow {:?} needs a {r}x{c} matrix", a.label)));
                    }
                    rows.concat()
                }
            };
            if entries.len() != r * c {
                return Err(bad(format!("arrow {:?} needs {} entries, got {}", a.label, r * c, entries.len())));
            }
            let elems = entries.iter().map(|s| f.parse(&s.text())).collect::<Result<Vec<_>, _>>()?;
            let rows = (0..r).map(|i| elems[i * c..(i + 1) * c].to_vec()).collect();
            maps.push(Matrix::from_rows(f, c, rows));
        }
        let m = ModuleRep { name: self.name.clone(), dims, maps };
        m.validate(alg)?;
        Ok(m)
    }

    /// The spec of an existing module with nested string rows.
    pub fn from_module(alg: &Algebra, m: &ModuleRep) -> ModuleSpec {
        let dims = alg.vertices().iter().cloned().zip(m.dims.iter().copied()).collect();
        let maps = alg
            .arrows()
            .iter()
            .zip(&m.maps)
            .map(|(a, mat)| {
                let rows = (0..mat.rows())
                    .map(|i| (0..mat.cols()).map(|j| Scalar::Text(mat.get(i, j).to_string())).collect())
                    .collect();
                (a.label.clone(), MatrixSpec::Rows(rows))
            })
            .collect();
        ModuleSpec { name: m.name.clone(), dims, maps }
    }
}

/// A bundled corpus: an algebra file, module files in window order, and metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub name: String,
    pub algebra: String,
    pub modules: Vec<String>,
    pub complete: bool,
    /// Objects known to be preprojective, used to cross-check rank computations.
    #[serde(default)]
    pub preprojective: Vec<String>,
}

/// A loaded corpus.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub manifest: CorpusManifest,
    pub algebra_spec: AlgebraSpec,
    pub module_specs: Vec<ModuleSpec>,
    pub algebra: Algebra,
    pub modules: Vec<ModuleRep>,
}

fn read(path: &std::path::Path) -> Result<String, QuiverError> {
    std::fs::read_to_string(path).map_err(|e| QuiverError::Spec(format!("{}: {e}", path.display())))
}

/// Loads `corpus.json` from `dir` together with the files it references.
pub fn load_corpus(dir: &std::path::Path) -> Result<Corpus, QuiverError> {
    let manifest: CorpusManifest = parse_document(&read(&dir.join("corpus.json"))?)?;
    let algebra_spec: AlgebraSpec = parse_document(&read(&dir.join(&manifest.algebra))?)?;
    let algebra = algebra_spec.build()?;
    let module_specs: Vec<ModuleSpec> =
        manifest.modules.iter().map(|f| parse_document(&read(&dir.join(f))?)).collect::<Result<_, _>>()?;
    let modules = module_specs.iter().map(|s| s.to_module(&algebra)).collect::<Result<_, _>>()?;
    Ok(Corpus { manifest, algebra_spec, module_specs, algebra, modules })
}
