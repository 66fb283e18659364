//! Quiver presentations and the finite-dimensional algebras they define.
//!
//! Paths are written in traversal order: `[a, b]` means "first `a`, then `b`".
//! The product `x * y` of basis paths is the composite `x ∘ y`, that is, `y` followed by `x`,
//! so `A e_i` is spanned by the paths starting at vertex `i`.

use crate::QuiverError;
use std::collections::{BTreeSet, HashMap};
use torsidl_linalg::{Elem, Field, Matrix};

/// Default bound on path lengths explored while closing the path basis.
pub const DEFAULT_PATH_BOUND: usize = 32;

const MAX_ENUMERATED_PATHS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: String,
}

/// A path: source, target and arrow indices in traversal order. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub dst: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A formal linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Elem, Vec<usize>)>,
}

/// User-facing presentation with labels instead of indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    /// `(source, target, label)`.
    pub arrows: Vec<(String, String, String)>,
    /// Each relation is a list of `(coefficient, path as arrow labels)`.
    pub relations: Vec<Vec<(Elem, Vec<String>)>>,
    pub path_bound: usize,
}

/// A finite-dimensional algebra `kQ/I` with its path basis and structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    path_bound: usize,
    basis: Vec<Path>,
    mult: Vec<Vec<Vec<(usize, Elem)>>>,
    radical_length: usize,
}

/// Linear combination of basis elements, sparse.
pub type Combination = Vec<(usize, Elem)>;

impl Algebra {
    /// Builds the algebra, validating admissibility and closing the path basis.
    pub fn build(p: &QuiverPresentation) -> Result<Algebra, QuiverError> {
        let mut seen = BTreeSet::new();
        for v in &p.vertices {
            if !seen.insert(v.clone()) {
                return Err(QuiverError::DuplicateLabel(v.clone()));
            }
        }
        let vidx =
            |s: &str| p.vertices.iter().position(|v| v == s).ok_or_else(|| QuiverError::UnknownVertex(s.to_string()));
        let mut arrows = Vec::new();
        let mut labels = BTreeSet::new();
        for (s, d, l) in &p.arrows {
            if !labels.insert(l.clone()) || seen.contains(l) {
                return Err(QuiverError::DuplicateLabel(l.clone()));
            }
            arrows.push(Arrow { src: vidx(s)?, dst: vidx(d)?, label: l.clone() });
        }
        let aidx =
            |s: &str| arrows.iter().position(|a| a.label == s).ok_or_else(|| QuiverError::UnknownArrow(s.to_string()));
        let mut relations = Vec::new();
        for (ri, rel) in p.relations.iter().enumerate() {
            let bad = |reason: &str| QuiverError::NonAdmissible { index: ri, reason: reason.to_string() };
            if rel.is_empty() {
                return Err(bad("empty relation"));
            }
            let mut terms = Vec::new();
            let mut ends = None;
            for (c, path) in rel {
                if path.len() < 2 {
                    return Err(bad("paths must have length at least 2"));
                }
                let idx: Vec<usize> = path.iter().map(|l| aidx(l)).collect::<Result<_, _>>()?;
                for w in idx.windows(2) {
                    if arrows[w[0]].dst != arrows[w[1]].src {
                        return Err(bad("path is not composable"));
                    }
                }
                let e = (arrows[idx[0]].src, arrows[*idx.last().unwrap()].dst);
                if *ends.get_or_insert(e) != e {
                    return Err(bad("terms are not parallel"));
                }
                if !c.is_zero() {
                    terms.push((c.clone(), idx));
                }
            }
            relations.push(Relation { terms });
        }
        let mut alg = Algebra {
            field: p.field,
            vertices: p.vertices.clone(),
            arrows,
            relations,
            path_bound: p.path_bound,
            basis: Vec::new(),
            mult: Vec::new(),
            radical_length: 0,
        };
        alg.close_basis()?;
        Ok(alg)
    }

    fn extend_paths(&self, level: &[Path]) -> Vec<Path> {
        let mut out = Vec::new();
        for p in level {
            for (ai, a) in self.arrows.iter().enumerate() {
                if a.src == p.dst {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    out.push(Path { src: p.src, dst: a.dst, arrows });
                }
            }
        }
        out
    }

    /// Finds the least `n0` with every path of length `n0` in the ideal, then selects
    /// the normal-form basis among shorter paths.
    fn close_basis(&mut self) -> Result<(), QuiverError> {
        let f = self.field;
        let nv = self.vertices.len();
        let mut levels: Vec<Vec<Path>> = vec![(0..nv).map(|v| Path { src: v, dst: v, arrows: Vec::new() }).collect()];
        for n0 in 1..=self.path_bound.max(1) {
            while levels.len() <= n0 {
                let next = self.extend_paths(levels.last().unwrap());
                levels.push(next);
            }
            let total: usize = levels.iter().map(Vec::len).sum();
            if total > MAX_ENUMERATED_PATHS {
                return Err(QuiverError::PathBoundExceeded(self.path_bound));
            }
            // Columns ordered by decreasing length so pivots land on long paths.
            let mut cols: Vec<&Path> = levels.iter().take(n0 + 1).flatten().collect();
            cols.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.cmp(a)));
            let index: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (*p, i)).collect();
            let mut rows = Vec::new();
            for rel in &self.relations {
                let minlen = rel.terms.iter().map(|t| t.1.len()).min().unwrap_or(0);
                if rel.terms.is_empty() || minlen > n0 {
                    continue;
                }
                let (rs, rd) = {
                    let t = &rel.terms[0].1;
                    (self.arrows[t[0]].src, self.arrows[*t.last().unwrap()].dst)
                };
                for a in 0..=(n0 - minlen) {
                    for u in levels[a].iter().filter(|u| u.dst == rs) {
                        for b in 0..=(n0 - minlen - a) {
                            for v in levels[b].iter().filter(|v| v.src == rd) {
                                let mut row = vec![f.zero(); cols.len()];
                                let mut any = false;
                                for (c, t) in &rel.terms {
                                    let len = a + t.len() + b;
                                    if len > n0 {
                                        continue;
                                    }
                                    let mut arrows = u.arrows.clone();
                                    arrows.extend(t);
                                    arrows.extend(&v.arrows);
                                    let path = Path { src: u.src, dst: v.dst, arrows };
                                    let j = index[&path];
                                    row[j] = f.add(&row[j], c);
                                    any = true;
                                }
                                if any {
                                    rows.push(row);
                                }
                            }
                        }
                    }
                }
            }
            let rr = Matrix::from_rows(f, cols.len(), rows).rref();
            let pivot_set: BTreeSet<usize> = rr.pivots.iter().copied().collect();
            let all_long_killed =
                cols.iter().enumerate().filter(|(_, p)| p.len() == n0).all(|(j, _)| pivot_set.contains(&j));
            if !all_long_killed {
                continue;
            }
            let mut basis: Vec<Path> = cols
                .iter()
                .enumerate()
                .filter(|(j, p)| p.len() < n0 && !pivot_set.contains(j))
                .map(|(_, p)| (*p).clone())
                .collect();
            for a in 0..self.arrows.len() {
                if n0 < 2 || !basis.iter().any(|p| p.arrows == [a]) {
                    return Err(QuiverError::NonAdmissible {
                        index: 0,
                        reason: format!("arrow {:?} vanishes in the quotient", self.arrows[a].label),
                    });
                }
            }
            basis.sort_by(|a, b| (a.len(), a.src, &a.arrows).cmp(&(b.len(), b.src, &b.arrows)));
            let bidx: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let mut normal: HashMap<Path, Combination> = HashMap::new();
            for (j, p) in cols.iter().enumerate() {
                if p.len() >= n0 {
                    continue;
                }
                if let Some(&b) = bidx.get(*p) {
                    normal.insert((*p).clone(), vec![(b, f.one())]);
                }
                if let Some(ri) = rr.pivots.iter().position(|&pc| pc == j) {
                    let row = rr.matrix.row(ri);
                    let comb = row
                        .iter()
                        .enumerate()
                        .filter(|(k, x)| *k != j && !x.is_zero())
                        .map(|(k, x)| (bidx[cols[k]], f.neg(x)))
                        .collect();
                    normal.insert((*p).clone(), comb);
                }
            }
            let nb = basis.len();
            let mut mult = vec![vec![Vec::new(); nb]; nb];
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    if y.dst != x.src || x.len() + y.len() >= n0 {
                        continue;
                    }
                    let mut arrows = y.arrows.clone();
                    arrows.extend(&x.arrows);
                    let path = Path { src: y.src, dst: x.dst, arrows };
                    mult[i][j] = normal[&path].clone();
                }
            }
            self.basis = basis;
            self.mult = mult;
            self.radical_length = n0;
            return Ok(());
        }
        Err(QuiverError::PathBoundExceeded(self.path_bound))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn path_bound(&self) -> usize {
        self.path_bound
    }

    /// The surviving paths, ordered by length, source and arrow sequence.
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Least `n` such that every path of length `n` vanishes.
    pub fn radical_length(&self) -> usize {
        self.radical_length
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Basis index of the trivial path `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.basis.iter().position(|p| p.is_trivial() && p.src == v).expect("idempotent in basis")
    }

    /// Basis index of the arrow `a`.
    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.basis.iter().position(|p| p.arrows == [a]).expect("arrow in basis")
    }

    /// Structure constants of `basis[i] * basis[j]`, that is, `basis[j]` followed by `basis[i]`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Combination {
        &self.mult[i][j]
    }

    /// Product of two elements given as dense coordinate vectors.
    pub fn mul(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.mult[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Coordinates of the unit `1 = Σ e_v`.
    pub fn unit(&self) -> Vec<Elem> {
        let f = self.field;
        let mut u = vec![f.zero(); self.dim()];
        for v in 0..self.num_vertices() {
            u[self.idempotent(v)] = f.one();
        }
        u
    }

    /// The opposite algebra: arrows reversed, relation paths read backwards.
    pub fn opposite(&self) -> Algebra {
        let p = QuiverPresentation {
            field: self.field,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| (self.vertices[a.dst].clone(), self.vertices[a.src].clone(), a.label.clone()))
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.terms
                        .iter()
                        .map(|(c, t)| (c.clone(), t.iter().rev().map(|&a| self.arrows[a].label.clone()).collect()))
                        .collect()
                })
                .collect(),
            path_bound: self.path_bound,
        };
        Algebra::build(&p).expect("opposite of an admissible presentation is admissible")
    }

    /// Human-readable name of a basis path, e.g. `e1` or `a.b`.
    pub fn path_name(&self, i: usize) -> String {
        let p = &self.basis[i];
        if p.is_trivial() {
            format!("e{}", self.vertices[p.src])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pres(
        field: Field,
        v: &[&str],
        a: &[(&str, &str, &str)],
        rel: Vec<Vec<(i64, Vec<&str>)>>,
    ) -> QuiverPresentation {
        QuiverPresentation {
            field,
            vertices: v.iter().map(|s| s.to_string()).collect(),
            arrows: a.iter().map(|(s, d, l)| (s.to_string(), d.to_string(), l.to_string())).collect(),
            relations: rel
                .into_iter()
                .map(|r| {
                    r.into_iter().map(|(c, p)| (field.from_i64(c), p.iter().map(|s| s.to_string()).collect())).collect()
                })
                .collect(),
            path_bound: DEFAULT_PATH_BOUND,
        }
    }

    #[test]
    fn a2_has_three_paths() {
        let a = Algebra::build(&pres(Field::Rationals, &["1", "2"], &[("1", "2", "a")], vec![])).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.path_name(2), "a");
    }

    #[test]
    fn dual_numbers_have_dimension_two() {
        let a = Algebra::build(&pres(Field::Rationals, &["1"], &[("1", "1", "x")], vec![vec![(1, vec!["x", "x"])]]))
            .unwrap();
        assert_eq!(a.dim(), 2);
        let x = a.arrow_basis_index(0);
        assert!(a.mul_basis(x, x).is_empty());
    }

    #[test]
    fn kronecker_has_dimension_four() {
        let a =
            Algebra::build(&pres(Field::Rationals, &["1", "2"], &[("1", "2", "a"), ("1", "2", "b")], vec![])).unwrap();
        assert_eq!(a.dim(), 4);
    }

    #[test]
    fn free_loop_exceeds_bound() {
        let mut p = pres(Field::Rationals, &["1"], &[("1", "1", "x")], vec![]);
        p.path_bound = 8;
        assert_eq!(Algebra::build(&p), Err(QuiverError::PathBoundExceeded(8)));
    }

    #[test]
    fn short_relation_rejected() {
        let p = pres(Field::Rationals, &["1", "2"], &[("1", "2", "a")], vec![vec![(1, vec!["a"])]]);
        assert!(matches!(Algebra::build(&p), Err(QuiverError::NonAdmissible { .. })));
    }

    #[test]
    fn commutative_square_relation() {
        let p = pres(
            Field::Rationals,
            &["1", "2", "3", "4"],
            &[("1", "2", "a"), ("2", "4", "b"), ("1", "3", "c"), ("3", "4", "d")],
            vec![vec![(1, vec!["a", "b"]), (-1, vec!["c", "d"])]],
        );
        let a = Algebra::build(&p).unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
        let ab = a.mul_basis(a.arrow_basis_index(1), a.arrow_basis_index(0)).clone();
        let cd = a.mul_basis(a.arrow_basis_index(3), a.arrow_basis_index(2)).clone();
        assert_eq!(ab, cd);
    }

    #[test]
    fn multiplication_is_associative() {
        let p = pres(Field::Rationals, &["1", "2", "3"], &[("1", "2", "a"), ("2", "3", "b")], vec![]);
        let a = Algebra::build(&p).unwrap();
        let n = a.dim();
        let unit = |i: usize| {
            let mut v = vec![a.field().zero(); n];
            v[i] = a.field().one();
            v
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l = a.mul(&a.mul(&unit(i), &unit(j)), &unit(k));
                    let r = a.mul(&unit(i), &a.mul(&unit(j), &unit(k)));
                    assert_eq!(l, r);
                }
            }
        }
        assert_eq!(a.mul(&a.unit(), &unit(3)), unit(3));
    }
}
