//! Finite lattices given by their elements and a partial order, with meet and join tables.

use crate::LatticeError;
use serde::{Deserialize, Serialize};

const FULL_MODULARITY_CHECK: usize = 200;
const MODULARITY_SAMPLES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice<T> {
    pub elements: Vec<T>,
    /// `leq[i][j]` iff `elements[i] ≤ elements[j]`.
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

/// The `m`-dimension of a lattice: `-1` for a singleton, otherwise the number of collapse steps
/// after which one element remains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MDim {
    Value(i64),
    /// Collapsing stopped making progress before reaching a single element.
    Undefined,
}

impl<T> FiniteLattice<T> {
    /// Builds the tables from an order relation, failing if some pair lacks a meet or a join.
    pub fn from_order(elements: Vec<T>, le: impl Fn(&T, &T) -> bool) -> Result<Self, LatticeError> {
        let n = elements.len();
        let leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| le(&elements[i], &elements[j])).collect()).collect();
        Self::from_matrix(elements, leq)
    }

    pub fn from_matrix(elements: Vec<T>, leq: Vec<Vec<bool>>) -> Result<Self, LatticeError> {
        let n = elements.len();
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let lower: Vec<usize> = (0..n).filter(|&k| leq[k][i] && leq[k][j]).collect();
                let glb = lower.iter().copied().find(|&k| lower.iter().all(|&l| leq[l][k]));
                let upper: Vec<usize> = (0..n).filter(|&k| leq[i][k] && leq[j][k]).collect();
                let lub = upper.iter().copied().find(|&k| upper.iter().all(|&l| leq[k][l]));
                let m = glb.ok_or(LatticeError::NotALattice(i, j, "meet"))?;
                let s = lub.ok_or(LatticeError::NotALattice(i, j, "join"))?;
                meet[i][j] = m;
                meet[j][i] = m;
                join[i][j] = s;
                join[j][i] = s;
            }
        }
        Ok(FiniteLattice { elements, leq, meet, join })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j])).expect("a lattice has a least element")
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i])).expect("a lattice has a greatest element")
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.leq[i][j] || self.leq[j][i]))
    }

    /// Covering pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Length of the longest chain in `[a, b]`, or `None` if `a ≰ b`.
    pub fn interval_length(&self, a: usize, b: usize) -> Option<usize> {
        if !self.leq[a][b] {
            return None;
        }
        let n = self.len();
        let mut members: Vec<usize> = (0..n).filter(|&k| self.leq[a][k] && self.leq[k][b]).collect();
        // A linear extension: elements with fewer predecessors first.
        members.sort_by_key(|&k| (0..n).filter(|&l| self.leq[l][k]).count());
        let mut best = vec![0usize; n];
        for (pos, &k) in members.iter().enumerate() {
            for &l in &members[..pos] {
                if l != k && self.leq[l][k] {
                    best[k] = best[k].max(best[l] + 1);
                }
            }
        }
        Some(best[b])
    }

    /// Checks `a ≤ c ⇒ a ∨ (b ∧ c) = (a ∨ b) ∧ c` on all triples for small lattices and on a
    /// deterministic sample otherwise. Returns a violating triple if found.
    pub fn modularity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let check = |a: usize, b: usize, c: usize| {
            self.leq[a][c] && self.join[a][self.meet[b][c]] != self.meet[self.join[a][b]][c]
        };
        if n <= FULL_MODULARITY_CHECK {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if check(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            return None;
        }
        let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        (0..MODULARITY_SAMPLES).map(|_| (next(), next(), next())).find(|&(a, b, c)| check(a, b, c))
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_violation().is_none()
    }

    /// Quotient by the smallest lattice congruence identifying `a ≤ b` whenever
    /// `finite(self, a, b)` holds. Returns the class of each element and the quotient.
    pub fn collapse(&self, finite: impl Fn(&Self, usize, usize) -> bool) -> (Vec<usize>, FiniteLattice<usize>) {
        let n = self.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| -> bool {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra == rb {
                return false;
            }
            p[ra.max(rb)] = ra.min(rb);
            true
        };
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && finite(self, a, b) {
                    union(&mut parent, a, b);
                }
            }
        }
        // Close under compatibility with meets and joins.
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    if a < b && find(&mut parent, a) == find(&mut parent, b) {
                        for c in 0..n {
                            changed |= union(&mut parent, self.join[a][c], self.join[b][c]);
                            changed |= union(&mut parent, self.meet[a][c], self.meet[b][c]);
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        let mut reps: Vec<usize> = roots.clone();
        reps.sort_unstable();
        reps.dedup();
        let class: Vec<usize> = roots.iter().map(|r| reps.binary_search(r).unwrap()).collect();
        let leq: Vec<Vec<bool>> =
            reps.iter().map(|&a| reps.iter().map(|&b| roots[self.join[a][b]] == roots[b]).collect()).collect();
        let q = FiniteLattice::from_matrix(reps.clone(), leq).expect("a quotient of a lattice is a lattice");
        (class, q)
    }
}

/// `m`-dimension by iterated collapse of intervals of finite length.
pub fn mdim<T>(l: &FiniteLattice<T>) -> MDim {
    if l.len() <= 1 {
        return MDim::Value(-1);
    }
    let finite = |l: &FiniteLattice<usize>, a: usize, b: usize| l.interval_length(a, b).is_some();
    let (_, mut cur) = l.collapse(|l, a, b| l.interval_length(a, b).is_some());
    let mut alpha = 0;
    while cur.len() > 1 {
        let (_, next) = cur.collapse(finite);
        if next.len() == cur.len() {
            return MDim::Undefined;
        }
        cur = next;
        alpha += 1;
    }
    MDim::Value(alpha)
}
