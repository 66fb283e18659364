//! Two-sided ideals on a window, their lattice operations, products and powers.

use crate::{SpectroidError, Window};
use rayon::prelude::*;
use torsidl_linalg::{Elem, Subspace};
use torsidl_quiver::Morphism;

/// Default iteration budget for transfinite power stabilization.
pub const DEFAULT_STABILIZATION_BUDGET: usize = 64;

/// An ideal given by one subspace of Hom coordinates per ordered object pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    window: String,
    /// `pieces[x][y] ⊆ Hom(X, Y)`.
    pieces: Vec<Vec<Subspace>>,
}

impl Ideal {
    pub fn from_pieces(w: &Window, pieces: Vec<Vec<Subspace>>) -> Ideal {
        Ideal { window: w.id().to_string(), pieces }
    }

    pub fn piece(&self, x: usize, y: usize) -> &Subspace {
        &self.pieces[x][y]
    }

    pub fn pieces(&self) -> &[Vec<Subspace>] {
        &self.pieces
    }

    pub fn window_id(&self) -> &str {
        &self.window
    }

    /// `dims[x][y] = dim I(X, Y)`.
    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.pieces.iter().map(|r| r.iter().map(Subspace::dim).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().flatten().all(Subspace::is_zero)
    }

    pub fn check_window(&self, w: &Window) -> Result<(), SpectroidError> {
        if self.window == w.id() {
            Ok(())
        } else {
            Err(SpectroidError::WindowMismatch)
        }
    }

    /// Membership of a morphism `X -> Y`.
    pub fn contains(&self, w: &Window, x: usize, y: usize, f: &Morphism) -> Result<bool, SpectroidError> {
        self.check_window(w)?;
        Ok(self.pieces[x][y].contains(&w.try_coords(x, y, f)?))
    }

    /// Membership of coordinates in `Hom(X, Y)`.
    pub fn contains_coords(&self, x: usize, y: usize, c: &[Elem]) -> bool {
        self.pieces[x][y].contains(c)
    }

    /// Objects whose identity lies in the ideal.
    pub fn ob(&self, w: &Window) -> Vec<usize> {
        (0..w.len()).filter(|&x| self.pieces[x][x].contains(&w.identity_coords(x))).collect()
    }

    /// Pieces at the regular module: `I(A, X) = ⊕_v I(P(v), X)`.
    pub fn at_regular(&self, w: &Window, x: usize) -> Vec<&Subspace> {
        w.regular().iter().map(|&p| &self.pieces[p][x]).collect()
    }

    /// `dim I(A, X)`.
    pub fn regular_dim(&self, w: &Window, x: usize) -> usize {
        self.at_regular(w, x).iter().map(|s| s.dim()).sum()
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect()
}

fn assemble(w: &Window, flat: Vec<Subspace>) -> Ideal {
    let n = w.len();
    let pieces = if n == 0 { Vec::new() } else { flat.chunks(n).map(<[Subspace]>::to_vec).collect() };
    Ideal::from_pieces(w, pieces)
}

impl Window {
    pub fn zero_ideal(&self) -> Ideal {
        assemble(
            self,
            all_pairs(self.len()).iter().map(|&(x, y)| Subspace::zero(self.field(), self.hom_dim(x, y))).collect(),
        )
    }

    pub fn unit_ideal(&self) -> Ideal {
        assemble(
            self,
            all_pairs(self.len()).iter().map(|&(x, y)| Subspace::full(self.field(), self.hom_dim(x, y))).collect(),
        )
    }

    /// `rad(X, Y)`: all of Hom for `X ≠ Y`, the Jacobson radical of `End(X)` on the diagonal.
    pub fn radical_ideal(&self) -> Ideal {
        assemble(
            self,
            all_pairs(self.len())
                .iter()
                .map(|&(x, y)| {
                    if x == y {
                        self.end_radical(x).clone()
                    } else {
                        Subspace::full(self.field(), self.hom_dim(x, y))
                    }
                })
                .collect(),
        )
    }

    /// `Σ_Y I2(Y, Z) ∘ I1(X, Y)` with intermediates from the window.
    pub fn ideal_product(&self, i2: &Ideal, i1: &Ideal) -> Result<Ideal, SpectroidError> {
        i2.check_window(self)?;
        i1.check_window(self)?;
        let n = self.len();
        let flat = all_pairs(n)
            .par_iter()
            .map(|&(x, z)| {
                let mut acc = Subspace::zero(self.field(), self.hom_dim(x, z));
                for y in 0..n {
                    acc = acc.sum(&self.compose_spaces(x, y, z, i2.piece(y, z), i1.piece(x, y)));
                }
                acc
            })
            .collect();
        Ok(assemble(self, flat))
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn ideal_power(&self, i: &Ideal, n: usize) -> Result<Ideal, SpectroidError> {
        let mut acc = self.unit_ideal();
        for _ in 0..n {
            acc = self.ideal_product(&acc, i)?;
        }
        Ok(acc)
    }

    /// Iterates `I ⊇ I^2 ⊇ ...` (for `I ⊆ rad`) until the chain stabilizes; returns the stable
    /// value and the first exponent at which it is reached.
    pub fn omega_power(&self, i: &Ideal, budget: usize) -> Result<(Ideal, usize), SpectroidError> {
        let mut cur = i.clone();
        for step in 1..=budget.max(1) {
            let next = self.ideal_product(&cur, i)?;
            let next = self.ideal_meet(&next, &cur)?;
            if next == cur {
                return Ok((cur, step));
            }
            cur = next;
        }
        Ok((cur, budget))
    }

    /// Rows of the powers `I^k(X, -)` for `X` in `sources` and `0 ≤ k ≤ n`, indexed `[k][source][Y]`.
    pub fn power_rows(&self, i: &Ideal, sources: &[usize], n: usize) -> Vec<Vec<Vec<Subspace>>> {
        let m = self.len();
        let mut out = vec![sources
            .iter()
            .map(|&x| (0..m).map(|y| Subspace::full(self.field(), self.hom_dim(x, y))).collect())
            .collect::<Vec<Vec<Subspace>>>()];
        for _ in 0..n {
            let prev = out.last().unwrap();
            let next = sources
                .par_iter()
                .enumerate()
                .map(|(s, &x)| {
                    (0..m)
                        .map(|z| {
                            let mut acc = Subspace::zero(self.field(), self.hom_dim(x, z));
                            for y in 0..m {
                                acc = acc.sum(&self.compose_spaces(x, y, z, i.piece(y, z), &prev[s][y]));
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            out.push(next);
        }
        out
    }

    /// Columns of the powers `I^k(-, Z)` for `Z` in `targets` and `0 ≤ k ≤ n`, indexed `[k][target][Y]`.
    pub fn power_columns(&self, i: &Ideal, targets: &[usize], n: usize) -> Vec<Vec<Vec<Subspace>>> {
        let m = self.len();
        let mut out = vec![targets
            .iter()
            .map(|&z| (0..m).map(|y| Subspace::full(self.field(), self.hom_dim(y, z))).collect())
            .collect::<Vec<Vec<Subspace>>>()];
        for _ in 0..n {
            let prev = out.last().unwrap();
            let next = targets
                .par_iter()
                .enumerate()
                .map(|(t, &z)| {
                    (0..m)
                        .map(|y| {
                            let mut acc = Subspace::zero(self.field(), self.hom_dim(y, z));
                            for u in 0..m {
                                acc = acc.sum(&self.compose_spaces(y, u, z, &prev[t][u], i.piece(y, u)));
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            out.push(next);
        }
        out
    }

    /// Smallest ideal containing the given pieces: `Hom ∘ G ∘ Hom` in two passes.
    pub fn ideal_closure(&self, gens: &[Vec<Subspace>]) -> Ideal {
        let n = self.len();
        let right: Vec<Subspace> = all_pairs(n)
            .par_iter()
            .map(|&(x, v)| {
                let mut acc = Subspace::zero(self.field(), self.hom_dim(x, v));
                for u in 0..n {
                    let all = Subspace::full(self.field(), self.hom_dim(x, u));
                    acc = acc.sum(&self.compose_spaces(x, u, v, &gens[u][v], &all));
                }
                acc
            })
            .collect();
        let flat = all_pairs(n)
            .par_iter()
            .map(|&(x, y)| {
                let mut acc = Subspace::zero(self.field(), self.hom_dim(x, y));
                for v in 0..n {
                    let all = Subspace::full(self.field(), self.hom_dim(v, y));
                    acc = acc.sum(&self.compose_spaces(x, v, y, &all, &right[x * n + v]));
                }
                acc
            })
            .collect();
        assemble(self, flat)
    }

    /// The ideal generated by explicit morphisms `(X, Y, f)`.
    pub fn ideal_from_generators(&self, gens: &[(usize, usize, Morphism)]) -> Result<Ideal, SpectroidError> {
        let n = self.len();
        let mut vecs: Vec<Vec<Vec<Vec<Elem>>>> = vec![vec![Vec::new(); n]; n];
        for (x, y, f) in gens {
            if *x >= n || *y >= n {
                return Err(SpectroidError::ForeignMorphism(format!("{x} -> {y}")));
            }
            vecs[*x][*y].push(self.try_coords(*x, *y, f)?);
        }
        let pieces: Vec<Vec<Subspace>> = (0..n)
            .map(|x| {
                (0..n).map(|y| Subspace::from_vectors(self.field(), self.hom_dim(x, y), vecs[x][y].clone())).collect()
            })
            .collect();
        Ok(self.ideal_closure(&pieces))
    }

    /// `⟨C⟩`: morphisms factoring through a sum of objects in `objs`.
    pub fn ideal_of_subcategory(&self, objs: &[usize]) -> Ideal {
        let n = self.len();
        let flat = all_pairs(n)
            .par_iter()
            .map(|&(x, y)| {
                let mut acc = Subspace::zero(self.field(), self.hom_dim(x, y));
                for &c in objs {
                    let a = Subspace::full(self.field(), self.hom_dim(x, c));
                    let b = Subspace::full(self.field(), self.hom_dim(c, y));
                    acc = acc.sum(&self.compose_spaces(x, c, y, &b, &a));
                }
                acc
            })
            .collect();
        assemble(self, flat)
    }

    pub fn ideal_meet(&self, a: &Ideal, b: &Ideal) -> Result<Ideal, SpectroidError> {
        a.check_window(self)?;
        b.check_window(self)?;
        Ok(assemble(self, all_pairs(self.len()).iter().map(|&(x, y)| a.piece(x, y).intersect(b.piece(x, y))).collect()))
    }

    pub fn ideal_join(&self, a: &Ideal, b: &Ideal) -> Result<Ideal, SpectroidError> {
        a.check_window(self)?;
        b.check_window(self)?;
        Ok(assemble(self, all_pairs(self.len()).iter().map(|&(x, y)| a.piece(x, y).sum(b.piece(x, y))).collect()))
    }

    pub fn ideal_leq(&self, a: &Ideal, b: &Ideal) -> Result<bool, SpectroidError> {
        a.check_window(self)?;
        b.check_window(self)?;
        Ok(all_pairs(self.len()).iter().all(|&(x, y)| a.piece(x, y).leq(b.piece(x, y))))
    }

    /// Two-sided closure check on basis elements; returns the first violating pair if any.
    pub fn ideal_violation(&self, i: &Ideal) -> Option<(usize, usize)> {
        let n = self.len();
        for (x, y) in all_pairs(n) {
            for z in 0..n {
                let all_yz = Subspace::full(self.field(), self.hom_dim(y, z));
                if !self.compose_spaces(x, y, z, &all_yz, i.piece(x, y)).leq(i.piece(x, z)) {
                    return Some((x, z));
                }
                let all_zx = Subspace::full(self.field(), self.hom_dim(z, x));
                if !self.compose_spaces(z, x, y, i.piece(x, y), &all_zx).leq(i.piece(z, y)) {
                    return Some((z, y));
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, i: &Ideal) -> bool {
        self.ideal_violation(i).is_none()
    }
}
