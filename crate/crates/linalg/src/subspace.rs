use crate::{Elem, Field, LinalgError, Matrix};

/// A subspace of `F^n` stored by its canonical reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn from_vectors(field: Field, ambient: usize, vecs: Vec<Vec<Elem>>) -> Subspace {
        let m = Matrix::from_rows(field, ambient, vecs);
        let rr = m.rref();
        let basis = rr.matrix.block(0, rr.rank, 0, ambient);
        Subspace { ambient, basis, pivots: rr.pivots }
    }

    /// The coordinate line spanned by the `i`-th standard vector.
    pub fn unit(field: Field, ambient: usize, i: usize) -> Subspace {
        let mut v = vec![field.zero(); ambient];
        v[i] = field.one();
        Subspace::from_vectors(field, ambient, vec![v])
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis (rows in reduced row-echelon form).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Elem>> {
        self.basis.row_list()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { left: self.ambient, right: other.ambient });
        }
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch {
                left: self.field().to_string(),
                right: other.field().to_string(),
            });
        }
        Ok(())
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field();
        let coords: Vec<Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    r[j] = f.sub(&r[j], &f.mul(c, b));
                }
            }
        }
        r.iter().all(Elem::is_zero).then_some(coords)
    }

    /// Linear combination of basis rows with the given coordinates.
    pub fn combine(&self, coords: &[Elem]) -> Vec<Elem> {
        assert_eq!(coords.len(), self.dim());
        let f = self.field();
        let mut v = vec![f.zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] = f.add(&v[j], &f.mul(c, b));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn try_contains(&self, v: &[Elem]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch { left: self.ambient, right: v.len() });
        }
        Ok(self.contains(v))
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> bool {
        self.try_leq(other).expect("subspace_leq on mismatched spaces")
    }

    pub fn try_leq(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok((0..self.dim()).all(|i| other.contains(self.basis.row(i))))
    }

    /// Reduces `v` modulo the subspace; the result is zero at every pivot column.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    r[j] = f.sub(&r[j], &f.mul(&c, b));
                }
            }
        }
        r
    }

    /// Zassenhaus sum and intersection in one elimination pass.
    pub fn sum_and_intersect(&self, other: &Subspace) -> Result<(Subspace, Subspace), LinalgError> {
        self.check(other)?;
        let f = self.field();
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for i in 0..self.dim() {
            let r = self.basis.row(i);
            rows.push(r.iter().chain(r.iter()).cloned().collect::<Vec<_>>());
        }
        for i in 0..other.dim() {
            let r = other.basis.row(i);
            rows.push(r.iter().cloned().chain(std::iter::repeat_n(f.zero(), n)).collect());
        }
        let rr = Matrix::from_rows(f, 2 * n, rows).rref();
        let mut sum = Vec::new();
        let mut meet = Vec::new();
        for (i, &p) in rr.pivots.iter().enumerate() {
            let row = rr.matrix.row(i);
            if p < n {
                sum.push(row[..n].to_vec());
            } else {
                meet.push(row[n..].to_vec());
            }
        }
        Ok((Subspace::from_vectors(f, n, sum), Subspace::from_vectors(f, n, meet)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check(other).expect("sum of mismatched subspaces");
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::from_vectors(self.field(), self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.sum_and_intersect(other).expect("intersection of mismatched subspaces").1
    }

    /// Adds the span of further vectors.
    pub fn extend(&self, vecs: Vec<Vec<Elem>>) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(vecs);
        Subspace::from_vectors(self.field(), self.ambient, rows)
    }

    /// Image under the linear map `m : F^ambient -> F^rows(m)`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let vecs = (0..self.dim()).map(|i| m.mul_vec(self.basis.row(i))).collect();
        Subspace::from_vectors(self.field(), m.rows(), vecs)
    }

    /// Preimage `{v : m v ∈ self}` under `m : F^cols(m) -> F^ambient`.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        self.annihilator_matrix().mul(m).kernel()
    }

    /// Matrix whose kernel is exactly this subspace.
    pub fn annihilator_matrix(&self) -> Matrix {
        let ann = self.basis.kernel();
        ann.basis.clone()
    }

    /// The orthogonal complement under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Standard-basis vectors at non-pivot columns, spanning a canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn v(xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn sum_intersect_trivial_cases() {
        let full = Subspace::full(q(), 3);
        let zero = Subspace::zero(q(), 3);
        assert_eq!(full.sum_and_intersect(&zero).unwrap(), (full.clone(), zero.clone()));
        assert_eq!(full.sum_and_intersect(&full).unwrap(), (full.clone(), full.clone()));
    }

    #[test]
    fn sum_intersect_two_lines() {
        let a = Subspace::from_vectors(q(), 2, vec![v(&[1, 0])]);
        let b = Subspace::from_vectors(q(), 2, vec![v(&[1, 1])]);
        let (s, i) = a.sum_and_intersect(&b).unwrap();
        assert!(s.is_full());
        assert!(i.is_zero());
    }

    #[test]
    fn mismatched_ambient_errors() {
        let a = Subspace::zero(q(), 2);
        let b = Subspace::zero(q(), 3);
        assert!(a.sum_and_intersect(&b).is_err());
        assert!(a.try_leq(&b).is_err());
        assert!(a.try_contains(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn membership_and_order() {
        let line = Subspace::from_vectors(q(), 2, vec![v(&[1, 2])]);
        assert!(line.contains(&v(&[2, 4])));
        assert!(!line.contains(&v(&[2, 3])));
        assert!(Subspace::zero(q(), 2).contains(&v(&[0, 0])));
        assert!(line.leq(&line));
        assert_eq!(line.coordinates(&v(&[3, 6])), Some(v(&[3])));
    }

    #[test]
    fn preimage_and_annihilator() {
        let line = Subspace::from_vectors(q(), 2, vec![v(&[1, 0])]);
        let m = Matrix::from_i64(q(), 2, 2, &[0, 1, 1, 0]);
        let pre = line.preimage_under(&m);
        assert_eq!(pre, Subspace::from_vectors(q(), 2, vec![v(&[0, 1])]));
        assert_eq!(line.annihilator(), Subspace::from_vectors(q(), 2, vec![v(&[0, 1])]));
    }
}
