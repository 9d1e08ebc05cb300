//! Subspaces of `Q^n` held in reduced echelon form.
//!
//! The basis rows of a `Subspace` are always the reduced echelon basis, so
//! equality of subspaces is plain equality of representations.

use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::{RationalMatrix, Scalar};
use super::LinalgError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// Reduced echelon basis rows; empty for the zero subspace.
    basis: Vec<Vec<Scalar>>,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_spanning(ambient, RationalMatrix::identity(ambient).rows_vec()).unwrap()
    }

    /// Span of the given vectors.
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(LinalgError::RaggedRows);
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = RationalMatrix::from_rows(vectors)?;
        let (red, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Ok(Subspace { ambient, basis, pivots })
    }

    /// Column span of a matrix.
    pub fn column_space(m: &RationalMatrix) -> Self {
        let cols: Vec<Vec<Scalar>> = (0..m.ncols()).map(|c| m.column(c)).collect();
        Self::from_spanning(m.nrows(), cols).expect("columns share the ambient dimension")
    }

    /// Right kernel of a matrix, as a subspace of the column domain.
    pub fn kernel(m: &RationalMatrix) -> Self {
        Self::from_spanning(m.ncols(), m.kernel_basis()).expect("kernel vectors live in the domain")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Residual of `v` after eliminating all basis components; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: v.len() });
        }
        let mut res = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if res[p].is_zero() {
                continue;
            }
            let factor = res[p].clone();
            for (slot, b) in res.iter_mut().zip(row) {
                if !b.is_zero() {
                    *slot -= &factor * b;
                }
            }
        }
        Ok(res)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(|e| e.is_zero()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum of two subspaces of one ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Self::from_spanning(self.ambient, vectors)
    }

    /// Representatives of a basis of `self / sub`, each reduced against
    /// `sub` and the previously chosen ones, with leading entry 1.
    ///
    /// Errors unless `sub` is contained in `self`.
    pub fn quotient_representatives(&self, sub: &Subspace) -> Result<Vec<Vec<Scalar>>, LinalgError> {
        if !sub.is_subspace_of(self)? {
            return Err(LinalgError::ContainmentFailure);
        }
        let mut chosen = sub.clone();
        let mut reps = Vec::new();
        for row in &self.basis {
            let res = chosen.reduce(row)?;
            if res.iter().all(|e| e.is_zero()) {
                continue;
            }
            let lead = res.iter().find(|e| !e.is_zero()).unwrap().clone();
            let rep: Vec<Scalar> = res.iter().map(|e| e / &lead).collect();
            chosen = chosen.sum(&Subspace::from_spanning(self.ambient, vec![rep.clone()])?)?;
            reps.push(rep);
        }
        debug_assert_eq!(reps.len(), self.dim() - sub.dim());
        Ok(reps)
    }
}

/// Intersection via the kernel trick: rows of both bases stacked as columns.
pub fn intersection(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(LinalgError::AmbientMismatch { left: a.ambient_dim(), right: b.ambient_dim() });
    }
    let n = a.ambient_dim();
    let da = a.dim();
    let db = b.dim();
    if da == 0 || db == 0 {
        return Ok(Subspace::zero(n));
    }
    // Columns: coefficients over a's basis then b's basis; kernel rows
    // give pairs of combinations agreeing in the ambient space.
    let mut m = RationalMatrix::zero(n, da + db);
    for (j, row) in a.basis().iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = row[i].clone();
        }
    }
    for (j, row) in b.basis().iter().enumerate() {
        for i in 0..n {
            m[(i, da + j)] = -row[i].clone();
        }
    }
    let mut vectors = Vec::new();
    for k in m.kernel_basis() {
        let mut v = vec![BigRational::zero(); n];
        for (j, row) in a.basis().iter().enumerate() {
            if !k[j].is_zero() {
                for i in 0..n {
                    v[i] += &k[j] * &row[i];
                }
            }
        }
        vectors.push(v);
    }
    Subspace::from_spanning(n, vectors)
}

#[cfg(test)]
mod tests {
    use super::super::matrix::int;
    use super::*;

    fn v(entries: Vec<i64>) -> Vec<Scalar> {
        entries.into_iter().map(int).collect()
    }

    #[test]
    fn span_deduplicates_dependent_vectors() {
        let s = Subspace::from_spanning(3, vec![v(vec![1, 1, 0]), v(vec![2, 2, 0])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&v(vec![5, 5, 0])).unwrap());
        assert!(!s.contains(&v(vec![1, 0, 0])).unwrap());
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let a = Subspace::from_spanning(3, vec![v(vec![1, 0, 0]), v(vec![0, 1, 0])]).unwrap();
        let b = Subspace::from_spanning(3, vec![v(vec![0, 1, 0]), v(vec![0, 0, 1])]).unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 3);
        let i = intersection(&a, &b).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(vec![0, 1, 0])).unwrap());
    }

    #[test]
    fn quotient_representatives_have_expected_count() {
        let whole = Subspace::full(3);
        let line = Subspace::from_spanning(3, vec![v(vec![1, 1, 1])]).unwrap();
        let reps = whole.quotient_representatives(&line).unwrap();
        assert_eq!(reps.len(), 2);
        // Representatives stay independent modulo the line.
        let mut all = vec![v(vec![1, 1, 1])];
        all.extend(reps);
        assert_eq!(Subspace::from_spanning(3, all).unwrap().dim(), 3);
    }

    #[test]
    fn quotient_requires_containment() {
        let a = Subspace::from_spanning(2, vec![v(vec![1, 0])]).unwrap();
        let b = Subspace::from_spanning(2, vec![v(vec![0, 1])]).unwrap();
        assert!(matches!(
            a.quotient_representatives(&b),
            Err(LinalgError::ContainmentFailure)
        ));
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(LinalgError::AmbientMismatch { .. })));
    }
}
