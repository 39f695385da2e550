use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, rref, solve_linear, Matrix, Rational, Vector};

/// A linear subspace of 𝕂ⁿ stored by its reduced row-echelon basis.
///
/// The representation is canonical: two `Subspace`s are equal exactly when
/// they span the same space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| crate::linalg::unit_vector(ambient, i)))
            .expect("unit vectors have the ambient length")
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        for v in &rows {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
        }
        if rows.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let (red, pivots) = rref(&Matrix::from_rows(rows)?);
        let basis = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; these index the canonical complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its component along the pivot directions; zero iff `v ∈ self`.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                crate::linalg::axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && is_zero_vector(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Matrix (k × n) of the projection 𝕂ⁿ → 𝕂ⁿ/self onto complement coordinates.
    pub fn quotient_map(&self) -> Matrix {
        let comp = self.complement_coordinates();
        let mut q = Matrix::zeros(comp.len(), self.ambient);
        for col in 0..self.ambient {
            let r = self.reduce(&crate::linalg::unit_vector(self.ambient, col));
            for (row, &c) in comp.iter().enumerate() {
                q.set(row, col, r[c].clone());
            }
        }
        q
    }
}

/// Coordinates of `v` with respect to an arbitrary independent family.
pub fn coordinates_in(family: &[Vector], v: &[Rational]) -> Result<Option<Vector>> {
    if family.is_empty() {
        return Ok(if is_zero_vector(v) { Some(Vec::new()) } else { None });
    }
    let m = Matrix::from_columns(v.len(), family)?;
    solve_linear(&m, v)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &Matrix) -> Result<Option<Matrix>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        match solve_linear(m, &crate::linalg::unit_vector(n, i))? {
            Some(c) => cols.push(c),
            None => return Ok(None),
        }
    }
    if n == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    Matrix::from_columns(n, &cols).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit_vector};

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(3, vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(0)]]).unwrap();
        let b = Subspace::span(3, vec![unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.complement_coordinates(), vec![2]);
        assert!(a.contains(&[int(5), int(-2), int(0)]));
        assert!(!a.contains(&unit_vector(3, 2)));
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let s = Subspace::span(3, vec![vec![int(1), int(2), int(0)]]).unwrap();
        let q = s.quotient_map();
        assert_eq!(q.rows(), 2);
        assert!(is_zero_vector(&q.mul_vec(&[int(1), int(2), int(0)]).unwrap()));
        assert_eq!(q.mul_vec(&unit_vector(3, 1)).unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(inverse(&Matrix::from_i64(&[&[1, 2], &[2, 4]])).unwrap(), None);
    }
}
