//! Subspaces of a fixed coordinate space, kept in a canonical form.
//!
//! Invariant: the stored basis is the reduced row echelon form of any spanning
//! set, with zero rows dropped. Two subspaces are equal exactly when their
//! stored bases are equal component-wise, so `==` is a complete equality test
//! and needs no further normalisation.

use crate::error::{AlgError, Result};
use crate::field::{FieldTower, Scalar};
use crate::matrix::{vec_ops, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldTower,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldTower) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::zeros(0, ambient, field),
        }
    }

    pub fn full(ambient: usize, field: FieldTower) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(ambient, field),
        }
    }

    /// Span of the given vectors.
    pub fn from_rows(ambient: usize, field: FieldTower, rows: Vec<Vec<Scalar>>) -> Result<Subspace> {
        let m = Matrix::from_rows(rows, ambient, field)?;
        Ok(Subspace::from_matrix(&m))
    }

    /// Span of the rows of a matrix.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(rows, m.cols(), m.field()).expect("rref rows well-formed");
        Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.rows()).map(move |r| self.basis.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(AlgError::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(AlgError::DimensionMismatch(format!(
                "subspaces of ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// Membership via reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Reduces `v` modulo the subspace: subtracts the unique combination of
    /// basis rows matching v on the pivot columns. The result is zero iff
    /// v is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for r in 0..self.basis.rows() {
            let pivot_col = (0..self.ambient)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("no zero rows in a canonical basis");
            if !w[pivot_col].is_zero() {
                let f = w[pivot_col].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].sub(&f.mul(self.basis.at(r, c)));
                }
            }
        }
        w
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_matrix(&stacked))
    }

    /// Intersection via the coefficient-space kernel of [Uᵀ | -Vᵀ].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient, self.field));
        }
        let lhs = self.basis.transpose();
        let rhs = other.basis.transpose().neg();
        let system = lhs.hstack(&rhs)?;
        let kernel = system.nullspace();
        let mut rows = Vec::new();
        for k in 0..kernel.rows() {
            let coeffs = &kernel.row(k)[..self.dim()];
            let mut v = vec_ops::zero(self.ambient, self.field);
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    vec_ops::add_scaled(&mut v, c, self.basis.row(i));
                }
            }
            rows.push(v);
        }
        Subspace::from_rows(self.ambient, self.field, rows)
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let mut w = v.to_vec();
        let mut coords = vec_ops::zero(self.dim(), self.field);
        for r in 0..self.basis.rows() {
            let pivot_col = (0..self.ambient)
                .find(|&c| !self.basis.at(r, c).is_zero())
                .expect("no zero rows in a canonical basis");
            if !w[pivot_col].is_zero() {
                let f = w[pivot_col].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].sub(&f.mul(self.basis.at(r, c)));
                }
                coords[r] = f;
            }
        }
        if vec_ops::is_zero(&w) {
            Some(coords)
        } else {
            None
        }
    }

    /// Maps basis coefficients back to an ambient vector.
    pub fn vec_from_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(coords.len(), self.dim());
        let mut v = vec_ops::zero(self.ambient, self.field);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                vec_ops::add_scaled(&mut v, c, self.basis.row(i));
            }
        }
        v
    }

    /// Representatives completing `self` to `within`: vectors of `within`
    /// whose classes form a basis of within/self. Errors unless
    /// self ⊆ within.
    pub fn completion_within(&self, within: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        self.check_compatible(within)?;
        if !within.contains_subspace(self) {
            return Err(AlgError::Precondition(
                "completion requires a containment of subspaces".into(),
            ));
        }
        let mut reps = Vec::new();
        let mut current = self.clone();
        for row in within.basis_rows() {
            if !current.contains(row) {
                reps.push(row.to_vec());
                current = current.sum(&Subspace::from_rows(
                    self.ambient,
                    self.field,
                    vec![row.to_vec()],
                )?)?;
            }
        }
        debug_assert_eq!(current.dim(), within.dim());
        Ok(reps)
    }
}

/// Full solution of A x = b: a particular solution plus the solution subspace
/// of the homogeneous system, or `None` when inconsistent.
pub struct LinearSolution {
    pub particular: Vec<Scalar>,
    pub homogeneous: Subspace,
}

pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<Option<LinearSolution>> {
    let Some(particular) = a.solve(b)? else {
        return Ok(None);
    };
    let homogeneous = Subspace::from_matrix(&a.nullspace());
    Ok(Some(LinearSolution {
        particular,
        homogeneous,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(xs: &[i64]) -> Vec<Scalar> {
        xs.iter()
            .map(|&x| Scalar::from_i64(x, FieldTower::Q))
            .collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::from_rows(3, FieldTower::Q, vec![qv(&[1, 1, 0]), qv(&[0, 0, 1])]).unwrap();
        let b =
            Subspace::from_rows(3, FieldTower::Q, vec![qv(&[2, 2, 2]), qv(&[1, 1, 3])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn sum_intersection_dims() {
        let u = Subspace::from_rows(3, FieldTower::Q, vec![qv(&[1, 0, 0]), qv(&[0, 1, 0])]).unwrap();
        let v = Subspace::from_rows(3, FieldTower::Q, vec![qv(&[0, 1, 0]), qv(&[0, 0, 1])]).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&qv(&[0, 1, 0])));
        // Grassmann identity on this example.
        assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
    }

    #[test]
    fn coords_roundtrip() {
        let u = Subspace::from_rows(3, FieldTower::Q, vec![qv(&[1, 2, 0]), qv(&[0, 0, 1])]).unwrap();
        let v = qv(&[2, 4, 5]);
        let coords = u.coords_of(&v).unwrap();
        assert_eq!(u.vec_from_coords(&coords), v);
        assert!(u.coords_of(&qv(&[1, 0, 0])).is_none());
    }

    #[test]
    fn completion_gives_coset_basis() {
        let small = Subspace::from_rows(3, FieldTower::Q, vec![qv(&[1, 0, 0])]).unwrap();
        let big = Subspace::full(3, FieldTower::Q);
        let reps = small.completion_within(&big).unwrap();
        assert_eq!(reps.len(), 2);
        let mut all = small.clone();
        for r in &reps {
            all = all
                .sum(&Subspace::from_rows(3, FieldTower::Q, vec![r.clone()]).unwrap())
                .unwrap();
        }
        assert_eq!(all, big);
    }

    #[test]
    fn solve_linear_reports_solution_space() {
        let a = Matrix::from_rows(vec![qv(&[1, 2, 3])], 3, FieldTower::Q).unwrap();
        let sol = solve_linear(&a, &qv(&[6])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&sol.particular).unwrap(), qv(&[6]));
        assert_eq!(sol.homogeneous.dim(), 2);
    }
}
