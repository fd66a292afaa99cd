//! Dense exact matrices over a single field tower.
//!
//! Row-major storage; every matrix carries its field tag so that
//! zero-dimensional edge cases stay well-defined and tower mixing is caught at
//! construction time. Elimination is plain Gauss-Jordan over the field, which
//! is exact for all three towers.

use crate::error::{AlgError, Result};
use crate::field::{FieldTower, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTower,
    data: Vec<Scalar>,
}

/// Coordinate-vector helpers shared across the crate.
pub mod vec_ops {
    use super::*;

    pub fn zero(n: usize, field: FieldTower) -> Vec<Scalar> {
        vec![Scalar::zero(field); n]
    }

    pub fn unit(n: usize, i: usize, field: FieldTower) -> Vec<Scalar> {
        let mut v = zero(n, field);
        v[i] = Scalar::one(field);
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn neg(a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(Scalar::neg).collect()
    }

    pub fn scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| c.mul(x)).collect()
    }

    /// a += c·b in place.
    pub fn add_scaled(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
        debug_assert_eq!(a.len(), b.len());
        for (x, y) in a.iter_mut().zip(b) {
            *x = x.add(&c.mul(y));
        }
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        debug_assert_eq!(a.len(), b.len());
        let mut t = Scalar::zero(a.first().map_or(FieldTower::Q, Scalar::tower));
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                t = t.add(&x.mul(y));
            }
        }
        t
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldTower) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldTower) -> Matrix {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from row vectors, validating shape and field tags.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldTower) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(AlgError::DimensionMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    row.len(),
                    cols
                )));
            }
            for s in row {
                if s.tower() != field {
                    return Err(AlgError::FieldMismatch(s.tower(), field));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: FieldTower,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut m = Matrix::zeros(rows, cols, field);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.tower(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = c.mul(a);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(AlgError::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(AlgError::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(AlgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product (vector as coordinates, length = cols).
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(AlgError::DimensionMismatch(format!(
                "{}x{} matrix applied to a length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec_ops::zero(self.rows, self.field);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.at(r, c);
                if !a.is_zero() {
                    out[r] = out[r].add(&a.mul(x));
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(AlgError::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.cols {
            return Err(AlgError::DimensionMismatch(format!(
                "vstack of {}-col and {}-col matrices",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(AlgError::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows {
            return Err(AlgError::DimensionMismatch(format!(
                "hstack of {}-row and {}-row matrices",
                self.rows, other.rows
            )));
        }
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m
                .at(row, col)
                .inv()
                .expect("pivot is nonzero in a field");
            for c in col..m.cols {
                let v = m.at(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let f = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c).sub(&f.mul(m.at(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace {x : Ax = 0}, one row per basis vector,
    /// in reduced echelon form.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec_ops::zero(self.cols, self.field);
            v[f] = Scalar::one(self.field);
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = r.at(prow, f).neg();
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(rows, self.cols, self.field).expect("nullspace rows well-formed");
        m.rref().0
    }

    /// One solution of Ax = b, if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(AlgError::DimensionMismatch(format!(
                "solve with {} equations and a length-{} right-hand side",
                self.rows,
                b.len()
            )));
        }
        for s in b {
            if s.tower() != self.field {
                return Err(AlgError::FieldMismatch(s.tower(), self.field));
            }
        }
        let rhs = Matrix::from_rows(b.iter().map(|s| vec![s.clone()]).collect(), 1, self.field)?;
        let aug = self.hstack(&rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec_ops::zero(self.cols, self.field);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.at(prow, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self
            .hstack(&Matrix::identity(self.rows, self.field))
            .expect("shapes agree");
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = Matrix::zeros(self.rows, self.rows, self.field);
        for row in 0..self.rows {
            for c in 0..self.rows {
                inv.set(row, c, r.at(row, self.cols + c).clone());
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(AlgError::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut m = self.clone();
        let mut det = Scalar::one(self.field);
        for col in 0..m.cols {
            let Some(pr) = (col..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(Scalar::zero(self.field));
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).mul(&inv);
                for c in col..m.cols {
                    let v = m.at(r, c).sub(&f.mul(m.at(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    pub fn trace(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(AlgError::DimensionMismatch(format!(
                "trace of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut t = Scalar::zero(self.field);
        for i in 0..self.rows {
            t = t.add(self.at(i, i));
        }
        Ok(t)
    }

    /// Flattens row-major into a single coordinate vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Rebuilds a rows×cols matrix from a flattened coordinate vector.
    pub fn unflatten(v: &[Scalar], rows: usize, cols: usize, field: FieldTower) -> Result<Matrix> {
        if v.len() != rows * cols {
            return Err(AlgError::DimensionMismatch(format!(
                "cannot reshape length {} into {}x{}",
                v.len(),
                rows,
                cols
            )));
        }
        Matrix::from_rows(v.chunks(cols).map(|c| c.to_vec()).collect(), cols, field)
    }

    /// Commutator AB - BA.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}
