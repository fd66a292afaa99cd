//! Finitely supported infinite matrices with 1-based indices.
//!
//! The entry map never stores zeros, so structural equality is equality of
//! matrices and the support bound is just the largest index present. Sums,
//! products and brackets of finitely supported matrices are finitely
//! supported, which keeps all the arithmetic closed.

use std::collections::BTreeMap;

use alg_core::{AlgError, Result};
use alg_core::field::{FieldTower, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseInfMatrix {
    field: FieldTower,
    entries: BTreeMap<(u64, u64), Scalar>,
}

impl SparseInfMatrix {
    pub fn zero(field: FieldTower) -> SparseInfMatrix {
        SparseInfMatrix {
            field,
            entries: BTreeMap::new(),
        }
    }

    /// The matrix unit E_{ij}.
    pub fn unit(i: u64, j: u64, field: FieldTower) -> SparseInfMatrix {
        let mut m = SparseInfMatrix::zero(field);
        m.set(i, j, Scalar::one(field));
        m
    }

    pub fn from_entries<I>(field: FieldTower, iter: I) -> Result<SparseInfMatrix>
    where
        I: IntoIterator<Item = (u64, u64, Scalar)>,
    {
        let mut m = SparseInfMatrix::zero(field);
        for (i, j, c) in iter {
            if c.tower() != field {
                return Err(AlgError::FieldMismatch(c.tower(), field));
            }
            let cur = m.entry(i, j).add(&c);
            m.set(i, j, cur);
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: u64, j: u64) -> Scalar {
        assert!(i >= 1 && j >= 1, "indices are 1-based");
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Stores a value, dropping the slot when it is zero.
    pub fn set(&mut self, i: u64, j: u64, c: Scalar) {
        assert!(i >= 1 && j >= 1, "indices are 1-based");
        if c.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), c);
        }
    }

    pub fn add_at(&mut self, i: u64, j: u64, c: &Scalar) {
        let cur = self.entry(i, j).add(c);
        self.set(i, j, cur);
    }

    /// Iterates entries in (row, column) order; all values are nonzero.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64, &Scalar)> {
        self.entries.iter().map(|((i, j), c)| (*i, *j, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Largest row or column index present; 0 for the zero matrix.
    pub fn support_bound(&self) -> u64 {
        self.entries
            .keys()
            .map(|(i, j)| (*i).max(*j))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &SparseInfMatrix) -> SparseInfMatrix {
        let mut out = self.clone();
        for (i, j, c) in other.iter() {
            out.add_at(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &SparseInfMatrix) -> SparseInfMatrix {
        let mut out = self.clone();
        for (i, j, c) in other.iter() {
            out.add_at(i, j, &c.neg());
        }
        out
    }

    pub fn neg(&self) -> SparseInfMatrix {
        let mut out = SparseInfMatrix::zero(self.field);
        for (i, j, c) in self.iter() {
            out.set(i, j, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseInfMatrix {
        let mut out = SparseInfMatrix::zero(self.field);
        if c.is_zero() {
            return out;
        }
        for (i, j, v) in self.iter() {
            out.set(i, j, v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &SparseInfMatrix) -> SparseInfMatrix {
        // index the right factor by row once
        let mut by_row: BTreeMap<u64, Vec<(u64, &Scalar)>> = BTreeMap::new();
        for (k, j, c) in other.iter() {
            by_row.entry(k).or_default().push((j, c));
        }
        let mut out = SparseInfMatrix::zero(self.field);
        for (i, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for (j, b) in row {
                    out.add_at(i, *j, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn bracket(&self, other: &SparseInfMatrix) -> SparseInfMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> SparseInfMatrix {
        let mut out = SparseInfMatrix::zero(self.field);
        for (i, j, c) in self.iter() {
            out.set(j, i, c.clone());
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero(self.field);
        for (i, j, c) in self.iter() {
            if i == j {
                t = t.add(c);
            }
        }
        t
    }

    pub fn is_skew(&self) -> bool {
        self.transpose().add(self).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose().sub(self).is_zero()
    }

    /// Row-major coordinates over the n×n corner, for handing truncations to
    /// the finite-dimensional kernel. Entries outside the corner are an error.
    pub fn flatten(&self, n: u64) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(self.field); (n * n) as usize];
        for (i, j, c) in self.iter() {
            if i > n || j > n {
                return Err(AlgError::DimensionMismatch(format!(
                    "entry at ({i}, {j}) lies outside the {n} by {n} corner"
                )));
            }
            v[((i - 1) * n + (j - 1)) as usize] = c.clone();
        }
        Ok(v)
    }
}
