//! Scalar-plus-band matrices with periodic band content.
//!
//! A `PeriodicBandedMatrix` represents the infinite matrix
//!
//! ```text
//!     q = lambda * 1 + band + correction
//! ```
//!
//! where the band part vanishes outside `|j - i| <= bandwidth`, its entries
//! depend only on the offset `j - i` and on the row index modulo `period`, and
//! the correction is finitary.  The class is closed under addition, negation,
//! transpose, and multiplication by finitary matrices (the product of the band
//! part with a finitary matrix is again finitary), which is all the derivation
//! checks require.  Row and column supports are bounded by
//! `2 * bandwidth + 1 + nnz(correction)`, so brackets against finitary
//! matrices are computed exactly.

use alg_core::{AlgError, Result};
use alg_core::field::{FieldTower, Scalar};

use crate::sparse::SparseInfMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicBandedMatrix {
    field: FieldTower,
    lambda: Scalar,
    period: u64,
    bandwidth: u64,
    /// `table[r][d + bandwidth]` is the band entry at `(i, i + d)` for rows
    /// with `(i - 1) % period == r`.  Dimensions `period x (2 * bandwidth + 1)`.
    table: Vec<Vec<Scalar>>,
    correction: SparseInfMatrix,
}

impl PeriodicBandedMatrix {
    pub fn new(
        field: FieldTower,
        lambda: Scalar,
        period: u64,
        bandwidth: u64,
        table: Vec<Vec<Scalar>>,
        correction: SparseInfMatrix,
    ) -> Result<PeriodicBandedMatrix> {
        if period == 0 {
            return Err(AlgError::Precondition("band period must be positive".into()));
        }
        if table.len() as u64 != period {
            return Err(AlgError::DimensionMismatch(format!(
                "band table has {} rows, period is {}",
                table.len(),
                period
            )));
        }
        let width = 2 * bandwidth as usize + 1;
        for row in &table {
            if row.len() != width {
                return Err(AlgError::DimensionMismatch(format!(
                    "band table row has {} entries, bandwidth {} needs {}",
                    row.len(),
                    bandwidth,
                    width
                )));
            }
            for c in row {
                if c.tower() != field {
                    return Err(AlgError::FieldMismatch(c.tower(), field));
                }
            }
        }
        if lambda.tower() != field {
            return Err(AlgError::FieldMismatch(lambda.tower(), field));
        }
        if correction.field() != field {
            return Err(AlgError::FieldMismatch(correction.field(), field));
        }
        Ok(PeriodicBandedMatrix {
            field,
            lambda,
            period,
            bandwidth,
            table,
            correction,
        })
    }

    /// The scalar matrix `lambda * 1`.
    pub fn scalar(lambda: Scalar) -> PeriodicBandedMatrix {
        let field = lambda.tower();
        PeriodicBandedMatrix {
            field,
            lambda,
            period: 1,
            bandwidth: 0,
            table: vec![vec![Scalar::from_i64(0, field)]],
            correction: SparseInfMatrix::zero(field),
        }
    }

    /// Embeds a finitary matrix as a banded matrix with trivial band.
    pub fn from_sparse(correction: SparseInfMatrix) -> PeriodicBandedMatrix {
        let field = correction.field();
        PeriodicBandedMatrix {
            field,
            lambda: Scalar::from_i64(0, field),
            period: 1,
            bandwidth: 0,
            table: vec![vec![Scalar::from_i64(0, field)]],
            correction,
        }
    }

    /// The block diagonal form with `(0 1; -1 0)` repeated along the diagonal:
    /// entry `(2t - 1, 2t)` is `1` and `(2t, 2t - 1)` is `-1`.
    pub fn alternating_pair_form(field: FieldTower) -> PeriodicBandedMatrix {
        let zero = Scalar::from_i64(0, field);
        let one = Scalar::from_i64(1, field);
        let neg = Scalar::from_i64(-1, field);
        PeriodicBandedMatrix {
            field,
            lambda: zero.clone(),
            period: 2,
            bandwidth: 1,
            table: vec![vec![zero.clone(), zero.clone(), one], vec![neg, zero.clone(), zero]],
            correction: SparseInfMatrix::zero(field),
        }
    }

    /// The block diagonal form with `(0 1; 1 0)` repeated along the diagonal.
    pub fn hyperbolic_pair_form(field: FieldTower) -> PeriodicBandedMatrix {
        let zero = Scalar::from_i64(0, field);
        let one = Scalar::from_i64(1, field);
        PeriodicBandedMatrix {
            field,
            lambda: zero.clone(),
            period: 2,
            bandwidth: 1,
            table: vec![
                vec![zero.clone(), zero.clone(), one.clone()],
                vec![one, zero.clone(), zero],
            ],
            correction: SparseInfMatrix::zero(field),
        }
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn bandwidth(&self) -> u64 {
        self.bandwidth
    }

    pub fn correction(&self) -> &SparseInfMatrix {
        &self.correction
    }

    /// Entry at row `i`, column `j` (1-based).
    pub fn entry(&self, i: u64, j: u64) -> Scalar {
        assert!(i >= 1 && j >= 1, "matrix indices are 1-based");
        let mut v = self.correction.entry(i, j);
        if i == j {
            v = v.add(&self.lambda);
        }
        let d = j as i128 - i as i128;
        if d.unsigned_abs() <= self.bandwidth as u128 {
            let r = ((i - 1) % self.period) as usize;
            let col = (d + self.bandwidth as i128) as usize;
            v = v.add(&self.table[r][col]);
        }
        v
    }

    /// The product `self * x`.  Finitary since every column of `self` has at
    /// most `2 * bandwidth + 1 + nnz(correction)` nonzero entries.
    pub fn mul_sparse(&self, x: &SparseInfMatrix) -> SparseInfMatrix {
        assert_eq!(self.field, x.field(), "field mismatch in banded product");
        let mut corr_by_col: std::collections::BTreeMap<u64, Vec<(u64, Scalar)>> =
            std::collections::BTreeMap::new();
        for (i, k, c) in self.correction.iter() {
            corr_by_col.entry(k).or_default().push((i, c.clone()));
        }
        let mut out = SparseInfMatrix::zero(self.field);
        for (k, j, v) in x.iter() {
            if !self.lambda.is_zero() {
                out.add_at(k, j, &self.lambda.mul(v));
            }
            for d in -(self.bandwidth as i128)..=(self.bandwidth as i128) {
                // band entry (i, k) with k - i = d
                let i = k as i128 - d;
                if i < 1 {
                    continue;
                }
                let r = ((i as u64 - 1) % self.period) as usize;
                let t = &self.table[r][(d + self.bandwidth as i128) as usize];
                if t.is_zero() {
                    continue;
                }
                out.add_at(i as u64, j, &t.mul(v));
            }
            if let Some(col) = corr_by_col.get(&k) {
                for (i, c) in col {
                    out.add_at(*i, j, &c.mul(v));
                }
            }
        }
        out
    }

    /// The product `x * self`.
    pub fn sparse_mul(&self, x: &SparseInfMatrix) -> SparseInfMatrix {
        assert_eq!(self.field, x.field(), "field mismatch in banded product");
        let mut corr_by_row: std::collections::BTreeMap<u64, Vec<(u64, Scalar)>> =
            std::collections::BTreeMap::new();
        for (k, j, c) in self.correction.iter() {
            corr_by_row.entry(k).or_default().push((j, c.clone()));
        }
        let mut out = SparseInfMatrix::zero(self.field);
        for (i, k, v) in x.iter() {
            if !self.lambda.is_zero() {
                out.add_at(i, k, &v.mul(&self.lambda));
            }
            for d in -(self.bandwidth as i128)..=(self.bandwidth as i128) {
                // band entry (k, j) with j - k = d
                let j = k as i128 + d;
                if j < 1 {
                    continue;
                }
                let r = ((k - 1) % self.period) as usize;
                let t = &self.table[r][(d + self.bandwidth as i128) as usize];
                if t.is_zero() {
                    continue;
                }
                out.add_at(i, j as u64, &v.mul(t));
            }
            if let Some(row) = corr_by_row.get(&k) {
                for (j, c) in row {
                    out.add_at(i, *j, &v.mul(c));
                }
            }
        }
        out
    }

    /// The bracket `self * x - x * self`, a finitary matrix.
    pub fn bracket_sparse(&self, x: &SparseInfMatrix) -> SparseInfMatrix {
        self.mul_sparse(x).sub(&self.sparse_mul(x))
    }

    pub fn transpose(&self) -> PeriodicBandedMatrix {
        let p = self.period as i128;
        let width = 2 * self.bandwidth as usize + 1;
        let zero = Scalar::from_i64(0, self.field);
        let mut table = vec![vec![zero; width]; self.period as usize];
        for r in 0..self.period as i128 {
            for (col, cell) in table[r as usize].iter_mut().enumerate() {
                let d = col as i128 - self.bandwidth as i128;
                // transposed entry (i, i + d) equals original (i + d, i),
                // which sits in row class (r + d) mod period at offset -d
                let src_row = (r + d).rem_euclid(p) as usize;
                let src_col = (self.bandwidth as i128 - d) as usize;
                *cell = self.table[src_row][src_col].clone();
            }
        }
        PeriodicBandedMatrix {
            field: self.field,
            lambda: self.lambda.clone(),
            period: self.period,
            bandwidth: self.bandwidth,
            table,
            correction: self.correction.transpose(),
        }
    }

    /// Index bound after which the matrix is purely banded and periodic.  Any
    /// deviation from scalar shape, and any violation of a per-entry identity
    /// whose terms move indices by at most one pair, already shows up at
    /// indices below this bound, because past the correction support the
    /// entries repeat with period `lcm(period, 2)` along the diagonal.
    pub fn scan_bound(&self) -> u64 {
        let p = self.period + self.period % 2;
        self.correction.support_bound() + 2 * p + 2 * self.bandwidth + 4
    }

    /// Returns `Some(c)` when the matrix equals `c * 1`.
    ///
    /// Scanning the square of side `scan_bound()` is conclusive: beyond the
    /// correction support the entries depend only on the row class and the
    /// offset, and the scan region contains every row class with every offset
    /// in the band.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let bound = self.scan_bound().max(2);
        let cand = self.entry(1, 1);
        for i in 1..=bound {
            for j in 1..=bound {
                let e = self.entry(i, j);
                if i == j {
                    if e != cand {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(cand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldTower {
        FieldTower::Q
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n, FieldTower::Q)
    }

    #[test]
    fn alternating_form_entries() {
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        assert_eq!(y.entry(1, 2), s(1));
        assert_eq!(y.entry(2, 1), s(-1));
        assert_eq!(y.entry(3, 4), s(1));
        assert_eq!(y.entry(4, 3), s(-1));
        assert!(y.entry(2, 3).is_zero());
        assert!(y.entry(1, 1).is_zero());
        assert!(y.entry(7, 9).is_zero());
    }

    #[test]
    fn alternating_form_is_skew() {
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        let yt = y.transpose();
        let bound = y.scan_bound();
        for i in 1..=bound {
            for j in 1..=bound {
                assert_eq!(yt.entry(i, j), y.entry(i, j).neg());
            }
        }
    }

    #[test]
    fn bracket_with_unit_matches_hand_computation() {
        // y E_12 = -E_22 and E_12 y = -E_11, so [y, E_12] = E_11 - E_22
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        let e12 = SparseInfMatrix::unit(1, 2, q());
        let got = y.bracket_sparse(&e12);
        let mut want = SparseInfMatrix::zero(q());
        want.set(1, 1, s(1));
        want.set(2, 2, s(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn scalar_matrix_commutes_with_units() {
        let two = PeriodicBandedMatrix::scalar(s(2));
        let x = SparseInfMatrix::from_entries(q(), vec![(1, 5, s(3)), (4, 2, s(-1))]).unwrap();
        assert!(two.bracket_sparse(&x).is_zero());
        assert_eq!(two.mul_sparse(&x), x.scale(&s(2)));
        assert_eq!(two.as_scalar(), Some(s(2)));
    }

    #[test]
    fn correction_breaks_scalar_shape() {
        let mut corr = SparseInfMatrix::zero(q());
        corr.set(1, 1, s(1));
        let m = PeriodicBandedMatrix::from_sparse(corr);
        assert_eq!(m.as_scalar(), None);
        let diag = PeriodicBandedMatrix::scalar(s(0));
        assert_eq!(diag.as_scalar(), Some(s(0)));
    }

    #[test]
    fn periodic_diagonal_is_not_scalar() {
        // diagonal 1, 2, 1, 2, ... written as a period 2 band of width 0
        let table = vec![vec![s(1)], vec![s(2)]];
        let m = PeriodicBandedMatrix::new(
            q(),
            s(0),
            2,
            0,
            table,
            SparseInfMatrix::zero(q()),
        )
        .unwrap();
        assert_eq!(m.entry(1, 1), s(1));
        assert_eq!(m.entry(2, 2), s(2));
        assert_eq!(m.as_scalar(), None);
    }

    #[test]
    fn transpose_of_offset_band() {
        // superdiagonal with period 3 coefficients 1, 2, 3
        let zero = s(0);
        let table = vec![
            vec![zero.clone(), zero.clone(), s(1)],
            vec![zero.clone(), zero.clone(), s(2)],
            vec![zero.clone(), zero.clone(), s(3)],
        ];
        let m = PeriodicBandedMatrix::new(q(), s(0), 3, 1, table, SparseInfMatrix::zero(q()))
            .unwrap();
        assert_eq!(m.entry(1, 2), s(1));
        assert_eq!(m.entry(2, 3), s(2));
        assert_eq!(m.entry(3, 4), s(3));
        assert_eq!(m.entry(4, 5), s(1));
        let t = m.transpose();
        for i in 1..=12u64 {
            for j in 1..=12u64 {
                assert_eq!(t.entry(i, j), m.entry(j, i));
            }
        }
    }

    #[test]
    fn sparse_times_band_support_stays_finite() {
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        let x = SparseInfMatrix::from_entries(q(), vec![(2, 7, s(1)), (9, 3, s(4))]).unwrap();
        let left = y.mul_sparse(&x);
        let right = y.sparse_mul(&x);
        assert!(left.support_bound() <= x.support_bound() + y.bandwidth() + 1);
        assert!(right.support_bound() <= x.support_bound() + y.bandwidth() + 1);
        // spot checks: (x y)(2, 8) = x(2, 7) y(7, 8) and (y x)(1, 7) = y(1, 2) x(2, 7)
        assert_eq!(right.entry(2, 8), s(1));
        assert_eq!(left.entry(1, 7), s(1));
        assert_eq!(left.entry(10, 3), s(-4));
    }
}
