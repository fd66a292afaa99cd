//! The split special linear, orthogonal, and symplectic families.
//!
//! Pair conventions for the orthogonal and symplectic families: basis vectors
//! come in pairs `(u_t, v_t)` stored at the interleaved indices `2t - 1` and
//! `2t`.  The bilinear form pairs `u_t` with `v_t`, so its matrix is the
//! hyperbolic pair form `(0 1; 1 0)` repeated along the diagonal in the
//! orthogonal case and the alternating pair form `(0 1; -1 0)` in the
//! symplectic case.  Writing a matrix in blocks according to the `u` and `v`
//! positions,
//!
//! ```text
//!     (u, u) -> a      (u, v) -> b
//!     (v, u) -> c      (v, v) -> -a^T
//! ```
//!
//! membership forces `b` and `c` to be skew (orthogonal) or symmetric
//! (symplectic), and the three positions carry degrees `0`, `1`, `-1`, which
//! is the short grading the checks revolve around.  For the special linear
//! family the grading splits the index set at `split`: the upper right block
//! has degree `1`, the lower left degree `-1`, and the diagonal blocks degree
//! `0`.

use alg_core::algebra::{AlgebraKind, FinAlgebra, StructureEntry};
use alg_core::{AlgError, Result};
use alg_core::field::{FieldTower, Scalar};
use alg_core::grading::ZGrading;
use alg_core::matrix::Matrix;
use alg_core::subspace::Subspace;

use crate::banded::PeriodicBandedMatrix;
use crate::sparse::SparseInfMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Finitary traceless matrices, graded by the block split at `split`.
    Sl { split: u64 },
    /// Finitary matrices skew-adjoint for the hyperbolic pair form.
    O,
    /// Finitary matrices skew-adjoint for the alternating pair form.
    Sp,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Sl { .. } => "sl",
            Family::O => "o",
            Family::Sp => "sp",
        }
    }

    /// Degree carried by the matrix position `(i, j)` in this family's short
    /// grading.
    pub fn position_degree(&self, i: u64, j: u64) -> i64 {
        match self {
            Family::Sl { split } => match (i <= *split, j <= *split) {
                (true, true) | (false, false) => 0,
                (true, false) => 1,
                (false, true) => -1,
            },
            Family::O | Family::Sp => match (i % 2 == 1, j % 2 == 1) {
                (true, true) | (false, false) => 0,
                (true, false) => 1,
                (false, true) => -1,
            },
        }
    }

    /// The matrix of the bilinear form, for the two families that have one.
    pub fn gram(&self, field: FieldTower) -> Option<PeriodicBandedMatrix> {
        match self {
            Family::Sl { .. } => None,
            Family::O => Some(PeriodicBandedMatrix::hyperbolic_pair_form(field)),
            Family::Sp => Some(PeriodicBandedMatrix::alternating_pair_form(field)),
        }
    }

    /// Membership in the ungraded algebra: trace zero for `sl`, and
    /// `x^T G + G x = 0` for the form families.
    pub fn is_member(&self, x: &SparseInfMatrix) -> bool {
        match self.gram(x.field()) {
            None => x.trace().is_zero(),
            Some(g) => {
                let defect = g.sparse_mul(&x.transpose()).add(&g.mul_sparse(x));
                defect.is_zero()
            }
        }
    }

    /// Membership in the degree `deg` component.  Every entry must sit at a
    /// position of that degree and the entries must satisfy the block
    /// constraints: trace zero (`sl`, degree 0), `d = -a^T` (form families,
    /// degree 0), and skew or symmetric off-diagonal blocks (degrees `1` and
    /// `-1` of the form families).
    pub fn degree_member(&self, x: &SparseInfMatrix, deg: i64) -> bool {
        if deg.abs() > 1 {
            return x.is_zero();
        }
        for (i, j, _) in x.iter() {
            if self.position_degree(i, j) != deg {
                return false;
            }
        }
        match (self, deg) {
            (Family::Sl { .. }, 0) => x.trace().is_zero(),
            (Family::Sl { .. }, _) => true,
            (_, 0) => {
                // the (v, v) block must be minus the transpose of the (u, u) block
                for (i, j, c) in x.iter() {
                    let (pi, pj) = (pair_of(i), pair_of(j));
                    let mirror = if i % 2 == 1 {
                        x.entry(2 * pj, 2 * pi)
                    } else {
                        x.entry(2 * pj - 1, 2 * pi - 1)
                    };
                    if mirror != c.neg() {
                        return false;
                    }
                }
                true
            }
            (Family::O, d) => self.off_block(x, d).is_skew(),
            (Family::Sp, d) => self.off_block(x, d).is_symmetric(),
        }
    }

    /// The pair-indexed content of the degree `1` or `-1` positions.
    fn off_block(&self, x: &SparseInfMatrix, deg: i64) -> SparseInfMatrix {
        let mut out = SparseInfMatrix::zero(x.field());
        for (i, j, c) in x.iter() {
            if self.position_degree(i, j) == deg {
                out.set(pair_of(i), pair_of(j), c.clone());
            }
        }
        out
    }

    /// Basis of the degree `deg` component of the truncation at `bound`,
    /// where `bound` is the largest matrix index in play.  For the form
    /// families only complete pairs fit, so an odd `bound` behaves like
    /// `bound - 1`.  Ordering is deterministic: lexicographic in the defining
    /// index pairs, with diagonal-difference generators last in the `sl`
    /// degree 0 stream.
    pub fn generators(&self, deg: i64, bound: u64, field: FieldTower) -> Vec<SparseInfMatrix> {
        let one = Scalar::from_i64(1, field);
        let neg = Scalar::from_i64(-1, field);
        let mut out = Vec::new();
        match self {
            Family::Sl { split } => {
                let split = *split;
                match deg {
                    0 => {
                        for i in 1..=split.min(bound) {
                            for j in 1..=split.min(bound) {
                                if i != j {
                                    out.push(SparseInfMatrix::unit(i, j, field));
                                }
                            }
                        }
                        for i in split + 1..=bound {
                            for j in split + 1..=bound {
                                if i != j {
                                    out.push(SparseInfMatrix::unit(i, j, field));
                                }
                            }
                        }
                        for k in 1..bound {
                            let mut g = SparseInfMatrix::zero(field);
                            g.set(k, k, one.clone());
                            g.set(k + 1, k + 1, neg.clone());
                            out.push(g);
                        }
                    }
                    1 => {
                        for i in 1..=split.min(bound) {
                            for j in split + 1..=bound {
                                out.push(SparseInfMatrix::unit(i, j, field));
                            }
                        }
                    }
                    -1 => {
                        for i in split + 1..=bound {
                            for j in 1..=split.min(bound) {
                                out.push(SparseInfMatrix::unit(i, j, field));
                            }
                        }
                    }
                    _ => {}
                }
            }
            Family::O | Family::Sp => {
                let pairs = bound / 2;
                let symmetric = matches!(self, Family::Sp);
                match deg {
                    0 => {
                        for p in 1..=pairs {
                            for q in 1..=pairs {
                                let mut g = SparseInfMatrix::zero(field);
                                g.set(2 * p - 1, 2 * q - 1, one.clone());
                                g.add_at(2 * q, 2 * p, &neg);
                                out.push(g);
                            }
                        }
                    }
                    1 => {
                        for p in 1..=pairs {
                            for q in p..=pairs {
                                if p == q && !symmetric {
                                    continue;
                                }
                                let mut g = SparseInfMatrix::zero(field);
                                g.set(2 * p - 1, 2 * q, one.clone());
                                if p != q {
                                    let c = if symmetric { &one } else { &neg };
                                    g.set(2 * q - 1, 2 * p, c.clone());
                                }
                                out.push(g);
                            }
                        }
                    }
                    -1 => {
                        for p in 1..=pairs {
                            for q in p..=pairs {
                                if p == q && !symmetric {
                                    continue;
                                }
                                let mut g = SparseInfMatrix::zero(field);
                                g.set(2 * p, 2 * q - 1, one.clone());
                                if p != q {
                                    let c = if symmetric { &one } else { &neg };
                                    g.set(2 * q, 2 * p - 1, c.clone());
                                }
                                out.push(g);
                            }
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }

    /// The finite algebra on all indices up to `bound`, together with its
    /// short grading.  Structure constants are computed in the generator
    /// basis, ordered by degree `-1`, `0`, `1`.
    pub fn truncate(&self, bound: u64, field: FieldTower) -> Result<(FinAlgebra, ZGrading)> {
        match self {
            Family::Sl { split } => {
                if bound <= *split {
                    return Err(AlgError::Precondition(format!(
                        "truncation bound {bound} does not reach past the split at {split}"
                    )));
                }
            }
            Family::O | Family::Sp => {
                if bound < 2 || bound % 2 != 0 {
                    return Err(AlgError::Precondition(format!(
                        "truncation bound {bound} must be a positive even number of indices"
                    )));
                }
            }
        }
        let mut basis = Vec::new();
        let mut sizes = Vec::new();
        for deg in [-1i64, 0, 1] {
            let part = self.generators(deg, bound, field);
            sizes.push(part.len());
            basis.extend(part);
        }
        let dim = basis.len();
        let ambient = (bound * bound) as usize;
        let mut flats = Vec::with_capacity(dim);
        for b in &basis {
            flats.push(b.flatten(bound)?);
        }
        let span = Subspace::from_rows(ambient, field, flats.clone())?;
        if span.dim() != dim {
            return Err(AlgError::Precondition(
                "truncation generators are linearly dependent".into(),
            ));
        }
        let mut t_rows = Vec::with_capacity(dim);
        for f in &flats {
            let coords = span.coords_of(f).ok_or_else(|| {
                AlgError::Precondition("generator escapes its own span".into())
            })?;
            t_rows.push(coords);
        }
        let t = Matrix::from_rows(t_rows, dim, field)?;
        let tinv = t
            .inverse()
            .ok_or_else(|| AlgError::Precondition("basis transition is singular".into()))?;
        let to_generator_coords = tinv.transpose();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                let w = basis[i].bracket(&basis[j]);
                if w.is_zero() {
                    continue;
                }
                let flat = w.flatten(bound)?;
                let in_span = span.coords_of(&flat).ok_or_else(|| {
                    AlgError::Precondition(format!(
                        "bracket of generators {i} and {j} leaves the truncated span"
                    ))
                })?;
                let coords = to_generator_coords.mul_vec(&in_span)?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(StructureEntry { i, j, k, c });
                    }
                }
            }
        }
        let alg = FinAlgebra::build(dim, AlgebraKind::Lie, field, entries, None, None, None)?;
        let mut components = Vec::new();
        let mut offset = 0usize;
        for (deg, size) in [-1i64, 0, 1].into_iter().zip(sizes) {
            if size == 0 {
                offset += size;
                continue;
            }
            let rows = (offset..offset + size)
                .map(|k| alg_core::matrix::vec_ops::unit(dim, k, field))
                .collect();
            components.push((deg, rows));
            offset += size;
        }
        let grading = ZGrading::new(&alg, components)?;
        Ok((alg, grading))
    }
}

fn pair_of(i: u64) -> u64 {
    i.div_ceil(2)
}

/// Transition from an orthonormal-style basis `e'_1, e'_2, ...` to the
/// hyperbolic pairs `u_t, v_t` over the quartic extension of the rationals:
///
/// ```text
///     u_t = (e'_{2t-1} + i e'_{2t}) / sqrt(2)
///     v_t = (e'_{2t-1} - i e'_{2t}) / sqrt(2)
/// ```
///
/// In the new basis the symmetric form becomes the hyperbolic pair form, so a
/// matrix that is skew in the `e'` basis turns into a member of the
/// orthogonal family's block model.
#[derive(Debug, Clone)]
pub struct UvBasisChange {
    transition: Matrix,
    inverse: Matrix,
    pub gram: Matrix,
}

pub fn basis_change_uv(pairs: usize) -> Result<UvBasisChange> {
    let field = FieldTower::Ext;
    let n = 2 * pairs;
    let inv_sqrt2 = Scalar::ext_sqrt2().inv()?;
    let i_inv_sqrt2 = Scalar::ext_i().mul(&inv_sqrt2);
    let mut p = Matrix::zeros(n, n, field);
    for t in 0..pairs {
        // column 2t holds u_{t+1}, column 2t + 1 holds v_{t+1}
        p.set(2 * t, 2 * t, inv_sqrt2.clone());
        p.set(2 * t + 1, 2 * t, i_inv_sqrt2.clone());
        p.set(2 * t, 2 * t + 1, inv_sqrt2.clone());
        p.set(2 * t + 1, 2 * t + 1, i_inv_sqrt2.neg());
    }
    let gram = p.transpose().mul(&p)?;
    let mut expected = Matrix::zeros(n, n, field);
    let one = Scalar::from_i64(1, field);
    for t in 0..pairs {
        expected.set(2 * t, 2 * t + 1, one.clone());
        expected.set(2 * t + 1, 2 * t, one.clone());
    }
    if gram != expected {
        return Err(AlgError::Precondition(
            "pair transition fails to produce the hyperbolic form".into(),
        ));
    }
    let inverse = p
        .inverse()
        .ok_or_else(|| AlgError::Precondition("pair transition is singular".into()))?;
    Ok(UvBasisChange {
        transition: p,
        inverse,
        gram,
    })
}

impl UvBasisChange {
    pub fn transition(&self) -> &Matrix {
        &self.transition
    }

    /// The matrix of the same operator in the `u, v` basis.
    pub fn conjugate(&self, x: &Matrix) -> Result<Matrix> {
        self.inverse.mul(x)?.mul(&self.transition)
    }

    /// Checks that a matrix skew in the `e'` basis lands in the orthogonal
    /// family's block model after the change: member for the hyperbolic form,
    /// with each positional part satisfying its block constraint.
    pub fn skew_lands_in_block_model(&self, x: &Matrix) -> Result<bool> {
        if x.transpose() != x.neg() {
            return Err(AlgError::Precondition(
                "input matrix is not skew in the orthonormal basis".into(),
            ));
        }
        let y = self.conjugate(x)?;
        let sy = matrix_to_sparse(&y);
        if !Family::O.is_member(&sy) {
            return Ok(false);
        }
        for deg in [-1i64, 0, 1] {
            let mut part = SparseInfMatrix::zero(sy.field());
            for (i, j, c) in sy.iter() {
                if Family::O.position_degree(i, j) == deg {
                    part.set(i, j, c.clone());
                }
            }
            if !Family::O.degree_member(&part, deg) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn matrix_to_sparse(x: &Matrix) -> SparseInfMatrix {
    let mut out = SparseInfMatrix::zero(x.field());
    for r in 0..x.rows() {
        for c in 0..x.cols() {
            let v = x.at(r, c);
            if !v.is_zero() {
                out.set(r as u64 + 1, c as u64 + 1, v.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldTower {
        FieldTower::Q
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n, q())
    }

    #[test]
    fn sl_degrees_split_at_two() {
        let f = Family::Sl { split: 2 };
        let e31 = SparseInfMatrix::unit(3, 1, q());
        assert!(f.degree_member(&e31, -1));
        assert!(!f.degree_member(&e31, 0));
        assert!(f.is_member(&e31));
        let e11 = SparseInfMatrix::unit(1, 1, q());
        assert!(!f.is_member(&e11));
        let mut h = SparseInfMatrix::zero(q());
        h.set(1, 1, s(1));
        h.set(2, 2, s(-1));
        assert!(f.degree_member(&h, 0));
        assert!(f.is_member(&h));
    }

    #[test]
    fn skew_block_is_orthogonal_not_symplectic() {
        // b with b_{12} = 1, b_{21} = -1 at the (u, v) positions
        let mut b = SparseInfMatrix::zero(q());
        b.set(1, 4, s(1));
        b.set(3, 2, s(-1));
        assert!(Family::O.degree_member(&b, 1));
        assert!(Family::O.is_member(&b));
        assert!(!Family::Sp.degree_member(&b, 1));
        assert!(!Family::Sp.is_member(&b));
        // symmetric counterpart
        let mut bs = SparseInfMatrix::zero(q());
        bs.set(1, 4, s(1));
        bs.set(3, 2, s(1));
        assert!(Family::Sp.degree_member(&bs, 1));
        assert!(Family::Sp.is_member(&bs));
        assert!(!Family::O.degree_member(&bs, 1));
    }

    #[test]
    fn unit_on_pair_diagonal_is_not_orthogonal() {
        // a b-block entry on the pair diagonal violates skewness
        let e12 = SparseInfMatrix::unit(1, 2, q());
        assert!(!Family::O.is_member(&e12));
        assert!(Family::Sp.is_member(&e12));
        assert!(Family::Sp.degree_member(&e12, 1));
    }

    #[test]
    fn generator_streams_satisfy_their_membership() {
        for fam in [Family::Sl { split: 2 }, Family::O, Family::Sp] {
            for deg in [-1i64, 0, 1] {
                for g in fam.generators(deg, 6, q()) {
                    assert!(fam.is_member(&g), "{} generator fails membership", fam.name());
                    assert!(
                        fam.degree_member(&g, deg),
                        "{} generator fails degree {deg}",
                        fam.name()
                    );
                }
            }
        }
    }

    #[test]
    fn generator_brackets_respect_degrees() {
        for fam in [Family::Sl { split: 1 }, Family::O, Family::Sp] {
            for d1 in [-1i64, 0, 1] {
                for d2 in [-1i64, 0, 1] {
                    for x in fam.generators(d1, 4, q()) {
                        for y in fam.generators(d2, 4, q()) {
                            let w = x.bracket(&y);
                            if (d1 + d2).abs() > 1 {
                                assert!(w.is_zero(), "{} bracket escapes grading", fam.name());
                            } else {
                                assert!(
                                    fam.degree_member(&w, d1 + d2),
                                    "{} bracket leaves degree {}",
                                    fam.name(),
                                    d1 + d2
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    fn dims(g: &ZGrading) -> Vec<(i64, usize)> {
        g.support()
            .into_iter()
            .map(|d| (d, g.part(d).map(|s| s.dim()).unwrap_or(0)))
            .collect()
    }

    #[test]
    fn truncation_dimensions() {
        let (o4, go4) = Family::O.truncate(4, q()).unwrap();
        assert_eq!(o4.dim(), 6);
        assert_eq!(dims(&go4), vec![(-1, 1), (0, 4), (1, 1)]);
        let (sp4, gsp4) = Family::Sp.truncate(4, q()).unwrap();
        assert_eq!(sp4.dim(), 10);
        assert_eq!(dims(&gsp4), vec![(-1, 3), (0, 4), (1, 3)]);
        let (sl3, gsl3) = Family::Sl { split: 1 }.truncate(3, q()).unwrap();
        assert_eq!(sl3.dim(), 8);
        assert_eq!(dims(&gsl3), vec![(-1, 2), (0, 4), (1, 2)]);
    }

    #[test]
    fn truncations_have_trivial_center() {
        for (fam, bound) in [
            (Family::O, 4),
            (Family::Sp, 4),
            (Family::Sl { split: 1 }, 3),
        ] {
            let (alg, _) = fam.truncate(bound, q()).unwrap();
            assert_eq!(alg.center().dim(), 0, "{} truncation has center", fam.name());
        }
    }

    #[test]
    fn truncation_rejects_bad_bounds() {
        assert!(Family::Sl { split: 3 }.truncate(3, q()).is_err());
        assert!(Family::O.truncate(5, q()).is_err());
        assert!(Family::Sp.truncate(0, q()).is_err());
    }

    #[test]
    fn smaller_truncation_embeds_in_larger() {
        let fam = Family::Sl { split: 1 };
        let (small, _) = fam.truncate(3, q()).unwrap();
        let (large, _) = fam.truncate(4, q()).unwrap();
        let small_gens: Vec<_> = [-1i64, 0, 1]
            .iter()
            .flat_map(|d| fam.generators(*d, 3, q()))
            .collect();
        let large_gens: Vec<_> = [-1i64, 0, 1]
            .iter()
            .flat_map(|d| fam.generators(*d, 4, q()))
            .collect();
        let include: Vec<usize> = small_gens
            .iter()
            .map(|g| large_gens.iter().position(|h| h == g).unwrap())
            .collect();
        for i in 0..small.dim() {
            for j in 0..small.dim() {
                let pc = small.product(
                    &alg_core::matrix::vec_ops::unit(small.dim(), i, q()),
                    &alg_core::matrix::vec_ops::unit(small.dim(), j, q()),
                );
                let pl = large.product(
                    &alg_core::matrix::vec_ops::unit(large.dim(), include[i], q()),
                    &alg_core::matrix::vec_ops::unit(large.dim(), include[j], q()),
                );
                let mut mapped = alg_core::matrix::vec_ops::zero(large.dim(), q());
                for (k, c) in pc.iter().enumerate() {
                    mapped[include[k]] = c.clone();
                }
                assert_eq!(mapped, pl, "bracket of {i}, {j} fails to transport");
            }
        }
    }

    #[test]
    fn pair_change_produces_hyperbolic_form() {
        let ch = basis_change_uv(1).unwrap();
        let t = Matrix::from_fn(2, 2, FieldTower::Ext, |r, c| {
            if r == 0 && c == 1 {
                Scalar::from_i64(1, FieldTower::Ext)
            } else if r == 1 && c == 0 {
                Scalar::from_i64(-1, FieldTower::Ext)
            } else {
                Scalar::from_i64(0, FieldTower::Ext)
            }
        });
        let y = ch.conjugate(&t).unwrap();
        // the rotation generator becomes the diagonal matrix (i, -i)
        assert_eq!(y.at(0, 0), &Scalar::ext_i());
        assert_eq!(y.at(1, 1), &Scalar::ext_i().neg());
        assert!(y.at(0, 1).is_zero());
        assert!(y.at(1, 0).is_zero());
        assert!(ch.skew_lands_in_block_model(&t).unwrap());
    }

    #[test]
    fn skew_four_by_four_lands_in_block_model() {
        let ch = basis_change_uv(2).unwrap();
        let field = FieldTower::Ext;
        let mut t = Matrix::zeros(4, 4, field);
        let vals = [(0usize, 1usize, 1i64), (0, 2, 2), (1, 3, -1), (2, 3, 3)];
        for (r, c, v) in vals {
            t.set(r, c, Scalar::from_i64(v, field));
            t.set(c, r, Scalar::from_i64(-v, field));
        }
        assert!(ch.skew_lands_in_block_model(&t).unwrap());
        let sym = Matrix::identity(4, field);
        assert!(ch.skew_lands_in_block_model(&sym).is_err());
    }
}
