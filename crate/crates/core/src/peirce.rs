//! Peirce systems of unital graded associative algebras.
//!
//! For a grading with support in [-n, n] the row spaces are the triple
//! products H_i = A_i A_{-n} A_{n-i} and the blocks are H_ij = H_i A H_j.
//! When the blocks decompose the algebra they behave like matrix-unit
//! corners: H_ij H_kl lands in H_il when j = k and vanishes otherwise, the
//! unit splits into orthogonal idempotents e_0, ..., e_n with
//! e_i A e_j = H_ij, and the grading is recovered as
//! A_k = ⊕_{i-j=k} e_i A e_j.
//!
//! Block decomposition can fail when the algebra is not generated by its
//! bottom component; such systems are still returned, carrying the failure
//! description instead of projections, because negative examples are worth
//! keeping around.

use crate::algebra::{AlgebraKind, FinAlgebra};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::grading::ZGrading;
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct PeirceSystem {
    n: usize,
    rows: Vec<Subspace>,
    blocks: Vec<Vec<Subspace>>,
    /// Stacked block bases and the coordinate map, present exactly when the
    /// blocks sum directly to the whole algebra.
    change: Option<(Matrix, Matrix)>,
    /// Row range of each block inside the stacked basis: (i, j, start, len).
    spans: Vec<(usize, usize, usize, usize)>,
    failure: Option<String>,
}

/// Computes the row spaces and blocks. Requires a unital associative algebra;
/// a failure of the blocks to decompose the algebra is recorded on the result
/// rather than reported as an error.
pub fn peirce_system(alg: &FinAlgebra, grading: &ZGrading) -> Result<PeirceSystem> {
    if alg.kind() != AlgebraKind::Associative {
        return Err(AlgError::Precondition(
            "Peirce systems live in associative algebras".into(),
        ));
    }
    if alg.unit().is_none() {
        return Err(AlgError::Precondition("Peirce systems need a unit".into()));
    }
    let n_i64 = grading.radius();
    let n = n_i64 as usize;
    let full = Subspace::full(alg.dim(), alg.field());
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n_i64 {
        let a_i = grading.component(i);
        let a_bottom = grading.component(-n_i64);
        let a_rest = grading.component(n_i64 - i);
        let h = alg.span_product(&alg.span_product(&a_i, &a_bottom)?, &a_rest)?;
        rows.push(h);
    }
    let mut blocks = Vec::with_capacity(n + 1);
    for hi in &rows {
        let mut row_blocks = Vec::with_capacity(n + 1);
        for hj in &rows {
            row_blocks.push(alg.span_product(&alg.span_product(hi, &full)?, hj)?);
        }
        blocks.push(row_blocks);
    }
    let mut stacked = Vec::new();
    let mut spans: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (i, row_blocks) in blocks.iter().enumerate() {
        for (j, b) in row_blocks.iter().enumerate() {
            spans.push((i, j, stacked.len(), b.dim()));
            stacked.extend(b.basis_rows().map(|r| r.to_vec()));
        }
    }
    let mut failure = None;
    let mut change = None;
    if stacked.len() != alg.dim() {
        failure = Some(format!(
            "blocks total dimension {}, algebra has {}",
            stacked.len(),
            alg.dim()
        ));
    } else {
        let basis = Matrix::from_rows(stacked, alg.dim(), alg.field())?;
        match basis.transpose().inverse() {
            Some(to_coords) => change = Some((basis, to_coords)),
            None => failure = Some("blocks overlap instead of summing directly".into()),
        }
    }
    Ok(PeirceSystem {
        n,
        rows,
        blocks,
        change,
        spans,
        failure,
    })
}

impl PeirceSystem {
    pub fn radius(&self) -> usize {
        self.n
    }

    /// H_i = A_i A_{-n} A_{n-i}.
    pub fn row(&self, i: usize) -> &Subspace {
        &self.rows[i]
    }

    /// H_ij = H_i A H_j.
    pub fn block(&self, i: usize, j: usize) -> &Subspace {
        &self.blocks[i][j]
    }

    /// The blocks sum directly to the whole algebra.
    pub fn is_direct_sum(&self) -> bool {
        self.change.is_some()
    }

    /// Why the decomposition failed, when it did.
    pub fn failure(&self) -> Option<&str> {
        self.failure.as_deref()
    }

    /// Component of v in block (i, j); needs the direct sum.
    pub fn project(&self, i: usize, j: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let (basis, to_coords) = self.change.as_ref().ok_or_else(|| {
            AlgError::BadIdempotents(
                self.failure
                    .clone()
                    .unwrap_or_else(|| "no block decomposition".into()),
            )
        })?;
        let coords = to_coords.mul_vec(v)?;
        let dim = basis.cols();
        let mut out = vec_ops::zero(dim, basis.field());
        for (bi, bj, start, len) in &self.spans {
            if (*bi, *bj) != (i, j) {
                continue;
            }
            for t in *start..start + len {
                if coords[t].is_zero() {
                    continue;
                }
                let row = basis.row(t);
                for (c, dst) in out.iter_mut().enumerate() {
                    *dst = dst.add(&coords[t].mul(&row[c]));
                }
            }
        }
        Ok(out)
    }

    /// The projection π_ij as a dense matrix.
    pub fn projection(&self, i: usize, j: usize) -> Result<Matrix> {
        let (basis, to_coords) = self.change.as_ref().ok_or_else(|| {
            AlgError::BadIdempotents(
                self.failure
                    .clone()
                    .unwrap_or_else(|| "no block decomposition".into()),
            )
        })?;
        let dim = basis.cols();
        let mut p = Matrix::zeros(dim, dim, basis.field());
        for (bi, bj, start, len) in &self.spans {
            if (*bi, *bj) != (i, j) {
                continue;
            }
            for t in *start..start + len {
                for r in 0..dim {
                    for c in 0..dim {
                        let add = basis.at(t, r).mul(to_coords.at(t, c));
                        p.set(r, c, p.at(r, c).add(&add));
                    }
                }
            }
        }
        Ok(p)
    }

    /// H_ij H_kl ⊆ H_il when j = k, zero otherwise. Returns the first
    /// violating quadruple.
    pub fn multiplication_rule(
        &self,
        alg: &FinAlgebra,
    ) -> Result<Option<(usize, usize, usize, usize)>> {
        for i in 0..=self.n {
            for j in 0..=self.n {
                for k in 0..=self.n {
                    for l in 0..=self.n {
                        let prod = alg.span_product(&self.blocks[i][j], &self.blocks[k][l])?;
                        let ok = if j == k {
                            self.blocks[i][l].contains_subspace(&prod)
                        } else {
                            prod.dim() == 0
                        };
                        if !ok {
                            return Ok(Some((i, j, k, l)));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Each block equals the idempotent corner: H_ij = e_i A e_j.
    pub fn blocks_match_corners(&self, alg: &FinAlgebra, es: &[Vec<Scalar>]) -> Result<bool> {
        if es.len() != self.n + 1 {
            return Ok(false);
        }
        for i in 0..=self.n {
            for j in 0..=self.n {
                let corner = idempotent_corner(alg, &es[i], &es[j])?;
                if corner != self.blocks[i][j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// e_k e_l = δ_kl e_k and Σ e_k = 1.
pub fn family_is_complete_orthogonal(alg: &FinAlgebra, es: &[Vec<Scalar>]) -> bool {
    let unit = match alg.unit() {
        Some(u) => u,
        None => return false,
    };
    let mut total = vec_ops::zero(alg.dim(), alg.field());
    for e in es {
        total = vec_ops::add(&total, e);
    }
    if total != unit {
        return false;
    }
    for (k, ek) in es.iter().enumerate() {
        for (l, el) in es.iter().enumerate() {
            let prod = alg.product(ek, el);
            let expect = if k == l {
                ek.clone()
            } else {
                vec_ops::zero(alg.dim(), alg.field())
            };
            if prod != expect {
                return false;
            }
        }
    }
    true
}

/// Recovers the idempotent family from a grading: e_k is the unit's component
/// in the k-th block column, e_k = Σ_i π_ik(1).
///
/// Requires the hypotheses under which the block decomposition is known to
/// work: the ideal generated by the bottom component is everything, and
/// A_0 A A_0 = A. Both are verified here; so is orthogonality of the result.
pub fn idempotents_from_grading(alg: &FinAlgebra, grading: &ZGrading) -> Result<Vec<Vec<Scalar>>> {
    let unit = alg
        .unit()
        .ok_or_else(|| AlgError::Precondition("idempotent recovery needs a unit".into()))?
        .to_vec();
    let n = grading.radius();
    let bottom = grading.component(-n);
    let closure = alg.ideal_closure(&bottom)?;
    if closure.dim() != alg.dim() {
        return Err(AlgError::Precondition(format!(
            "ideal generated by the degree {} component has dimension {}, not {}",
            -n,
            closure.dim(),
            alg.dim()
        )));
    }
    let a0 = grading.component(0);
    let full = Subspace::full(alg.dim(), alg.field());
    let sandwich = alg.span_product(&alg.span_product(&a0, &full)?, &a0)?;
    if sandwich.dim() != alg.dim() {
        return Err(AlgError::Precondition(format!(
            "A_0 A A_0 has dimension {}, not {}",
            sandwich.dim(),
            alg.dim()
        )));
    }
    let sys = peirce_system(alg, grading)?;
    if let Some(why) = sys.failure() {
        return Err(AlgError::BadIdempotents(why.into()));
    }
    let mut es = Vec::with_capacity(sys.radius() + 1);
    for k in 0..=sys.radius() {
        let mut e = vec_ops::zero(alg.dim(), alg.field());
        for i in 0..=sys.radius() {
            e = vec_ops::add(&e, &sys.project(i, k, &unit)?);
        }
        es.push(e);
    }
    if !family_is_complete_orthogonal(alg, &es) {
        return Err(AlgError::BadIdempotents(
            "recovered family is not complete orthogonal".into(),
        ));
    }
    Ok(es)
}

/// Span of e x f over basis vectors x.
pub fn idempotent_corner(alg: &FinAlgebra, e: &[Scalar], f: &[Scalar]) -> Result<Subspace> {
    let mut rows = Vec::new();
    for b in 0..alg.dim() {
        let x = vec_ops::unit(alg.dim(), b, alg.field());
        let v = alg.product(&alg.product(e, &x), f);
        if !vec_ops::is_zero(&v) {
            rows.push(v);
        }
    }
    Subspace::from_rows(alg.dim(), alg.field(), rows)
}

/// Grading induced by an ordered family of orthogonal idempotents summing to
/// the unit: A_k = ⊕_{i-j=k} e_i A e_j.
pub fn grading_from_idempotents(alg: &FinAlgebra, es: &[Vec<Scalar>]) -> Result<ZGrading> {
    if alg.kind() != AlgebraKind::Associative {
        return Err(AlgError::Precondition(
            "idempotent gradings live in associative algebras".into(),
        ));
    }
    if alg.unit().is_none() {
        return Err(AlgError::Precondition(
            "idempotent gradings need a unit".into(),
        ));
    }
    if es.is_empty() {
        return Err(AlgError::BadIdempotents("empty idempotent family".into()));
    }
    if !family_is_complete_orthogonal(alg, es) {
        return Err(AlgError::BadIdempotents(
            "family is not complete orthogonal".into(),
        ));
    }
    let m = es.len() as i64;
    let mut components = Vec::new();
    for d in -(m - 1)..=(m - 1) {
        let mut rows = Vec::new();
        for (i, ei) in es.iter().enumerate() {
            for (j, ej) in es.iter().enumerate() {
                if i as i64 - j as i64 != d {
                    continue;
                }
                let corner = idempotent_corner(alg, ei, ej)?;
                rows.extend(corner.basis_rows().map(|r| r.to_vec()));
            }
        }
        components.push((d, rows));
    }
    ZGrading::new(alg, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::field::FieldTower;

    const Q: FieldTower = FieldTower::Q;

    fn block_graded_matrix(n: usize, split: &[usize]) -> (FinAlgebra, ZGrading) {
        let alg = constructors::matrix_algebra(n, Q).unwrap();
        let comps = constructors::matrix_block_components(n, split, Q);
        let g = ZGrading::new(&alg, comps).unwrap();
        (alg, g)
    }

    #[test]
    fn m2_idempotents_are_diagonal_units() {
        let (m2, g) = block_graded_matrix(2, &[1, 1]);
        let sys = peirce_system(&m2, &g).unwrap();
        assert_eq!(sys.radius(), 1);
        assert!(sys.is_direct_sum());
        assert_eq!(sys.multiplication_rule(&m2).unwrap(), None);
        let es = idempotents_from_grading(&m2, &g).unwrap();
        assert_eq!(es[0], constructors::matrix_unit(2, 1, 1, Q));
        assert_eq!(es[1], constructors::matrix_unit(2, 0, 0, Q));
        assert!(sys.blocks_match_corners(&m2, &es).unwrap());
        let back = grading_from_idempotents(&m2, &es).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn m4_two_two_idempotents() {
        let (m4, g) = block_graded_matrix(4, &[2, 2]);
        let es = idempotents_from_grading(&m4, &g).unwrap();
        assert_eq!(es[0], constructors::diagonal_idempotent(4, [2, 3], Q));
        assert_eq!(es[1], constructors::diagonal_idempotent(4, [0, 1], Q));
        assert_eq!(grading_from_idempotents(&m4, &es).unwrap(), g);
    }

    #[test]
    fn m3_three_blocks() {
        let (m3, g) = block_graded_matrix(3, &[1, 1, 1]);
        let sys = peirce_system(&m3, &g).unwrap();
        assert_eq!(sys.radius(), 2);
        let es = idempotents_from_grading(&m3, &g).unwrap();
        assert_eq!(es.len(), 3);
        assert_eq!(es[0], constructors::matrix_unit(3, 2, 2, Q));
        assert_eq!(es[2], constructors::matrix_unit(3, 0, 0, Q));
        assert!(sys.blocks_match_corners(&m3, &es).unwrap());
        assert_eq!(grading_from_idempotents(&m3, &es).unwrap(), g);
    }

    #[test]
    fn trivial_grading_gives_unit() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let g = ZGrading::new(
            &m2,
            vec![(
                0,
                (0..4)
                    .map(|i| crate::matrix::vec_ops::unit(4, i, Q))
                    .collect(),
            )],
        )
        .unwrap();
        let sys = peirce_system(&m2, &g).unwrap();
        assert_eq!(sys.radius(), 0);
        assert!(sys.is_direct_sum());
        assert_eq!(sys.block(0, 0).dim(), 4);
        let es = idempotents_from_grading(&m2, &g).unwrap();
        assert_eq!(es, vec![m2.unit().unwrap().to_vec()]);
    }

    #[test]
    fn non_generating_bottom_reported() {
        // Upper-triangular 2x2 with e12 in degree 1: the ideal generated by
        // A_{-1} = 0 is 0, so the hypotheses fail but the system still comes
        // back with its diagnosis.
        let t2 = constructors::upper_triangular(2, Q).unwrap();
        // basis of T_2: e11, e12, e22
        let comps = vec![
            (
                0,
                vec![
                    crate::matrix::vec_ops::unit(3, 0, Q),
                    crate::matrix::vec_ops::unit(3, 2, Q),
                ],
            ),
            (1, vec![crate::matrix::vec_ops::unit(3, 1, Q)]),
        ];
        let g = ZGrading::new(&t2, comps).unwrap();
        let sys = peirce_system(&t2, &g).unwrap();
        assert!(!sys.is_direct_sum());
        assert!(sys.failure().is_some());
        let err = idempotents_from_grading(&t2, &g).unwrap_err();
        assert!(matches!(err, AlgError::Precondition(_)));
    }

    #[test]
    fn bad_idempotent_family_rejected() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let mut bad = constructors::matrix_unit(2, 0, 0, Q);
        bad[1] = Scalar::one(Q); // e11 + e12, idempotent but pair is not orthogonal
        let other = constructors::matrix_unit(2, 1, 1, Q);
        let err = grading_from_idempotents(&m2, &[bad, other]).unwrap_err();
        assert!(matches!(err, AlgError::BadIdempotents(_)));
    }
}
