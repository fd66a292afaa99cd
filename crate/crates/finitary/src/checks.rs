//! Verification routines over the infinite families.
//!
//! Everything here reduces a statement about infinite matrices to a finite,
//! exact computation: bracket spans inside a bounded corner, per-entry
//! identities over a scan region that the band structure makes conclusive,
//! and witness searches over bounded index windows that report honestly when
//! the window runs out.

use alg_core::{AlgError, Result};
use alg_core::field::{FieldTower, Scalar};
use alg_core::subspace::Subspace;
use rand::Rng;

use crate::banded::PeriodicBandedMatrix;
use crate::family::Family;
use crate::sparse::SparseInfMatrix;

/// Outcome of testing whether brackets of opposite-degree generators span the
/// degree zero component.
#[derive(Debug, Clone)]
pub struct L0GenerationReport {
    /// Dimension of the degree zero component of the truncation at `bound`.
    pub target_dim: usize,
    /// Dimension of the span of `[c, b]` with `b` of degree 1 and `c` of
    /// degree -1, both drawn from the truncation at `bound + slack`.
    pub bracket_span_dim: usize,
    pub generated: bool,
    /// First degree zero generator outside the bracket span, if any.
    pub missing: Option<SparseInfMatrix>,
}

/// Tests `[L_{-1}, L_1] = L_0` at a finite size.  Brackets are computed at
/// size `bound + slack` so that generation failures at size `bound` cannot be
/// blamed on the corner being too small.
pub fn l0_bracket_generation(
    fam: &Family,
    bound: u64,
    slack: u64,
    field: FieldTower,
) -> Result<L0GenerationReport> {
    let big = bound + slack;
    let raising = fam.generators(1, big, field);
    let lowering = fam.generators(-1, big, field);
    let ambient = (big * big) as usize;
    let mut rows = Vec::new();
    for c in &lowering {
        for b in &raising {
            let w = c.bracket(b);
            if !w.is_zero() {
                rows.push(w.flatten(big)?);
            }
        }
    }
    let span = Subspace::from_rows(ambient, field, rows)?;
    let targets = fam.generators(0, bound, field);
    let mut missing = None;
    for t in &targets {
        if !span.contains(&t.flatten(big)?) {
            missing = Some(t.clone());
            break;
        }
    }
    Ok(L0GenerationReport {
        target_dim: targets.len(),
        bracket_span_dim: span.dim(),
        generated: missing.is_none(),
        missing,
    })
}

#[derive(Debug, Clone)]
pub struct BlockIdentityReport {
    pub samples: usize,
    pub matches: usize,
    pub first_mismatch: Option<usize>,
}

impl BlockIdentityReport {
    pub fn all_match(&self) -> bool {
        self.samples == self.matches
    }
}

/// For block diagonal `x = diag(a_0, d_0)` and arbitrary `y = (a b; c d)`,
/// the double bracket `[x, [x, y]]` expands blockwise as
///
/// ```text
///     ( [a_0, [a_0, a]]                    a_0^2 b - 2 a_0 b d_0 + b d_0^2 )
///     ( d_0^2 c - 2 d_0 c a_0 + c a_0^2    [d_0, [d_0, d]]                 )
/// ```
///
/// This checks the expansion literally on the given samples, comparing the
/// assembled right hand side against the directly computed double bracket.
pub fn block_azd_identity_check(
    split: u64,
    samples: &[(SparseInfMatrix, SparseInfMatrix)],
) -> Result<BlockIdentityReport> {
    let mut matches = 0;
    let mut first_mismatch = None;
    for (idx, (x, y)) in samples.iter().enumerate() {
        for (i, j, _) in x.iter() {
            if (i <= split) != (j <= split) {
                return Err(AlgError::Precondition(format!(
                    "sample {idx} is not block diagonal at split {split}: entry ({i}, {j})"
                )));
            }
        }
        let field = x.field();
        if y.field() != field {
            return Err(AlgError::FieldMismatch(y.field(), field));
        }
        let two = Scalar::from_i64(2, field);
        let a0 = restrict(x, true, true, split);
        let d0 = restrict(x, false, false, split);
        let a = restrict(y, true, true, split);
        let b = restrict(y, true, false, split);
        let c = restrict(y, false, true, split);
        let d = restrict(y, false, false, split);
        let ul = a0.bracket(&a0.bracket(&a));
        let ur = a0
            .mul(&a0)
            .mul(&b)
            .sub(&a0.mul(&b).mul(&d0).scale(&two))
            .add(&b.mul(&d0).mul(&d0));
        let ll = d0
            .mul(&d0)
            .mul(&c)
            .sub(&d0.mul(&c).mul(&a0).scale(&two))
            .add(&c.mul(&a0).mul(&a0));
        let lr = d0.bracket(&d0.bracket(&d));
        let rhs = ul.add(&ur).add(&ll).add(&lr);
        let lhs = x.bracket(&x.bracket(y));
        if lhs == rhs {
            matches += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(idx);
        }
    }
    Ok(BlockIdentityReport {
        samples: samples.len(),
        matches,
        first_mismatch,
    })
}

fn restrict(x: &SparseInfMatrix, rows_low: bool, cols_low: bool, split: u64) -> SparseInfMatrix {
    let mut out = SparseInfMatrix::zero(x.field());
    for (i, j, c) in x.iter() {
        if (i <= split) == rows_low && (j <= split) == cols_low {
            out.set(i, j, c.clone());
        }
    }
    out
}

pub fn random_scalar(field: FieldTower, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldTower::Fp(p) => Scalar::from_i64(rng.random_range(0..p as i64), field),
        _ => Scalar::from_i64(rng.random_range(-5..=5), field),
    }
}

pub fn random_sparse(
    bound: u64,
    entries: usize,
    field: FieldTower,
    rng: &mut impl Rng,
) -> SparseInfMatrix {
    let mut out = SparseInfMatrix::zero(field);
    for _ in 0..entries {
        let i = rng.random_range(1..=bound);
        let j = rng.random_range(1..=bound);
        out.add_at(i, j, &random_scalar(field, rng));
    }
    out
}

pub fn random_block_diagonal(
    split: u64,
    bound: u64,
    entries: usize,
    field: FieldTower,
    rng: &mut impl Rng,
) -> SparseInfMatrix {
    let mut out = SparseInfMatrix::zero(field);
    for _ in 0..entries {
        let (i, j) = if split >= bound || (split >= 1 && rng.random_bool(0.5)) {
            (rng.random_range(1..=split), rng.random_range(1..=split))
        } else {
            (
                rng.random_range(split + 1..=bound),
                rng.random_range(split + 1..=bound),
            )
        };
        out.add_at(i, j, &random_scalar(field, rng));
    }
    out
}

#[derive(Debug, Clone)]
pub enum WitnessSearch {
    /// Some `y` in the window has `[x, [x, y]]` nonzero, so `x` does not
    /// square to zero under the adjoint action.
    Witness {
        y: SparseInfMatrix,
        bracket: SparseInfMatrix,
        tried: usize,
    },
    /// Every candidate in the window brackets to zero.  The window sizes that
    /// were exhausted are reported; nothing is claimed beyond them.
    Inconclusive { windows: Vec<u64>, tried: usize },
}

/// Searches for a witness against `ad(x)^2 = 0` among matrix units inside a
/// bounded index window, followed by the family's generator streams when a
/// family is given.  When a family is given the candidates are filtered to
/// family members and `x` itself must be one.  On failure the window is
/// doubled once before giving up.
pub fn azd_witness_search_inf(
    fam: Option<&Family>,
    x: &SparseInfMatrix,
    window: u64,
) -> Result<WitnessSearch> {
    if x.is_zero() {
        return Err(AlgError::Precondition(
            "witness search needs a nonzero element".into(),
        ));
    }
    if let Some(f) = fam {
        if !f.is_member(x) {
            return Err(AlgError::Precondition(format!(
                "element is not a member of the {} family",
                f.name()
            )));
        }
    }
    let field = x.field();
    let base = x.support_bound();
    let mut tried = 0usize;
    let mut windows = Vec::new();
    for factor in [1u64, 2] {
        let bound = base + window * factor;
        windows.push(bound);
        let mut candidates: Vec<SparseInfMatrix> = Vec::new();
        for i in 1..=bound {
            for j in 1..=bound {
                let u = SparseInfMatrix::unit(i, j, field);
                if fam.is_none_or(|f| f.is_member(&u)) {
                    candidates.push(u);
                }
            }
        }
        if let Some(f) = fam {
            for deg in [-1i64, 0, 1] {
                candidates.extend(f.generators(deg, bound, field));
            }
        }
        for y in candidates {
            tried += 1;
            let w = x.bracket(&x.bracket(&y));
            if !w.is_zero() {
                return Ok(WitnessSearch::Witness {
                    y,
                    bracket: w,
                    tried,
                });
            }
        }
    }
    Ok(WitnessSearch::Inconclusive { windows, tried })
}

#[derive(Debug, Clone)]
pub struct RcfReport {
    pub generators_tested: usize,
    /// Every bracket `[q, g]` satisfies the family's defining identity.
    pub identity_preserved: bool,
    pub first_violation: Option<usize>,
    /// `Some(c)` when `q` is the scalar matrix `c * 1`.
    pub scalar: Option<Scalar>,
    /// Scalar matrices must kill every generator; anything else must move one.
    pub kernel_consistent: bool,
    /// A generator index with `[q, g]` nonzero, with the bracket.
    pub witness: Option<(usize, SparseInfMatrix)>,
    /// Largest support bound among the brackets, as finiteness evidence.
    pub max_bracket_support: u64,
}

/// Tests that bracketing with `q` is a derivation-like action on the family:
/// each `[q, g]` is finitary and satisfies the defining identity, and `[q, -]`
/// vanishes identically exactly when `q` is scalar.  The generator streams
/// are the family's own for `sl` and `sp`; for `o` the model is the skew
/// matrices in the orthonormal basis, so the generators are the elementary
/// skew matrices.
pub fn rcf_derivation_check(
    fam: &Family,
    q: &PeriodicBandedMatrix,
    bound: u64,
) -> Result<RcfReport> {
    rcf_class_check(fam, q)?;
    let field = q.field();
    let gens = rcf_generators(fam, bound, field);
    let mut max_support = 0u64;
    let mut first_violation = None;
    let mut witness = None;
    for (idx, g) in gens.iter().enumerate() {
        let w = q.bracket_sparse(g);
        max_support = max_support.max(w.support_bound());
        if first_violation.is_none() && !rcf_identity_holds(fam, &w) {
            first_violation = Some(idx);
        }
        if witness.is_none() && !w.is_zero() {
            witness = Some((idx, w));
        }
    }
    let scalar = q.as_scalar();
    let kernel_consistent = match &scalar {
        Some(_) => witness.is_none(),
        None => witness.is_some(),
    };
    Ok(RcfReport {
        generators_tested: gens.len(),
        identity_preserved: first_violation.is_none(),
        first_violation,
        scalar,
        kernel_consistent,
        witness,
        max_bracket_support: max_support,
    })
}

/// Verifies that `q` satisfies the family's defining identity itself, by
/// scanning entries out to `scan_bound`.  Past the correction support the
/// entries repeat along the diagonal, and the identities couple positions at
/// fixed offsets, so the scan region settles them everywhere.
fn rcf_class_check(fam: &Family, q: &PeriodicBandedMatrix) -> Result<()> {
    let bound = q.scan_bound().max(4);
    match fam {
        Family::Sl { .. } => Ok(()),
        Family::O => {
            for i in 1..=bound {
                for j in 1..=bound {
                    if !q.entry(i, j).add(&q.entry(j, i)).is_zero() {
                        return Err(AlgError::Precondition(format!(
                            "matrix is not skew: entries ({i}, {j}) and ({j}, {i})"
                        )));
                    }
                }
            }
            Ok(())
        }
        Family::Sp => {
            for i in 1..=bound {
                for j in 1..=bound {
                    if !alternating_defect(q, i, j).is_zero() {
                        return Err(AlgError::Precondition(format!(
                            "matrix violates the alternating form identity at ({i}, {j})"
                        )));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Entry `(i, j)` of `q^T y + y q` with `y` the alternating pair form.
fn alternating_defect(q: &PeriodicBandedMatrix, i: u64, j: u64) -> Scalar {
    let field = q.field();
    let sign = |odd_positive: bool, k: u64| {
        if (k % 2 == 1) == odd_positive {
            Scalar::from_i64(1, field)
        } else {
            Scalar::from_i64(-1, field)
        }
    };
    let left = sign(false, j).mul(&q.entry(partner(j), i));
    let right = sign(true, i).mul(&q.entry(partner(i), j));
    left.add(&right)
}

fn partner(k: u64) -> u64 {
    if k % 2 == 1 {
        k + 1
    } else {
        k - 1
    }
}

fn rcf_generators(fam: &Family, bound: u64, field: FieldTower) -> Vec<SparseInfMatrix> {
    match fam {
        Family::Sl { .. } | Family::Sp => [-1i64, 0, 1]
            .iter()
            .flat_map(|d| fam.generators(*d, bound, field))
            .collect(),
        Family::O => {
            let one = Scalar::from_i64(1, field);
            let neg = Scalar::from_i64(-1, field);
            let mut out = Vec::new();
            for i in 1..=bound {
                for j in i + 1..=bound {
                    let mut g = SparseInfMatrix::zero(field);
                    g.set(i, j, one.clone());
                    g.set(j, i, neg.clone());
                    out.push(g);
                }
            }
            out
        }
    }
}

fn rcf_identity_holds(fam: &Family, w: &SparseInfMatrix) -> bool {
    match fam {
        Family::Sl { .. } => w.trace().is_zero(),
        Family::O => w.is_skew(),
        Family::Sp => {
            let y = PeriodicBandedMatrix::alternating_pair_form(w.field());
            y.sparse_mul(&w.transpose()).add(&y.mul_sparse(w)).is_zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> FieldTower {
        FieldTower::Q
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n, q())
    }

    #[test]
    fn sl_zero_component_is_bracket_generated() {
        let r = l0_bracket_generation(&Family::Sl { split: 1 }, 3, 0, q()).unwrap();
        assert!(r.generated, "missing {:?}", r.missing);
        assert_eq!(r.target_dim, 4);
    }

    #[test]
    fn orthogonal_three_pairs_generate() {
        let r = l0_bracket_generation(&Family::O, 6, 0, q()).unwrap();
        assert!(r.generated);
        assert_eq!(r.target_dim, 9);
    }

    #[test]
    fn symplectic_two_pairs_generate() {
        let r = l0_bracket_generation(&Family::Sp, 4, 0, q()).unwrap();
        assert!(r.generated);
        assert_eq!(r.target_dim, 4);
    }

    #[test]
    fn orthogonal_two_pairs_fall_short() {
        // with two pairs the skew off-diagonal blocks are scalar multiples of
        // the 2x2 rotation, and products of two of those are scalar, so the
        // bracket span inside degree zero is one dimensional
        let r = l0_bracket_generation(&Family::O, 4, 0, q()).unwrap();
        assert!(!r.generated);
        assert_eq!(r.bracket_span_dim, 1);
        assert_eq!(r.target_dim, 4);
        assert!(r.missing.is_some());
    }

    #[test]
    fn block_expansion_matches_double_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for field in [q(), FieldTower::Fp(5)] {
            let mut samples = Vec::new();
            for _ in 0..10 {
                let x = random_block_diagonal(3, 7, 6, field, &mut rng);
                let y = random_sparse(7, 8, field, &mut rng);
                samples.push((x, y));
            }
            let r = block_azd_identity_check(3, &samples).unwrap();
            assert!(r.all_match(), "mismatch at {:?}", r.first_mismatch);
            assert_eq!(r.samples, 10);
        }
    }

    #[test]
    fn off_diagonal_sample_is_rejected() {
        let x = SparseInfMatrix::unit(1, 5, q());
        let y = SparseInfMatrix::unit(2, 2, q());
        assert!(block_azd_identity_check(3, &[(x, y)]).is_err());
    }

    #[test]
    fn nilpotent_unit_has_adjoint_witness() {
        let x = SparseInfMatrix::unit(1, 2, q());
        let fam = Family::Sl { split: 1 };
        match azd_witness_search_inf(Some(&fam), &x, 1).unwrap() {
            WitnessSearch::Witness { y, bracket, .. } => {
                assert_eq!(y, SparseInfMatrix::unit(2, 1, q()));
                assert_eq!(bracket, x.scale(&s(-2)));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn diagonal_difference_has_adjoint_witness() {
        let mut x = SparseInfMatrix::zero(q());
        x.set(1, 1, s(1));
        x.set(2, 2, s(-1));
        match azd_witness_search_inf(None, &x, 1).unwrap() {
            WitnessSearch::Witness { y, bracket, .. } => {
                assert_eq!(y, SparseInfMatrix::unit(1, 2, q()));
                assert_eq!(bracket, SparseInfMatrix::unit(1, 2, q()).scale(&s(4)));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn zero_window_reports_inconclusive() {
        let x = SparseInfMatrix::unit(1, 1, q());
        match azd_witness_search_inf(None, &x, 0).unwrap() {
            WitnessSearch::Inconclusive { windows, tried } => {
                assert_eq!(windows, vec![1, 1]);
                assert_eq!(tried, 2);
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn nonmember_element_is_rejected() {
        let x = SparseInfMatrix::unit(1, 1, q());
        assert!(azd_witness_search_inf(Some(&Family::O), &x, 1).is_err());
    }

    #[test]
    fn scalar_matrix_centralizes_sl() {
        let fam = Family::Sl { split: 1 };
        let r = rcf_derivation_check(&fam, &PeriodicBandedMatrix::scalar(s(3)), 6).unwrap();
        assert!(r.identity_preserved);
        assert_eq!(r.scalar, Some(s(3)));
        assert!(r.kernel_consistent);
        assert!(r.witness.is_none());
    }

    #[test]
    fn alternating_form_acts_nontrivially_on_sl() {
        let fam = Family::Sl { split: 1 };
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        let r = rcf_derivation_check(&fam, &y, 6).unwrap();
        assert!(r.identity_preserved);
        assert_eq!(r.scalar, None);
        assert!(r.kernel_consistent);
        let (idx, w) = r.witness.unwrap();
        assert_eq!(idx, 0);
        let mut want = SparseInfMatrix::zero(q());
        want.set(1, 1, s(1));
        want.set(2, 2, s(-1));
        assert_eq!(w, want);
    }

    #[test]
    fn finitary_projection_moves_a_generator() {
        let fam = Family::Sl { split: 1 };
        let e11 = PeriodicBandedMatrix::from_sparse(SparseInfMatrix::unit(1, 1, q()));
        let r = rcf_derivation_check(&fam, &e11, 6).unwrap();
        assert!(r.identity_preserved);
        assert_eq!(r.scalar, None);
        assert!(r.kernel_consistent);
        assert!(r.witness.is_some());
    }

    #[test]
    fn skew_correction_acts_on_orthogonal_model() {
        let mut c = SparseInfMatrix::zero(q());
        c.set(1, 2, s(1));
        c.set(2, 1, s(-1));
        let qm = PeriodicBandedMatrix::from_sparse(c);
        let r = rcf_derivation_check(&Family::O, &qm, 6).unwrap();
        assert!(r.identity_preserved);
        assert!(r.kernel_consistent);
        assert!(r.witness.is_some());
    }

    #[test]
    fn symmetric_matrix_is_rejected_for_orthogonal_model() {
        let qm = PeriodicBandedMatrix::from_sparse(SparseInfMatrix::unit(1, 2, q()));
        assert!(rcf_derivation_check(&Family::O, &qm, 4).is_err());
    }

    #[test]
    fn alternating_form_is_in_its_own_class() {
        let y = PeriodicBandedMatrix::alternating_pair_form(q());
        let r = rcf_derivation_check(&Family::Sp, &y, 6).unwrap();
        assert!(r.identity_preserved);
        assert_eq!(r.scalar, None);
        assert!(r.kernel_consistent);
        assert!(r.witness.is_some());
    }

    #[test]
    fn identity_matrix_fails_symplectic_class() {
        let one = PeriodicBandedMatrix::scalar(s(1));
        assert!(rcf_derivation_check(&Family::Sp, &one, 4).is_err());
    }
}
