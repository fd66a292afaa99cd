//! Maximal quotients of semiprime Lie algebras, realized through derivation
//! spaces.
//!
//! The quotient construction glues derivations defined on essential ideals,
//! two being identified when they agree on a common essential ideal. For the
//! algebras certified here (no proper essential ideals) the whole quotient
//! collapses onto Der(L), which is what [`qm_compute`] returns together with
//! the certificate. [`restriction_colimit`] realizes the gluing over an
//! explicit finite family of certified essential ideals, with the
//! restriction maps checked for injectivity rather than assumed.
//!
//! The zero-component driver compares, for a block-graded matrix algebra,
//! the degree-zero part of the graded derivations of the attached Lie
//! algebras against the derivations of the degree-zero part. Dimension
//! agreement and injectivity of the restriction map are reported separately:
//! the restriction kernel is exactly the inner derivations coming from the
//! center of the zero part, which is nonzero for the traceless quotients and
//! zero for the skew-symmetric ones.

use crate::algebra::FinAlgebra;
use crate::certify;
use crate::check::{CheckOutcome, Status};
use crate::derivation::{
    self, commutator_derivation, derivation_space, derivations, graded_pieces_over_slices,
    DerivationSpace,
};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::grading::ZGrading;
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

/// Der(L) promoted to the maximal quotient algebra, valid under the stored
/// certificate.
#[derive(Debug, Clone)]
pub struct QmSpace {
    pub space: DerivationSpace,
    pub certificate: String,
}

/// Maximal quotient of a Lie algebra with no proper essential ideals. The
/// certificate is semisimplicity: every ideal is then a direct summand, so
/// an essential ideal must be everything and the quotient is Der(L) itself.
pub fn qm_compute(l: &FinAlgebra) -> Result<QmSpace> {
    match certify::only_essential_ideal_is_whole(l) {
        Ok(true) => {}
        Ok(false) => {
            return Err(AlgError::Inconclusive(
                "no certificate that every essential ideal is the whole algebra".into(),
            ))
        }
        Err(e) => {
            return Err(AlgError::Inconclusive(format!(
                "certificate machinery unavailable: {e}"
            )))
        }
    }
    let space = derivations(l)?;
    Ok(QmSpace {
        space,
        certificate: "semisimple, so the only essential ideal is the whole algebra and the \
                      maximal quotient is the derivation algebra"
            .into(),
    })
}

/// A derivation given on an essential ideal, representing its equivalence
/// class in the maximal quotient.
#[derive(Debug, Clone)]
pub struct DerivationClass {
    /// Matrix over the canonical basis of the domain ideal, into the parent.
    pub map: Matrix,
    pub domain: Subspace,
    pub degree: Option<i64>,
}

impl DerivationClass {
    /// Whether the two classes agree on a common ideal contained in both
    /// domains.
    pub fn agrees_with(&self, other: &DerivationClass, common: &Subspace) -> Result<bool> {
        for v in common.basis_rows() {
            let a = self
                .domain
                .coords_of(v)
                .ok_or_else(|| {
                    AlgError::Precondition("common ideal leaves the first domain".into())
                })
                .and_then(|c| self.map.mul_vec(&c))?;
            let b = other
                .domain
                .coords_of(v)
                .ok_or_else(|| {
                    AlgError::Precondition("common ideal leaves the second domain".into())
                })
                .and_then(|c| other.map.mul_vec(&c))?;
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The finite-family fragment of the maximal quotient: derivation spaces on
/// each member, all restricted to the intersection.
#[derive(Debug)]
pub struct RestrictionColimit {
    pub i_min: Subspace,
    /// Der(I_min, L), where every class has its canonical representative.
    pub colimit: DerivationSpace,
    pub members: Vec<Subspace>,
    pub member_spaces: Vec<DerivationSpace>,
    /// Whether restriction to I_min is injective on each member space.
    pub restriction_injective: Vec<bool>,
}

/// Realizes the quotient over an explicit family of certified essential
/// ideals. The family must be closed under intersection; each member is
/// checked essential through the annihilator criterion, which needs the
/// semiprimeness certificate.
pub fn restriction_colimit(l: &FinAlgebra, family: &[Subspace]) -> Result<RestrictionColimit> {
    if family.is_empty() {
        return Err(AlgError::Precondition(
            "the ideal family must be nonempty".into(),
        ));
    }
    for (i, a) in family.iter().enumerate() {
        for b in family.iter().skip(i + 1) {
            let inter = a.intersect(b)?;
            if !family.contains(&inter) {
                return Err(AlgError::Precondition(
                    "the ideal family is not closed under intersection".into(),
                ));
            }
        }
    }
    for (i, member) in family.iter().enumerate() {
        if !certify::is_essential_ideal(l, member)? {
            return Err(AlgError::Precondition(format!(
                "family member {i} is not an essential ideal"
            )));
        }
    }
    let mut i_min = family[0].clone();
    for member in &family[1..] {
        i_min = i_min.intersect(member)?;
    }
    let colimit = derivation_space(&i_min, l)?;
    let mut member_spaces = Vec::with_capacity(family.len());
    let mut restriction_injective = Vec::with_capacity(family.len());
    for member in family {
        let space = derivation_space(member, l)?;
        let into_member: Vec<Vec<Scalar>> = i_min
            .basis_rows()
            .map(|v| {
                member
                    .coords_of(v)
                    .expect("the intersection lies in every member")
            })
            .collect();
        let change = Matrix::from_rows(into_member, member.dim(), l.field())?.transpose();
        let mut restricted = Vec::with_capacity(space.dim());
        for f in 0..space.dim() {
            let x = space.basis_map(f).mul(&change)?;
            debug_assert!(colimit.contains_map(&x));
            restricted.push(x.flatten());
        }
        let image =
            Subspace::from_rows(l.dim() * i_min.dim(), l.field(), restricted)?;
        restriction_injective.push(image.dim() == space.dim());
        member_spaces.push(space);
    }
    Ok(RestrictionColimit {
        i_min,
        colimit,
        members: family.to_vec(),
        member_spaces,
        restriction_injective,
    })
}

/// Comparison of the degree-zero graded derivations of L against the
/// derivations of its degree-zero slice.
#[derive(Debug, Clone)]
pub struct QuotientComparison {
    pub l_dim: usize,
    pub zero_slice_dim: usize,
    /// dim of the degree-zero piece of Der(L) over the induced slices.
    pub graded_zero_dim: usize,
    /// dim Der(L_0) computed independently on the slice algebra.
    pub zero_der_dim: usize,
    pub restriction_kernel_dim: usize,
    /// Whether the kernel equals ad(Z(L_0)) inside Der(L).
    pub kernel_is_central_ad: bool,
    pub pieces_exhaust: bool,
}

/// Report of the zero-component drivers.
#[derive(Debug)]
pub struct ZeroComponentReport {
    pub outcomes: Vec<CheckOutcome>,
    /// Comparison for the traceless quotient of the minus algebra.
    pub derived: Option<QuotientComparison>,
    /// Comparison for the quotient built from the skew part.
    pub skew_derived: Option<QuotientComparison>,
}

/// Expresses a subspace contained in the span of `frame` in the frame's
/// canonical coordinates.
fn coords_image(s: &Subspace, frame: &Subspace) -> Result<Subspace> {
    let rows: Vec<Vec<Scalar>> = s
        .basis_rows()
        .map(|v| {
            frame.coords_of(v).ok_or_else(|| {
                AlgError::Precondition("subspace leaves its coordinate frame".into())
            })
        })
        .collect::<Result<_>>()?;
    Subspace::from_rows(frame.dim(), frame.field(), rows)
}

/// Pushes homogeneous slices through carrier coordinates and a quotient
/// projection, dropping degrees that vanish.
fn quotient_slices(
    raw: &[(i64, Subspace)],
    carrier: &Subspace,
    proj: &Matrix,
    ldim: usize,
) -> Result<Vec<(i64, Subspace)>> {
    let field = carrier.field();
    let mut out = Vec::new();
    for (d, s) in raw {
        let inter = s.intersect(carrier)?;
        let mut rows = Vec::new();
        for v in inter.basis_rows() {
            let c = carrier
                .coords_of(v)
                .expect("intersection lies in the carrier");
            let q = proj.mul_vec(&c)?;
            if !vec_ops::is_zero(&q) {
                rows.push(q);
            }
        }
        let slice = Subspace::from_rows(ldim, field, rows)?;
        if slice.dim() > 0 {
            out.push((*d, slice));
        }
    }
    Ok(out)
}

/// Runs the graded-versus-zero-part comparison on a Lie algebra with
/// homogeneous slices.
fn zero_component_comparison(
    l: &FinAlgebra,
    slices: &[(i64, Subspace)],
) -> Result<Option<QuotientComparison>> {
    let zero_slice = match slices.iter().find(|(d, _)| *d == 0) {
        Some((_, s)) => s.clone(),
        None => return Ok(None),
    };
    let l0 = l.subalgebra_on(&zero_slice)?;
    let der_l = derivations(l)?;
    let pieces = graded_pieces_over_slices(&der_l, slices, slices)?;
    let n = l.dim();
    let field = l.field();
    let zero_dim = zero_slice.dim();
    let piece0 = pieces
        .piece(0)
        .cloned()
        .unwrap_or_else(|| Subspace::zero(n * n, field));

    // Restrict each degree-zero graded derivation to the zero slice and
    // measure the kernel of that restriction.
    let mut restricted_rows = Vec::with_capacity(piece0.dim());
    for f in 0..piece0.dim() {
        let x = Matrix::unflatten(piece0.basis().row(f), n, n, field)?;
        let mut r = Matrix::zeros(zero_dim, zero_dim, field);
        for j in 0..zero_dim {
            let w = x.mul_vec(zero_slice.basis().row(j))?;
            let c = zero_slice
                .coords_of(&w)
                .expect("degree-zero derivations preserve the zero slice");
            for (i, v) in c.into_iter().enumerate() {
                r.set(i, j, v);
            }
        }
        restricted_rows.push(r.flatten());
    }
    let restricted =
        Matrix::from_rows(restricted_rows.clone(), zero_dim * zero_dim, field)?;
    let kernel_coeffs = restricted.transpose().nullspace();
    let kernel_rows: Vec<Vec<Scalar>> = (0..kernel_coeffs.rows())
        .map(|i| piece0.vec_from_coords(kernel_coeffs.row(i)))
        .collect();
    let kernel = Subspace::from_rows(n * n, field, kernel_rows)?;

    let z0 = l0.center();
    let central_ad_rows: Vec<Vec<Scalar>> = z0
        .basis_rows()
        .map(|z| {
            let lifted = zero_slice.vec_from_coords(z);
            l.ad(&lifted).flatten()
        })
        .collect();
    let central_ad = Subspace::from_rows(n * n, field, central_ad_rows)?;

    let der_l0 = derivations(&l0)?;
    Ok(Some(QuotientComparison {
        l_dim: n,
        zero_slice_dim: zero_dim,
        graded_zero_dim: piece0.dim(),
        zero_der_dim: der_l0.dim(),
        restriction_kernel_dim: kernel.dim(),
        kernel_is_central_ad: kernel == central_ad,
        pieces_exhaust: pieces.exhausts,
    }))
}

fn comparison_outcomes(
    outcomes: &mut Vec<CheckOutcome>,
    label: &str,
    cmp: &Option<QuotientComparison>,
) {
    match cmp {
        Some(c) => {
            outcomes.push(CheckOutcome::expect(
                format!("zero-component/{label}-dims"),
                c.graded_zero_dim == c.zero_der_dim,
                format!(
                    "graded degree-zero dim {}, zero-part derivation dim {}",
                    c.graded_zero_dim, c.zero_der_dim
                ),
            ));
            outcomes.push(CheckOutcome::expect(
                format!("zero-component/{label}-injective"),
                c.restriction_kernel_dim == 0,
                format!(
                    "restriction kernel dim {}{}",
                    c.restriction_kernel_dim,
                    if c.restriction_kernel_dim > 0 && c.kernel_is_central_ad {
                        ", spanned by inner derivations of the zero-part center"
                    } else {
                        ""
                    }
                ),
            ));
        }
        None => {
            outcomes.push(CheckOutcome::skip(
                format!("zero-component/{label}-dims"),
                "no degree-zero slice",
            ));
            outcomes.push(CheckOutcome::skip(
                format!("zero-component/{label}-injective"),
                "no degree-zero slice",
            ));
        }
    }
}

/// Drivers comparing the zero component of the maximal quotient against the
/// maximal quotient of the zero component, at the level of derivation
/// spaces.
///
/// Four comparisons on a block-graded matrix algebra A:
/// inner derivations exhaust Der(A) with kernel the center; skew inner
/// derivations exhaust the starred derivations; and the two quotient
/// comparisons, one for the traceless quotient of A as a Lie algebra, one
/// for the quotient built from the skew part. An attached involution must
/// reverse degrees.
pub fn check_zero_component_iso(a: &FinAlgebra, grading: &ZGrading) -> Result<ZeroComponentReport> {
    let mut outcomes = Vec::new();
    let mut report = ZeroComponentReport {
        outcomes: Vec::new(),
        derived: None,
        skew_derived: None,
    };

    match certify::is_central_simple(a) {
        Ok(true) => outcomes.push(CheckOutcome::pass(
            "zero-component/central-simple",
            "trace form nondegenerate, centroid one dimensional",
        )),
        Ok(false) => {
            outcomes.push(CheckOutcome::new(
                "zero-component/central-simple",
                Status::Inconclusive,
                "not certified central simple",
            ));
            report.outcomes = outcomes;
            return Ok(report);
        }
        Err(e) => {
            outcomes.push(CheckOutcome::new(
                "zero-component/central-simple",
                Status::Inconclusive,
                format!("certificate machinery unavailable: {e}"),
            ));
            report.outcomes = outcomes;
            return Ok(report);
        }
    }

    if a.involution().is_some() {
        for d in grading.support() {
            let comp = grading.component(d);
            let target = grading.component(-d);
            for v in comp.basis_rows() {
                let w = a.apply_involution(v)?;
                if !vec_ops::is_zero(&w) && !target.contains(&w) {
                    return Err(AlgError::InvalidGrading(format!(
                        "involution does not send degree {d} to degree {}",
                        -d
                    )));
                }
            }
        }
    }

    // Inner derivations exhaust Der(A), with kernel the center.
    let der_a = derivations(a)?;
    let z = a.center();
    let inner = derivation::inner_span(a)?;
    let kernel_ok = derivation::ad_kernel(a)? == z;
    outcomes.push(CheckOutcome::expect(
        "zero-component/inner-onto",
        der_a.dim() == a.dim() - z.dim() && inner == *der_a.space() && kernel_ok,
        format!(
            "derivation dim {}, algebra dim {}, center dim {}, inner span dim {}",
            der_a.dim(),
            a.dim(),
            z.dim(),
            inner.dim()
        ),
    ));

    // Skew inner derivations exhaust the starred derivations.
    let skew = if a.involution().is_some() {
        let (k_alg, k_sub) = a.skew_part()?;
        let sder = derivation::sderivations(a)?;
        let zk = k_alg.center();
        let rows: Vec<Vec<Scalar>> = k_sub
            .basis_rows()
            .map(|k| commutator_derivation(a, k).flatten())
            .collect();
        let skew_inner = Subspace::from_rows(a.dim() * a.dim(), a.field(), rows)?;
        outcomes.push(CheckOutcome::expect(
            "zero-component/skew-inner-onto",
            sder.dim() == k_sub.dim() - zk.dim() && skew_inner == *sder.space(),
            format!(
                "starred derivation dim {}, skew part dim {}, its center dim {}",
                sder.dim(),
                k_sub.dim(),
                zk.dim()
            ),
        ));
        Some((k_alg, k_sub))
    } else {
        outcomes.push(CheckOutcome::skip(
            "zero-component/skew-inner-onto",
            "no involution attached",
        ));
        None
    };

    // Traceless quotient of the minus algebra, with the induced slices.
    {
        let am = a.minus_algebra()?;
        let derived = am.product_span();
        let lpre = am.subalgebra_on(&derived)?;
        let zc = lpre.center();
        let (l, proj) = lpre.quotient_with_map(&zc)?;
        let raw: Vec<(i64, Subspace)> = grading
            .support()
            .into_iter()
            .map(|d| (d, grading.component(d)))
            .collect();
        let slices = quotient_slices(&raw, &derived, &proj, l.dim())?;
        report.derived = zero_component_comparison(&l, &slices)?;
        comparison_outcomes(&mut outcomes, "derived", &report.derived);
    }

    // Same comparison for the quotient built from the skew part.
    match skew {
        Some((k_alg, k_sub)) => {
            let derived_k = k_alg.product_span();
            let lpre = k_alg.subalgebra_on(&derived_k)?;
            let zc = lpre.center();
            let (l, proj) = lpre.quotient_with_map(&zc)?;
            let mut raw = Vec::new();
            for d in grading.support() {
                let inter = grading.component(d).intersect(&k_sub)?;
                if inter.dim() > 0 {
                    raw.push((d, coords_image(&inter, &k_sub)?));
                }
            }
            let slices = quotient_slices(&raw, &derived_k, &proj, l.dim())?;
            report.skew_derived = zero_component_comparison(&l, &slices)?;
            comparison_outcomes(&mut outcomes, "skew-derived", &report.skew_derived);
        }
        None => {
            outcomes.push(CheckOutcome::skip(
                "zero-component/skew-derived-dims",
                "no involution attached",
            ));
            outcomes.push(CheckOutcome::skip(
                "zero-component/skew-derived-injective",
                "no involution attached",
            ));
        }
    }

    report.outcomes = outcomes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        direct_sum, gl_minus, matrix_algebra, matrix_algebra_with_symplectic,
        matrix_algebra_with_transpose, matrix_block_components, sl, so_identity,
    };
    use crate::derivation::inner_derivations;
    use crate::field::FieldTower;

    const Q: FieldTower = FieldTower::Q;

    fn block_grading(a: &FinAlgebra, n: usize, split: &[usize]) -> ZGrading {
        ZGrading::new(a, matrix_block_components(n, split, Q)).unwrap()
    }

    #[test]
    fn maximal_quotients_of_semisimple_algebras_are_their_derivations() {
        let l2 = sl(2, Q).unwrap();
        let qm = qm_compute(&l2).unwrap();
        assert_eq!(qm.space.dim(), 3);
        assert_eq!(*qm.space.space(), inner_derivations(&l2).unwrap());

        let (so5, _) = so_identity(5, Q).unwrap();
        assert_eq!(qm_compute(&so5).unwrap().space.dim(), 10);

        let sum = direct_sum(&l2, &l2).unwrap();
        assert_eq!(qm_compute(&sum).unwrap().space.dim(), 6);
    }

    #[test]
    fn maximal_quotient_needs_the_certificate() {
        let gl2 = gl_minus(2, Q).unwrap();
        assert!(matches!(qm_compute(&gl2), Err(AlgError::Inconclusive(_))));
    }

    #[test]
    fn colimit_over_the_whole_algebra_is_der() {
        let l = sl(2, Q).unwrap();
        let family = vec![Subspace::full(3, Q)];
        let col = restriction_colimit(&l, &family).unwrap();
        assert_eq!(col.i_min.dim(), 3);
        assert_eq!(col.colimit.dim(), 3);
        assert_eq!(col.restriction_injective, vec![true]);
        assert_eq!(col.member_spaces[0].dim(), 3);
    }

    #[test]
    fn colimit_rejects_a_non_essential_member() {
        let l2 = sl(2, Q).unwrap();
        let sum = direct_sum(&l2, &l2).unwrap();
        let first = Subspace::from_rows(
            6,
            Q,
            (0..3).map(|i| vec_ops::unit(6, i, Q)).collect(),
        )
        .unwrap();
        assert!(matches!(
            restriction_colimit(&sum, &[first]),
            Err(AlgError::Precondition(_))
        ));
    }

    #[test]
    fn colimit_rejects_a_family_missing_intersections() {
        let l2 = sl(2, Q).unwrap();
        let sum = direct_sum(&l2, &l2).unwrap();
        let first = Subspace::from_rows(
            6,
            Q,
            (0..3).map(|i| vec_ops::unit(6, i, Q)).collect(),
        )
        .unwrap();
        let second = Subspace::from_rows(
            6,
            Q,
            (3..6).map(|i| vec_ops::unit(6, i, Q)).collect(),
        )
        .unwrap();
        assert!(matches!(
            restriction_colimit(&sum, &[first, second]),
            Err(AlgError::Precondition(_))
        ));
    }

    #[test]
    fn classes_compare_by_agreement_on_a_common_ideal() {
        let l = sl(2, Q).unwrap();
        let full = Subspace::full(3, Q);
        let e = vec_ops::unit(3, 0, Q);
        let f = vec_ops::unit(3, 2, Q);
        let one = DerivationClass {
            map: l.ad(&e),
            domain: full.clone(),
            degree: None,
        };
        let other = DerivationClass {
            map: l.ad(&e),
            domain: full.clone(),
            degree: None,
        };
        let third = DerivationClass {
            map: l.ad(&f),
            domain: full.clone(),
            degree: None,
        };
        assert!(one.agrees_with(&other, &full).unwrap());
        assert!(!one.agrees_with(&third, &full).unwrap());
    }

    #[test]
    fn zero_component_comparison_on_blocked_m3() {
        let a = matrix_algebra(3, Q).unwrap();
        let g = block_grading(&a, 3, &[1, 2]);
        let report = check_zero_component_iso(&a, &g).unwrap();
        let named = |n: &str| {
            report
                .outcomes
                .iter()
                .find(|o| o.name.ends_with(n))
                .unwrap()
                .status
        };
        assert_eq!(named("central-simple"), Status::Pass);
        assert_eq!(named("inner-onto"), Status::Pass);
        assert_eq!(named("skew-inner-onto"), Status::Skip);
        assert_eq!(named("derived-dims"), Status::Pass);
        assert_eq!(named("derived-injective"), Status::Fail);
        let c = report.derived.unwrap();
        assert_eq!(c.l_dim, 8);
        assert_eq!(c.zero_slice_dim, 4);
        assert_eq!(c.graded_zero_dim, 4);
        assert_eq!(c.zero_der_dim, 4);
        assert_eq!(c.restriction_kernel_dim, 1);
        assert!(c.kernel_is_central_ad);
        assert!(c.pieces_exhaust);
        assert!(report.skew_derived.is_none());
    }

    #[test]
    fn zero_component_comparison_on_transposed_m6() {
        let a = matrix_algebra_with_transpose(6, Q).unwrap();
        let g = block_grading(&a, 6, &[3, 3]);
        let report = check_zero_component_iso(&a, &g).unwrap();
        let named = |n: &str| {
            report
                .outcomes
                .iter()
                .find(|o| o.name.ends_with(n))
                .unwrap()
                .status
        };
        assert_eq!(named("inner-onto"), Status::Pass);
        assert_eq!(named("skew-inner-onto"), Status::Pass);
        assert_eq!(named("derived-dims"), Status::Pass);
        assert_eq!(named("derived-injective"), Status::Fail);
        assert_eq!(named("skew-derived-dims"), Status::Pass);
        assert_eq!(named("skew-derived-injective"), Status::Pass);
        let c = report.derived.unwrap();
        assert_eq!((c.graded_zero_dim, c.zero_der_dim), (17, 17));
        assert_eq!(c.restriction_kernel_dim, 1);
        let k = report.skew_derived.unwrap();
        assert_eq!(k.l_dim, 15);
        assert_eq!(k.zero_slice_dim, 6);
        assert_eq!((k.graded_zero_dim, k.zero_der_dim), (6, 6));
        assert_eq!(k.restriction_kernel_dim, 0);
        assert!(!k.pieces_exhaust);
    }

    #[test]
    fn degree_preserving_involution_is_rejected() {
        let a = matrix_algebra_with_symplectic(1, Q).unwrap();
        let g = block_grading(&a, 2, &[1, 1]);
        assert!(matches!(
            check_zero_component_iso(&a, &g),
            Err(AlgError::InvalidGrading(_))
        ));
    }
}
