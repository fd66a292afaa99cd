//! Integer gradings A = ⊕ A_d with validated compatibility A_d A_e ⊆ A_{d+e}.

use crate::algebra::FinAlgebra;
use crate::certify;
use crate::check::Status;
use crate::error::{AlgError, Result};
use crate::field::{FieldTower, Scalar};
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq)]
pub struct ZGrading {
    dim: usize,
    field: FieldTower,
    /// Nonzero components in ascending degree order.
    parts: Vec<(i64, Subspace)>,
    /// Projection onto each component along the others, aligned with `parts`.
    projections: Vec<Matrix>,
}

impl ZGrading {
    /// Validates that the components are independent, span the algebra, and
    /// multiply into the right degrees. Empty components are dropped;
    /// duplicate degrees are rejected.
    pub fn new(alg: &FinAlgebra, components: Vec<(i64, Vec<Vec<Scalar>>)>) -> Result<ZGrading> {
        let dim = alg.dim();
        let field = alg.field();
        let mut parts: Vec<(i64, Subspace)> = Vec::new();
        for (d, rows) in components {
            let s = Subspace::from_rows(dim, field, rows.clone())?;
            if s.dim() != rows.len() {
                return Err(AlgError::InvalidGrading(format!(
                    "component of degree {d} has dependent basis rows"
                )));
            }
            if s.dim() == 0 {
                continue;
            }
            if parts.iter().any(|(e, _)| *e == d) {
                return Err(AlgError::InvalidGrading(format!(
                    "degree {d} appears twice"
                )));
            }
            parts.push((d, s));
        }
        parts.sort_by_key(|(d, _)| *d);
        let total: usize = parts.iter().map(|(_, s)| s.dim()).sum();
        if total != dim {
            return Err(AlgError::InvalidGrading(format!(
                "components total dimension {total}, algebra has {dim}"
            )));
        }
        let mut stacked_rows = Vec::with_capacity(dim);
        for (_, s) in &parts {
            stacked_rows.extend(s.basis_rows().map(|r| r.to_vec()));
        }
        let change = Matrix::from_rows(stacked_rows, dim, field)?;
        let to_coords = change.transpose().inverse().ok_or_else(|| {
            AlgError::InvalidGrading("components overlap instead of summing directly".into())
        })?;
        let mut projections = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for (_, s) in &parts {
            let mut indicator = Matrix::zeros(dim, dim, field);
            for t in offset..offset + s.dim() {
                indicator.set(t, t, Scalar::one(field));
            }
            let p = change
                .transpose()
                .mul(&indicator)?
                .mul(&to_coords)?;
            projections.push(p);
            offset += s.dim();
        }
        let grading = ZGrading {
            dim,
            field,
            parts,
            projections,
        };
        for (d, s) in &grading.parts {
            for (e, t) in &grading.parts {
                for x in s.basis_rows() {
                    for y in t.basis_rows() {
                        let prod = alg.product(x, y);
                        if vec_ops::is_zero(&prod) {
                            continue;
                        }
                        let ok = match grading.part(d + e) {
                            Some(target) => target.contains(&prod),
                            None => false,
                        };
                        if !ok {
                            return Err(AlgError::InvalidGrading(format!(
                                "product of degrees {d} and {e} leaves degree {}",
                                d + e
                            )));
                        }
                    }
                }
            }
        }
        Ok(grading)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    /// Degrees with nonzero components, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.parts.iter().map(|(d, _)| *d).collect()
    }

    /// Largest |d| over the support.
    pub fn radius(&self) -> i64 {
        self.parts
            .iter()
            .map(|(d, _)| d.abs())
            .max()
            .unwrap_or(0)
    }

    pub fn part(&self, d: i64) -> Option<&Subspace> {
        self.parts
            .iter()
            .find(|(e, _)| *e == d)
            .map(|(_, s)| s)
    }

    /// Component as a subspace, zero when the degree is outside the support.
    pub fn component(&self, d: i64) -> Subspace {
        match self.part(d) {
            Some(s) => s.clone(),
            None => Subspace::zero(self.dim, self.field),
        }
    }

    pub fn projection(&self, d: i64) -> Option<&Matrix> {
        self.parts
            .iter()
            .position(|(e, _)| *e == d)
            .map(|i| &self.projections[i])
    }

    /// Nonzero homogeneous parts of a vector, ascending degree.
    pub fn decompose(&self, v: &[Scalar]) -> Result<Vec<(i64, Vec<Scalar>)>> {
        let mut out = Vec::new();
        for ((d, _), p) in self.parts.iter().zip(&self.projections) {
            let piece = p.mul_vec(v)?;
            if !vec_ops::is_zero(&piece) {
                out.push((*d, piece));
            }
        }
        Ok(out)
    }

    /// Degree of a nonzero homogeneous vector, None when the vector mixes
    /// degrees or is zero.
    pub fn degree_of(&self, v: &[Scalar]) -> Result<Option<i64>> {
        let parts = self.decompose(v)?;
        Ok(match parts.as_slice() {
            [(d, _)] => Some(*d),
            _ => None,
        })
    }

    /// A subspace is graded when every projection maps it into itself.
    pub fn is_graded_subspace(&self, s: &Subspace) -> Result<bool> {
        for p in &self.projections {
            for v in s.basis_rows() {
                if !s.contains(&p.mul_vec(v)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Homogeneous slices S ∩ A_d, ascending degree, empty slices dropped.
    pub fn graded_slices(&self, s: &Subspace) -> Result<Vec<(i64, Subspace)>> {
        let mut out = Vec::new();
        for (d, comp) in &self.parts {
            let slice = s.intersect(comp)?;
            if slice.dim() > 0 {
                out.push((*d, slice));
            }
        }
        Ok(out)
    }
}

/// Verdicts for a candidate graded ideal.
#[derive(Debug, Clone)]
pub struct GradedIdealReport {
    pub is_graded: bool,
    pub is_ideal: bool,
    pub essential: Status,
    pub essential_detail: String,
}

/// Tests gradedness, stability under multiplication, and essentiality.
///
/// Essential means meeting every nonzero ideal. A positive verdict needs the
/// semisimplicity certificate, under which essential is the same as having
/// zero annihilator. A negative verdict needs no certificate when the
/// annihilator is itself a nonzero ideal meeting I trivially, which exhibits
/// the failure outright. Anything else stays inconclusive.
pub fn graded_ideal_tests(
    alg: &FinAlgebra,
    grading: &ZGrading,
    ideal: &Subspace,
) -> Result<GradedIdealReport> {
    let is_graded = grading.is_graded_subspace(ideal)?;
    let is_ideal = alg.is_ideal(ideal).is_ok();
    if !is_ideal {
        return Ok(GradedIdealReport {
            is_graded,
            is_ideal,
            essential: Status::Skip,
            essential_detail: "not an ideal".into(),
        });
    }
    let full = Subspace::full(alg.dim(), alg.field());
    let ann = alg.annihilator_in(&full, ideal)?;
    let (essential, essential_detail) = match certify::is_semiprime(alg) {
        Ok(true) => {
            if ann.dim() == 0 {
                (Status::Pass, "semiprime with zero annihilator".into())
            } else {
                (
                    Status::Fail,
                    format!("semiprime with annihilator of dimension {}", ann.dim()),
                )
            }
        }
        _ => {
            if ann.dim() > 0 && ann.intersect(ideal)?.dim() == 0 {
                (
                    Status::Fail,
                    format!(
                        "annihilator of dimension {} meets the ideal trivially",
                        ann.dim()
                    ),
                )
            } else {
                (
                    Status::Inconclusive,
                    "no semiprimeness certificate and no direct witness".into(),
                )
            }
        }
    };
    Ok(GradedIdealReport {
        is_graded,
        is_ideal,
        essential,
        essential_detail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;

    const Q: FieldTower = FieldTower::Q;

    #[test]
    fn block_grading_of_m2_validates() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let comps = constructors::matrix_block_components(2, &[1, 1], Q);
        let g = ZGrading::new(&m2, comps).unwrap();
        assert_eq!(g.support(), vec![-1, 0, 1]);
        assert_eq!(g.radius(), 1);
        assert_eq!(g.component(0).dim(), 2);
        assert_eq!(g.component(1).dim(), 1);
        assert_eq!(g.component(7).dim(), 0);
    }

    #[test]
    fn projections_recover_components() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let comps = constructors::matrix_block_components(2, &[1, 1], Q);
        let g = ZGrading::new(&m2, comps).unwrap();
        // e11 + e12 splits into degree 0 and degree 1 pieces
        let mut v = vec_ops::zero(4, Q);
        v[0] = Scalar::one(Q);
        v[1] = Scalar::one(Q);
        let parts = g.decompose(&v).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, 0);
        assert_eq!(parts[0].1, vec_ops::unit(4, 0, Q));
        assert_eq!(parts[1].0, 1);
        assert_eq!(parts[1].1, vec_ops::unit(4, 1, Q));
        assert_eq!(g.degree_of(&vec_ops::unit(4, 1, Q)).unwrap(), Some(1));
        assert_eq!(g.degree_of(&v).unwrap(), None);
    }

    #[test]
    fn incompatible_degrees_rejected() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        // e12 at degree 2 against e21 at degree -1: the product e11 would
        // need an empty degree-1 slot
        let comps = vec![
            (2, vec![constructors::matrix_unit(2, 0, 1, Q)]),
            (
                0,
                vec![
                    constructors::matrix_unit(2, 0, 0, Q),
                    constructors::matrix_unit(2, 1, 1, Q),
                ],
            ),
            (-1, vec![constructors::matrix_unit(2, 1, 0, Q)]),
        ];
        let err = ZGrading::new(&m2, comps).unwrap_err();
        assert!(matches!(err, AlgError::InvalidGrading(_)));
    }

    #[test]
    fn missing_component_rejected() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let mut comps = constructors::matrix_block_components(2, &[1, 1], Q);
        comps.remove(0);
        assert!(ZGrading::new(&m2, comps).is_err());
    }

    #[test]
    fn sl3_block_grading() {
        let sl3 = constructors::sl(3, Q).unwrap();
        let comps = constructors::sl_block_components(3, &[1, 2], Q);
        let g = ZGrading::new(&sl3, comps).unwrap();
        assert_eq!(g.component(-1).dim(), 2);
        assert_eq!(g.component(0).dim(), 4);
        assert_eq!(g.component(1).dim(), 2);
    }

    #[test]
    fn graded_and_ungraded_subspaces() {
        let m2 = constructors::matrix_algebra(2, Q).unwrap();
        let comps = constructors::matrix_block_components(2, &[1, 1], Q);
        let g = ZGrading::new(&m2, comps).unwrap();
        let mut one = vec_ops::zero(4, Q);
        one[0] = Scalar::one(Q);
        one[3] = Scalar::one(Q);
        let scalars = Subspace::from_rows(4, Q, vec![one]).unwrap();
        assert!(g.is_graded_subspace(&scalars).unwrap());
        let mut mixed = vec_ops::zero(4, Q);
        mixed[0] = Scalar::one(Q);
        mixed[1] = Scalar::one(Q);
        let skewed = Subspace::from_rows(4, Q, vec![mixed]).unwrap();
        assert!(!g.is_graded_subspace(&skewed).unwrap());
        let slices = g.graded_slices(&scalars).unwrap();
        assert_eq!(slices.len(), 1);
        assert_eq!(slices[0].0, 0);
    }

    fn standard_sl2_grading(sl2: &FinAlgebra) -> ZGrading {
        // basis order (e, h, f)
        ZGrading::new(
            sl2,
            vec![
                (-1, vec![vec_ops::unit(3, 2, Q)]),
                (0, vec![vec_ops::unit(3, 1, Q)]),
                (1, vec![vec_ops::unit(3, 0, Q)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn whole_algebra_is_essential_when_certified() {
        let sl2 = constructors::sl(2, Q).unwrap();
        let g = standard_sl2_grading(&sl2);
        let full = Subspace::full(3, Q);
        let report = graded_ideal_tests(&sl2, &g, &full).unwrap();
        assert!(report.is_graded);
        assert!(report.is_ideal);
        assert_eq!(report.essential, Status::Pass);
    }

    #[test]
    fn traceless_part_of_gl2_has_annihilator_witness() {
        let gl2 = constructors::gl_minus(2, Q).unwrap();
        // deg e12 = 1, deg e21 = -1, diagonal in degree 0
        let g = ZGrading::new(
            &gl2,
            vec![
                (-1, vec![vec_ops::unit(4, 2, Q)]),
                (0, vec![vec_ops::unit(4, 0, Q), vec_ops::unit(4, 3, Q)]),
                (1, vec![vec_ops::unit(4, 1, Q)]),
            ],
        )
        .unwrap();
        let mut diff = vec_ops::zero(4, Q);
        diff[0] = Scalar::one(Q);
        diff[3] = Scalar::one(Q).neg();
        let traceless = Subspace::from_rows(
            4,
            Q,
            vec![vec_ops::unit(4, 1, Q), vec_ops::unit(4, 2, Q), diff],
        )
        .unwrap();
        let report = graded_ideal_tests(&gl2, &g, &traceless).unwrap();
        assert!(report.is_graded);
        assert!(report.is_ideal);
        // the scalars annihilate everything and miss the traceless part, so
        // non-essentiality is witnessed even though no semiprimeness
        // certificate exists for gl_2
        assert_eq!(report.essential, Status::Fail);
    }

    #[test]
    fn ungraded_candidate_reported() {
        let sl2 = constructors::sl(2, Q).unwrap();
        let g = standard_sl2_grading(&sl2);
        let mixed = Subspace::from_rows(
            3,
            Q,
            vec![vec_ops::add(
                &vec_ops::unit(3, 0, Q),
                &vec_ops::unit(3, 2, Q),
            )],
        )
        .unwrap();
        let report = graded_ideal_tests(&sl2, &g, &mixed).unwrap();
        assert!(!report.is_graded);
        assert!(!report.is_ideal);
        assert_eq!(report.essential, Status::Skip);
    }
}
