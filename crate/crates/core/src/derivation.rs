//! Derivation spaces, computed as the nullspace of the Leibniz system.
//!
//! A derivation from a subalgebra T into its parent S is a linear map with
//! δ(xy) = δ(x)y + xδ(y). Writing δ as a dim S × dim T matrix X over the
//! canonical basis of T, the identity on a basis pair (a,b) becomes one
//! sparse linear row per output coordinate, and the whole space falls out of
//! [`NullspaceBuilder`]. Maps are flattened row-major, entry (k,m) at
//! k·dim T + m, so the space of derivations is an ordinary [`Subspace`] and
//! graded pieces are subspaces of the same coordinate space.
//!
//! When T = S the commutator of two derivations is again one; the solver
//! builds those structure constants and revalidates them as a Lie algebra,
//! which doubles as a consistency check on the computed basis.

use crate::algebra::{AlgebraKind, FinAlgebra, StructureEntry};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::grading::ZGrading;
use crate::matrix::{vec_ops, Matrix};
use crate::solver::{NullspaceBuilder, SparseRow};
use crate::subspace::Subspace;

/// Solution space of the Leibniz system for maps T → S.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    domain: Subspace,
    codomain: FinAlgebra,
    space: Subspace,
    lie: Option<FinAlgebra>,
    graded_pieces: Option<Vec<(i64, Subspace)>>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn domain(&self) -> &Subspace {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAlgebra {
        &self.codomain
    }

    /// Flattened maps as a subspace of k^(dim S · dim T).
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Bracket structure on the canonical basis, present when T = S.
    pub fn lie_structure(&self) -> Option<&FinAlgebra> {
        self.lie.as_ref()
    }

    pub fn graded_pieces(&self) -> Option<&[(i64, Subspace)]> {
        self.graded_pieces.as_deref()
    }

    /// The i-th canonical basis map as a dim S × dim T matrix.
    pub fn basis_map(&self, i: usize) -> Matrix {
        let row: Vec<Scalar> = self.space.basis().row(i).to_vec();
        Matrix::unflatten(
            &row,
            self.codomain.dim(),
            self.domain.dim(),
            self.space.field(),
        )
        .expect("stored rows have length dim S · dim T")
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.basis_map(i)).collect()
    }

    pub fn contains_map(&self, m: &Matrix) -> bool {
        self.space.contains(&m.flatten())
    }

    /// Coordinates of a map in the canonical basis, when it lies in the space.
    pub fn map_coords(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.space.coords_of(&m.flatten())
    }
}

/// Derivations T → S. The domain must be closed under the product of S,
/// which is verified pair by pair. For T = S the Lie structure of Der(S) is
/// attached.
pub fn derivation_space(domain: &Subspace, codomain: &FinAlgebra) -> Result<DerivationSpace> {
    let n = codomain.dim();
    if domain.ambient() != n {
        return Err(AlgError::DimensionMismatch(format!(
            "domain lives in dimension {}, algebra has {}",
            domain.ambient(),
            n
        )));
    }
    if domain.field() != codomain.field() {
        return Err(AlgError::FieldMismatch(domain.field(), codomain.field()));
    }
    let field = codomain.field();
    let t = domain.dim();
    let basis: Vec<&[Scalar]> = domain.basis_rows().collect();
    let left: Vec<Matrix> = basis.iter().map(|x| codomain.left_mul_matrix(x)).collect();
    let right: Vec<Matrix> = basis.iter().map(|x| codomain.right_mul_matrix(x)).collect();

    let mut builder = NullspaceBuilder::new(n * t, field);
    for a in 0..t {
        for b in 0..t {
            if codomain.kind() == AlgebraKind::Lie && a >= b {
                // [x,x] = 0 gives the trivial row, and (b,a) is the negative
                // of (a,b).
                continue;
            }
            let prod = codomain.product(basis[a], basis[b]);
            let tau = domain
                .coords_of(&prod)
                .ok_or(AlgError::NotSubalgebra(a, b))?;
            let mut rows = Vec::new();
            for k in 0..n {
                let mut terms: Vec<(usize, Scalar)> = Vec::new();
                for (m, tm) in tau.iter().enumerate() {
                    if !tm.is_zero() {
                        terms.push((k * t + m, tm.clone()));
                    }
                }
                for l in 0..n {
                    let v = right[b].at(k, l);
                    if !v.is_zero() {
                        terms.push((l * t + a, v.neg()));
                    }
                }
                for l in 0..n {
                    let v = left[a].at(k, l);
                    if !v.is_zero() {
                        terms.push((l * t + b, v.neg()));
                    }
                }
                if !terms.is_empty() {
                    rows.push(SparseRow::from_terms(terms));
                }
            }
            builder.impose(&rows);
        }
    }
    let space = builder.into_subspace();
    let lie = if t == n {
        Some(commutator_structure(&space, n, codomain.field())?)
    } else {
        None
    };
    Ok(DerivationSpace {
        domain: domain.clone(),
        codomain: codomain.clone(),
        space,
        lie,
        graded_pieces: None,
    })
}

/// Der(S): derivations of the whole algebra into itself.
pub fn derivations(alg: &FinAlgebra) -> Result<DerivationSpace> {
    derivation_space(&Subspace::full(alg.dim(), alg.field()), alg)
}

/// Bracket table of a space of n×n matrices closed under commutator, in its
/// canonical basis. Coordinates are read off the pivot columns of the stored
/// reduced basis, so each commutator costs two products and one scan.
fn commutator_structure(
    space: &Subspace,
    n: usize,
    field: crate::field::FieldTower,
) -> Result<FinAlgebra> {
    let r = space.dim();
    let pivots = pivot_columns(space);
    let mats: Vec<Matrix> = (0..r)
        .map(|i| {
            Matrix::unflatten(space.basis().row(i), n, n, field)
                .expect("stored rows have length n²")
        })
        .collect();
    let mut entries = Vec::new();
    for i in 0..r {
        for j in (i + 1)..r {
            let c = mats[i].commutator(&mats[j])?;
            let flat = c.flatten();
            debug_assert!(
                space.contains(&flat),
                "commutator of derivations left the computed space"
            );
            for (k, &p) in pivots.iter().enumerate() {
                if !flat[p].is_zero() {
                    entries.push(StructureEntry {
                        i,
                        j,
                        k,
                        c: flat[p].clone(),
                    });
                    entries.push(StructureEntry {
                        i: j,
                        j: i,
                        k,
                        c: flat[p].neg(),
                    });
                }
            }
        }
    }
    FinAlgebra::build(r, AlgebraKind::Lie, field, entries, None, None, None)
}

fn pivot_columns(space: &Subspace) -> Vec<usize> {
    space
        .basis_rows()
        .map(|row| {
            row.iter()
                .position(|v| !v.is_zero())
                .expect("basis rows are nonzero")
        })
        .collect()
}

/// The inner derivation attached to x: ad_x for Lie algebras, the commutator
/// map y ↦ xy − yx for associative ones.
pub fn commutator_derivation(alg: &FinAlgebra, x: &[Scalar]) -> Matrix {
    match alg.kind() {
        AlgebraKind::Lie => alg.ad(x),
        AlgebraKind::Associative => {
            let l = alg.left_mul_matrix(x);
            let r = alg.right_mul_matrix(x);
            l.sub(&r).expect("same shape")
        }
    }
}

/// Span of the inner derivations of a Lie algebra, inside the flattened map
/// space.
pub fn inner_derivations(l: &FinAlgebra) -> Result<Subspace> {
    if l.kind() != AlgebraKind::Lie {
        return Err(AlgError::Precondition(
            "inner derivations are defined for Lie algebras".into(),
        ));
    }
    inner_span(l)
}

/// Same span for either kind, used when comparing against full derivation
/// spaces.
pub fn inner_span(alg: &FinAlgebra) -> Result<Subspace> {
    let n = alg.dim();
    let field = alg.field();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let e = vec_ops::unit(n, i, field);
        let flat = commutator_derivation(alg, &e).flatten();
        if !vec_ops::is_zero(&flat) {
            rows.push(flat);
        }
    }
    Subspace::from_rows(n * n, field, rows)
}

/// Kernel of x ↦ (its inner derivation). Coincides with the center for both
/// kinds.
pub fn ad_kernel(alg: &FinAlgebra) -> Result<Subspace> {
    let n = alg.dim();
    let field = alg.field();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| commutator_derivation(alg, &vec_ops::unit(n, i, field)).flatten())
        .collect();
    let m = Matrix::from_rows(rows, n * n, field)?;
    Ok(Subspace::from_matrix(&m.transpose().nullspace()))
}

/// Associative envelope of the adjoint maps: the span of all words
/// ad_{x_1}···ad_{x_k}, saturated until the dimension stabilizes, with its
/// product structure.
pub fn multiplication_algebra(l: &FinAlgebra) -> Result<FinAlgebra> {
    if l.kind() != AlgebraKind::Lie {
        return Err(AlgError::Precondition(
            "the multiplication algebra is built from adjoint maps of a Lie algebra".into(),
        ));
    }
    let n = l.dim();
    let field = l.field();
    let gens: Vec<Matrix> = (0..n).map(|i| l.ad(&vec_ops::unit(n, i, field))).collect();
    let gen_rows: Vec<Vec<Scalar>> = gens
        .iter()
        .map(|g| g.flatten())
        .filter(|f| !vec_ops::is_zero(f))
        .collect();
    let mut span = Subspace::from_rows(n * n, field, gen_rows)?;
    loop {
        let mut fresh = Vec::new();
        for g in &gens {
            for row in span.basis_rows() {
                let w = Matrix::unflatten(row, n, n, field)?;
                let prod = g.mul(&w)?.flatten();
                if !span.contains(&prod) {
                    fresh.push(prod);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        span = span.sum(&Subspace::from_rows(n * n, field, fresh)?)?;
    }
    let d = span.dim();
    let mats: Vec<Matrix> = (0..d)
        .map(|i| Matrix::unflatten(span.basis().row(i), n, n, field).expect("rows of length n²"))
        .collect();
    let mut entries = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = mats[i].mul(&mats[j])?.flatten();
            let coords = span
                .coords_of(&prod)
                .expect("word products stay inside the saturated span");
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push(StructureEntry { i, j, k, c });
                }
            }
        }
    }
    let unit = span.coords_of(&Matrix::identity(n, field).flatten());
    FinAlgebra::build(d, AlgebraKind::Associative, field, entries, None, unit, None)
}

/// Derivations of an associative algebra commuting with its involution. Cut
/// out of Der(A) by the condition δ∘* = *∘δ, then rechecked to be closed
/// under commutator.
pub fn sderivations(a: &FinAlgebra) -> Result<DerivationSpace> {
    if a.kind() != AlgebraKind::Associative {
        return Err(AlgError::Precondition(
            "starred derivations are defined for associative algebras".into(),
        ));
    }
    let inv = a
        .involution()
        .ok_or_else(|| AlgError::Precondition("algebra has no involution attached".into()))?
        .clone();
    if a.field().characteristic() == 2 {
        return Err(AlgError::Precondition(
            "starred derivations need characteristic other than two".into(),
        ));
    }
    let der = derivations(a)?;
    let n = a.dim();
    let field = a.field();
    let r = der.dim();
    let defects: Vec<Vec<Scalar>> = (0..r)
        .map(|i| {
            let x = der.basis_map(i);
            let d = x.mul(&inv)?.sub(&inv.mul(&x)?)?;
            Ok(d.flatten())
        })
        .collect::<Result<_>>()?;
    let defect_matrix = Matrix::from_rows(defects, n * n, field)?;
    let kernel = defect_matrix.transpose().nullspace();
    let rows: Vec<Vec<Scalar>> = (0..kernel.rows())
        .map(|i| der.space().vec_from_coords(kernel.row(i)))
        .collect();
    let space = Subspace::from_rows(n * n, field, rows)?;
    for i in 0..space.dim() {
        for j in (i + 1)..space.dim() {
            let x = Matrix::unflatten(space.basis().row(i), n, n, field)?;
            let y = Matrix::unflatten(space.basis().row(j), n, n, field)?;
            let c = x.commutator(&y)?;
            if !space.contains(&c.flatten()) {
                return Err(AlgError::Precondition(
                    "starred derivations failed to close under commutator".into(),
                ));
            }
        }
    }
    let lie = commutator_structure(&space, n, field)?;
    Ok(DerivationSpace {
        domain: Subspace::full(n, field),
        codomain: a.clone(),
        space,
        lie: Some(lie),
        graded_pieces: None,
    })
}

/// Homogeneous pieces of a derivation space relative to gradings of domain
/// and codomain.
#[derive(Debug, Clone)]
pub struct GradedDerPieces {
    /// Nonzero pieces, ascending degree, as subspaces of the flattened map
    /// space.
    pub pieces: Vec<(i64, Subspace)>,
    /// Whether the pieces are independent.
    pub direct: bool,
    /// Whether the pieces sum to the whole space.
    pub exhausts: bool,
}

impl GradedDerPieces {
    pub fn piece(&self, d: i64) -> Option<&Subspace> {
        self.pieces.iter().find(|(deg, _)| *deg == d).map(|(_, s)| s)
    }

    pub fn piece_dim(&self, d: i64) -> usize {
        self.piece(d).map_or(0, Subspace::dim)
    }

    pub fn dims(&self) -> Vec<(i64, usize)> {
        self.pieces.iter().map(|(d, s)| (*d, s.dim())).collect()
    }
}

/// Pieces over explicit homogeneous slices. The slice lists need not span
/// the domain or codomain; the piece of degree σ consists of the maps
/// sending each domain slice of degree τ into the codomain slice of degree
/// τ+σ, with a missing target slice read as zero. Whether the pieces add up
/// to the whole space is reported, not assumed.
pub fn graded_pieces_over_slices(
    d: &DerivationSpace,
    domain_slices: &[(i64, Subspace)],
    codomain_slices: &[(i64, Subspace)],
) -> Result<GradedDerPieces> {
    let field = d.space().field();
    let n = d.codomain().dim();
    let r = d.dim();
    let maps = d.basis_maps();

    // Domain slices in domain coordinates, kept with their degrees.
    let mut slice_coords: Vec<(i64, Vec<Vec<Scalar>>)> = Vec::new();
    for (deg, slice) in domain_slices {
        let mut coords = Vec::new();
        for v in slice.basis_rows() {
            let c = d.domain.coords_of(v).ok_or_else(|| {
                AlgError::Precondition(format!(
                    "domain slice of degree {deg} is not contained in the domain"
                ))
            })?;
            coords.push(c);
        }
        slice_coords.push((*deg, coords));
    }

    // Functionals cutting out each codomain slice: rows spanning the kernel
    // of the slice basis, by double annihilation.
    let target_functionals = |deg: i64| -> Vec<Vec<Scalar>> {
        for (sd, slice) in codomain_slices {
            if *sd == deg {
                let k = slice.basis().nullspace();
                return (0..k.rows()).map(|i| k.row(i).to_vec()).collect();
            }
        }
        (0..n).map(|i| vec_ops::unit(n, i, field)).collect()
    };

    let mut degrees: Vec<i64> = Vec::new();
    for (dt, _) in &slice_coords {
        for (ds, _) in codomain_slices {
            let sigma = ds - dt;
            if !degrees.contains(&sigma) {
                degrees.push(sigma);
            }
        }
    }
    degrees.sort_unstable();

    let mut pieces = Vec::new();
    for &sigma in &degrees {
        let mut constraint_rows: Vec<Vec<Scalar>> = Vec::new();
        for (tau, coords) in &slice_coords {
            let funcs = target_functionals(tau + sigma);
            for c in coords {
                let images: Vec<Vec<Scalar>> =
                    maps.iter().map(|m| m.mul_vec(c)).collect::<Result<_>>()?;
                for u in &funcs {
                    let row: Vec<Scalar> = images
                        .iter()
                        .map(|w| vec_ops::dot(u, w))
                        .collect();
                    if !vec_ops::is_zero(&row) {
                        constraint_rows.push(row);
                    }
                }
            }
        }
        let coeffs = if constraint_rows.is_empty() {
            Matrix::identity(r, field)
        } else {
            Matrix::from_rows(constraint_rows, r, field)?.nullspace()
        };
        let rows: Vec<Vec<Scalar>> = (0..coeffs.rows())
            .map(|i| d.space().vec_from_coords(coeffs.row(i)))
            .collect();
        let piece = Subspace::from_rows(n * d.domain.dim(), field, rows)?;
        if piece.dim() > 0 {
            pieces.push((sigma, piece));
        }
    }

    let mut sum = Subspace::zero(n * d.domain.dim(), field);
    let mut dim_total = 0;
    for (_, p) in &pieces {
        dim_total += p.dim();
        sum = sum.sum(p)?;
    }
    Ok(GradedDerPieces {
        direct: dim_total == sum.dim(),
        exhausts: sum.dim() == r,
        pieces,
    })
}

/// Decomposes along validated gradings and records the pieces on the space.
pub fn graded_der_decompose(
    d: &mut DerivationSpace,
    domain_grading: &ZGrading,
    codomain_grading: &ZGrading,
) -> Result<GradedDerPieces> {
    if domain_grading.ambient_dim() != d.domain.ambient()
        || codomain_grading.ambient_dim() != d.codomain.dim()
    {
        return Err(AlgError::DimensionMismatch(
            "gradings do not match the derivation space".into(),
        ));
    }
    let domain_slices = domain_grading.graded_slices(&d.domain)?;
    let codomain_slices: Vec<(i64, Subspace)> = codomain_grading
        .support()
        .into_iter()
        .map(|deg| (deg, codomain_grading.component(deg)))
        .collect();
    let report = graded_pieces_over_slices(d, &domain_slices, &codomain_slices)?;
    d.graded_pieces = Some(report.pieces.clone());
    Ok(report)
}

/// First domain basis pair where δ violates the Leibniz identity, if any.
pub fn leibniz_defect(
    codomain: &FinAlgebra,
    domain: &Subspace,
    delta: &Matrix,
) -> Result<Option<(usize, usize)>> {
    let basis: Vec<&[Scalar]> = domain.basis_rows().collect();
    let t = basis.len();
    let images: Vec<Vec<Scalar>> = (0..t)
        .map(|i| {
            let coords = vec_ops::unit(t, i, domain.field());
            delta.mul_vec(&coords)
        })
        .collect::<Result<_>>()?;
    for a in 0..t {
        for b in 0..t {
            let prod = codomain.product(basis[a], basis[b]);
            let tau = domain
                .coords_of(&prod)
                .ok_or(AlgError::NotSubalgebra(a, b))?;
            let lhs = delta.mul_vec(&tau)?;
            let mut rhs = codomain.product(&images[a], basis[b]);
            let right = codomain.product(basis[a], &images[b]);
            for (x, y) in rhs.iter_mut().zip(right) {
                *x = x.add(&y);
            }
            if lhs != rhs {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}
