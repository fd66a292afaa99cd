//! Stock examples in fixed basis orders.
//!
//! Everything downstream (frozen dimension counts, formatted diagnostics,
//! grading components) depends on these orders, so they are part of the
//! contract:
//!
//! * full matrix algebra: e_{rc} at index r*n + c, labels `e{r+1}{c+1}`;
//! * upper triangular: pairs r <= c in lexicographic order;
//! * sl(n): strictly upper pairs in lexicographic order, then the Cartan
//!   differences h_k = e_{kk} - e_{k+1,k+1}, then strictly lower pairs in
//!   lexicographic order. For n = 2 this is the classical (e, h, f).

use crate::algebra::{AlgebraKind, FinAlgebra, StructureEntry};
use crate::error::{AlgError, Result};
use crate::field::{FieldTower, Scalar};
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

/// Coordinate vector of the matrix unit e_{rc} (zero-based) in the
/// [`matrix_algebra`] basis.
pub fn matrix_unit(n: usize, r: usize, c: usize, field: FieldTower) -> Vec<Scalar> {
    vec_ops::unit(n * n, r * n + c, field)
}

/// Sum of diagonal matrix units e_{kk} over the given rows, as a coordinate
/// vector in the [`matrix_algebra`] basis.
pub fn diagonal_idempotent<I>(n: usize, rows: I, field: FieldTower) -> Vec<Scalar>
where
    I: IntoIterator<Item = usize>,
{
    let mut v = vec_ops::zero(n * n, field);
    for k in rows {
        v[k * n + k] = Scalar::one(field);
    }
    v
}

/// Full matrix algebra M_n with its unit.
pub fn matrix_algebra(n: usize, field: FieldTower) -> Result<FinAlgebra> {
    let dim = n * n;
    let mut entries = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                entries.push(StructureEntry {
                    i: a * n + b,
                    j: b * n + d,
                    k: a * n + d,
                    c: Scalar::one(field),
                });
            }
        }
    }
    let unit = diagonal_idempotent(n, 0..n, field);
    let labels = (0..n)
        .flat_map(|r| (0..n).map(move |c| format!("e{}{}", r + 1, c + 1)))
        .collect();
    FinAlgebra::build(
        dim,
        AlgebraKind::Associative,
        field,
        entries,
        None,
        Some(unit),
        Some(labels),
    )
}

/// The transpose map e_{rc} -> e_{cr} on the [`matrix_algebra`] coordinates.
pub fn transpose_involution(n: usize, field: FieldTower) -> Matrix {
    let mut m = Matrix::zeros(n * n, n * n, field);
    for r in 0..n {
        for c in 0..n {
            m.set(c * n + r, r * n + c, Scalar::one(field));
        }
    }
    m
}

/// The map x -> g^{-1} x^T g on [`matrix_algebra`] coordinates. The caller's
/// g must make this an involution (g symmetric or antisymmetric suffices);
/// attachment to an algebra revalidates.
pub fn conjugation_involution(g: &Matrix) -> Result<Matrix> {
    let n = g.rows();
    if g.cols() != n {
        return Err(AlgError::DimensionMismatch("form matrix is not square".into()));
    }
    let ginv = g
        .inverse()
        .ok_or_else(|| AlgError::Precondition("form matrix is singular".into()))?;
    let field = g.field();
    let mut m = Matrix::zeros(n * n, n * n, field);
    for r in 0..n {
        for c in 0..n {
            for t in 0..n {
                for s in 0..n {
                    let v = ginv.at(r, s).mul(&g.at(t, c));
                    if !v.is_zero() {
                        m.set(r * n + c, t * n + s, v);
                    }
                }
            }
        }
    }
    Ok(m)
}

/// M_n with the transpose involution attached.
pub fn matrix_algebra_with_transpose(n: usize, field: FieldTower) -> Result<FinAlgebra> {
    matrix_algebra(n, field)?.with_involution(transpose_involution(n, field))
}

/// Block diagonal of m copies of [[0, 1], [-1, 0]], size 2m.
pub fn symplectic_gram(m: usize, field: FieldTower) -> Matrix {
    let mut g = Matrix::zeros(2 * m, 2 * m, field);
    for t in 0..m {
        g.set(2 * t, 2 * t + 1, Scalar::one(field));
        g.set(2 * t + 1, 2 * t, Scalar::from_i64(-1, field));
    }
    g
}

/// Block diagonal of m copies of [[0, 1], [1, 0]], size 2m (the split
/// symmetric form in hyperbolic pairs).
pub fn hyperbolic_gram(m: usize, field: FieldTower) -> Matrix {
    let mut g = Matrix::zeros(2 * m, 2 * m, field);
    for t in 0..m {
        g.set(2 * t, 2 * t + 1, Scalar::one(field));
        g.set(2 * t + 1, 2 * t, Scalar::one(field));
    }
    g
}

/// M_{2m} with the involution x -> g^{-1} x^T g for the symplectic form.
pub fn matrix_algebra_with_symplectic(m: usize, field: FieldTower) -> Result<FinAlgebra> {
    let g = symplectic_gram(m, field);
    matrix_algebra(2 * m, field)?.with_involution(conjugation_involution(&g)?)
}

/// Upper triangular matrices T_n, basis pairs r <= c lexicographically.
pub fn upper_triangular(n: usize, field: FieldTower) -> Result<FinAlgebra> {
    let mut pairs = Vec::new();
    for r in 0..n {
        for c in r..n {
            pairs.push((r, c));
        }
    }
    let idx = |r: usize, c: usize| pairs.iter().position(|p| *p == (r, c)).unwrap();
    let dim = pairs.len();
    let mut entries = Vec::new();
    for (a, b) in pairs.iter().copied() {
        for (bb, d) in pairs.iter().copied() {
            if b == bb {
                entries.push(StructureEntry {
                    i: idx(a, b),
                    j: idx(bb, d),
                    k: idx(a, d),
                    c: Scalar::one(field),
                });
            }
        }
    }
    let mut unit = vec_ops::zero(dim, field);
    for k in 0..n {
        unit[idx(k, k)] = Scalar::one(field);
    }
    let labels = pairs
        .iter()
        .map(|(r, c)| format!("e{}{}", r + 1, c + 1))
        .collect();
    FinAlgebra::build(
        dim,
        AlgebraKind::Associative,
        field,
        entries,
        None,
        Some(unit),
        Some(labels),
    )
}

/// gl(n): the full matrix algebra under the commutator bracket.
pub fn gl_minus(n: usize, field: FieldTower) -> Result<FinAlgebra> {
    matrix_algebra(n, field)?.minus_algebra()
}

/// Basis element kinds of [`sl`], in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlBasisElem {
    /// Matrix unit e_{rc}, r != c, zero-based.
    Off(usize, usize),
    /// e_{kk} - e_{k+1,k+1}, zero-based k.
    Cartan(usize),
}

pub fn sl_basis_layout(n: usize) -> Vec<SlBasisElem> {
    let mut out = Vec::new();
    for r in 0..n {
        for c in (r + 1)..n {
            out.push(SlBasisElem::Off(r, c));
        }
    }
    for k in 0..(n - 1) {
        out.push(SlBasisElem::Cartan(k));
    }
    for r in 1..n {
        for c in 0..r {
            out.push(SlBasisElem::Off(r, c));
        }
    }
    out
}

/// Traceless matrices sl(n) under the commutator.
pub fn sl(n: usize, field: FieldTower) -> Result<FinAlgebra> {
    let gl = gl_minus(n, field)?;
    let layout = sl_basis_layout(n);
    let mut basis = Vec::with_capacity(layout.len());
    let mut labels = Vec::with_capacity(layout.len());
    for elem in &layout {
        match *elem {
            SlBasisElem::Off(r, c) => {
                basis.push(matrix_unit(n, r, c, field));
                labels.push(format!("e{}{}", r + 1, c + 1));
            }
            SlBasisElem::Cartan(k) => {
                let mut h = vec_ops::zero(n * n, field);
                h[k * n + k] = Scalar::one(field);
                h[(k + 1) * n + k + 1] = Scalar::from_i64(-1, field);
                basis.push(h);
                labels.push(format!("h{}", k + 1));
            }
        }
    }
    gl.subalgebra_with_basis(&basis)?.with_labels(labels)
}

/// {x : x^T g + g x = 0} under the commutator, with its embedding into the
/// [`matrix_algebra`] coordinates. Covers both orthogonal (g symmetric) and
/// symplectic (g antisymmetric) types.
pub fn skew_with_form(g: &Matrix) -> Result<(FinAlgebra, Subspace)> {
    let n = g.rows();
    if g.cols() != n {
        return Err(AlgError::DimensionMismatch("form matrix is not square".into()));
    }
    let field = g.field();
    // Row (r, c) of the condition: sum_s x_{sr} g_{sc} + g_{rs} x_{sc} = 0.
    let mut system = Matrix::zeros(n * n, n * n, field);
    for r in 0..n {
        for c in 0..n {
            for s in 0..n {
                let a = system.at(r * n + c, s * n + r).add(&g.at(s, c));
                system.set(r * n + c, s * n + r, a);
                let b = system.at(r * n + c, s * n + c).add(&g.at(r, s));
                system.set(r * n + c, s * n + c, b);
            }
        }
    }
    let space = Subspace::from_matrix(&system.nullspace());
    let alg = gl_minus(n, field)?.subalgebra_on(&space)?;
    Ok((alg, space))
}

/// so(n) for the identity form: antisymmetric matrices.
pub fn so_identity(n: usize, field: FieldTower) -> Result<(FinAlgebra, Subspace)> {
    skew_with_form(&Matrix::identity(n, field))
}

/// Split orthogonal algebra on 2m hyperbolic coordinates.
pub fn so_split(m: usize, field: FieldTower) -> Result<(FinAlgebra, Subspace)> {
    skew_with_form(&hyperbolic_gram(m, field))
}

/// sp(2m) for the interleaved symplectic form.
pub fn sp(m: usize, field: FieldTower) -> Result<(FinAlgebra, Subspace)> {
    skew_with_form(&symplectic_gram(m, field))
}

/// Outer direct sum. Units combine when both are present; involutions and
/// labels are kept only when both summands carry them.
pub fn direct_sum(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra> {
    if a.kind() != b.kind() {
        return Err(AlgError::Precondition(
            "direct summands have different kinds".into(),
        ));
    }
    if a.field() != b.field() {
        return Err(AlgError::FieldMismatch(a.field(), b.field()));
    }
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let field = a.field();
    let mut entries: Vec<StructureEntry> = a.structure_entries().collect();
    for e in b.structure_entries() {
        entries.push(StructureEntry {
            i: e.i + da,
            j: e.j + da,
            k: e.k + da,
            c: e.c,
        });
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(ua), Some(ub)) => {
            let mut u = ua.to_vec();
            u.extend(ub.iter().cloned());
            Some(u)
        }
        _ => None,
    };
    let involution = match (a.involution(), b.involution()) {
        (Some(ma), Some(mb)) => {
            let mut m = Matrix::zeros(dim, dim, field);
            for r in 0..da {
                for c in 0..da {
                    m.set(r, c, ma.at(r, c).clone());
                }
            }
            for r in 0..db {
                for c in 0..db {
                    m.set(da + r, da + c, mb.at(r, c).clone());
                }
            }
            Some(m)
        }
        _ => None,
    };
    let labels = match (a.labels(), b.labels()) {
        (Some(la), Some(lb)) => Some(
            la.iter()
                .map(|s| format!("l.{s}"))
                .chain(lb.iter().map(|s| format!("r.{s}")))
                .collect(),
        ),
        _ => None,
    };
    FinAlgebra::build(dim, a.kind(), field, entries, involution, unit, labels)
}

/// Block index of a matrix row/column under a partition of sizes `split`.
pub fn block_index(split: &[usize], i: usize) -> usize {
    let mut acc = 0;
    for (b, s) in split.iter().enumerate() {
        acc += s;
        if i < acc {
            return b;
        }
    }
    panic!("index {i} beyond partition of total {acc}");
}

/// Degree of the matrix unit e_{rc} in the block grading: upper right blocks
/// are positive, so deg e_{rc} = block(c) - block(r).
pub fn block_degree(split: &[usize], r: usize, c: usize) -> i64 {
    block_index(split, c) as i64 - block_index(split, r) as i64
}

/// Graded components of M_n for a block partition, as (degree, basis rows)
/// with degrees ascending.
pub fn matrix_block_components(
    n: usize,
    split: &[usize],
    field: FieldTower,
) -> Vec<(i64, Vec<Vec<Scalar>>)> {
    assert_eq!(split.iter().sum::<usize>(), n, "partition must total {n}");
    let radius = split.len() as i64 - 1;
    let mut out: Vec<(i64, Vec<Vec<Scalar>>)> =
        (-radius..=radius).map(|d| (d, Vec::new())).collect();
    for r in 0..n {
        for c in 0..n {
            let d = block_degree(split, r, c);
            let slot = (d + radius) as usize;
            out[slot].1.push(matrix_unit(n, r, c, field));
        }
    }
    out
}

/// Graded components of [`sl`] for a block partition: off-diagonal units at
/// their block degree, Cartan differences at zero.
pub fn sl_block_components(
    n: usize,
    split: &[usize],
    field: FieldTower,
) -> Vec<(i64, Vec<Vec<Scalar>>)> {
    assert_eq!(split.iter().sum::<usize>(), n, "partition must total {n}");
    let layout = sl_basis_layout(n);
    let dim = layout.len();
    let radius = split.len() as i64 - 1;
    let mut out: Vec<(i64, Vec<Vec<Scalar>>)> =
        (-radius..=radius).map(|d| (d, Vec::new())).collect();
    for (pos, elem) in layout.iter().enumerate() {
        let d = match *elem {
            SlBasisElem::Off(r, c) => block_degree(split, r, c),
            SlBasisElem::Cartan(_) => 0,
        };
        let slot = (d + radius) as usize;
        out[slot].1.push(vec_ops::unit(dim, pos, field));
    }
    out
}
