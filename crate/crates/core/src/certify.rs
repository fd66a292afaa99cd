//! Structure certificates: radicals, the Killing form, centroids.
//!
//! Every function either proves its statement from finite linear algebra or
//! refuses with [`AlgError::Inconclusive`] when its hypotheses (kind,
//! characteristic zero) do not hold. None of them guesses.

use crate::algebra::{AlgebraKind, FinAlgebra};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::matrix::{vec_ops, Matrix};
use crate::solver::{NullspaceBuilder, SparseRow};
use crate::subspace::Subspace;

/// Gram matrix of the trace form (x, y) -> tr(L_{xy}) on basis pairs.
/// Associative algebras only.
pub fn trace_form_gram(alg: &FinAlgebra) -> Result<Matrix> {
    if alg.kind() != AlgebraKind::Associative {
        return Err(AlgError::Precondition(
            "trace form is defined on associative algebras".into(),
        ));
    }
    let dim = alg.dim();
    let field = alg.field();
    // tr(L_{e_k}) once per basis element
    let mut basis_traces = Vec::with_capacity(dim);
    for k in 0..dim {
        let mut t = Scalar::zero(field);
        for m in 0..dim {
            for (out, c) in alg.basis_product(k, m) {
                if *out == m {
                    t = t.add(c);
                }
            }
        }
        basis_traces.push(t);
    }
    let mut g = Matrix::zeros(dim, dim, field);
    for i in 0..dim {
        for j in 0..dim {
            let mut v = Scalar::zero(field);
            for (k, c) in alg.basis_product(i, j) {
                v = v.add(&c.mul(&basis_traces[*k]));
            }
            g.set(i, j, v);
        }
    }
    Ok(g)
}

/// Radical of an associative algebra in characteristic zero, as the kernel of
/// the trace form. This is the classical trace criterion: over such fields
/// x lies in the Jacobson radical exactly when tr(L_{xy}) vanishes for all y.
pub fn associative_radical(alg: &FinAlgebra) -> Result<Subspace> {
    if alg.field().characteristic() != 0 {
        return Err(AlgError::Inconclusive(
            "trace criterion for the radical needs characteristic zero".into(),
        ));
    }
    let g = trace_form_gram(alg)?;
    Ok(Subspace::from_matrix(&g.nullspace()))
}

/// Gram matrix of the Killing form (x, y) -> tr(ad x ad y). Lie algebras only.
pub fn killing_gram(alg: &FinAlgebra) -> Result<Matrix> {
    if alg.kind() != AlgebraKind::Lie {
        return Err(AlgError::Precondition(
            "Killing form is defined on Lie algebras".into(),
        ));
    }
    let dim = alg.dim();
    let field = alg.field();
    let ads: Vec<Matrix> = (0..dim)
        .map(|i| alg.ad(&vec_ops::unit(dim, i, field)))
        .collect();
    let mut g = Matrix::zeros(dim, dim, field);
    for i in 0..dim {
        for j in 0..=i {
            let mut t = Scalar::zero(field);
            for r in 0..dim {
                for c in 0..dim {
                    let a = ads[i].at(r, c);
                    if a.is_zero() {
                        continue;
                    }
                    t = t.add(&a.mul(ads[j].at(c, r)));
                }
            }
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    Ok(g)
}

pub fn killing_det(alg: &FinAlgebra) -> Result<Scalar> {
    killing_gram(alg)?.determinant()
}

/// Semisimplicity over characteristic zero: trace-form kernel for associative
/// algebras, Killing nondegeneracy (Cartan's criterion) for Lie algebras.
/// At finite dimension over such fields this coincides with semiprimeness,
/// which is how the callers in the quotient drivers use it.
pub fn is_semisimple(alg: &FinAlgebra) -> Result<bool> {
    if alg.field().characteristic() != 0 {
        return Err(AlgError::Inconclusive(
            "semisimplicity certificates need characteristic zero".into(),
        ));
    }
    match alg.kind() {
        AlgebraKind::Associative => Ok(associative_radical(alg)?.dim() == 0),
        AlgebraKind::Lie => Ok(!killing_det(alg)?.is_zero()),
    }
}

/// See [`is_semisimple`]; separate name because call sites assert the weaker
/// statement.
pub fn is_semiprime(alg: &FinAlgebra) -> Result<bool> {
    is_semisimple(alg)
}

/// Centroid: operators T with T(xy) = T(x)y = xT(y), as flattened matrices
/// (unknown r*dim + c is the e_r coefficient of T(e_c)).
pub fn centroid(alg: &FinAlgebra) -> Result<Subspace> {
    let dim = alg.dim();
    let field = alg.field();
    let mut builder = NullspaceBuilder::new(dim * dim, field);
    // bucket[k] = pairs (l, coeff of e_k in e_i·e_l), rebuilt per i
    let mut rows = Vec::new();
    for i in 0..dim {
        let mut bucket: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
        for l in 0..dim {
            for (k, c) in alg.basis_product(i, l) {
                bucket[*k].push((l, c.clone()));
            }
        }
        for j in 0..dim {
            for k in 0..dim {
                // T(e_i e_j)_k - (e_i T(e_j))_k = 0
                let mut terms: Vec<(usize, Scalar)> = alg
                    .basis_product(i, j)
                    .iter()
                    .map(|(m, c)| (k * dim + m, c.clone()))
                    .collect();
                for (l, c) in &bucket[k] {
                    terms.push((l * dim + j, c.neg()));
                }
                if !terms.is_empty() {
                    rows.push(SparseRow::from_terms(terms));
                }
            }
        }
    }
    builder.impose(&rows);
    if alg.kind() == AlgebraKind::Associative {
        // For Lie brackets the other slot follows by antisymmetry; here it
        // does not, so impose T(e_i e_j)_k - (T(e_i) e_j)_k = 0 as well.
        let mut rows = Vec::new();
        for j in 0..dim {
            let mut bucket: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim];
            for l in 0..dim {
                for (k, c) in alg.basis_product(l, j) {
                    bucket[*k].push((l, c.clone()));
                }
            }
            for i in 0..dim {
                for k in 0..dim {
                    let mut terms: Vec<(usize, Scalar)> = alg
                        .basis_product(i, j)
                        .iter()
                        .map(|(m, c)| (k * dim + m, c.clone()))
                        .collect();
                    for (l, c) in &bucket[k] {
                        terms.push((l * dim + i, c.neg()));
                    }
                    if !terms.is_empty() {
                        rows.push(SparseRow::from_terms(terms));
                    }
                }
            }
        }
        builder.impose(&rows);
    }
    Ok(builder.into_subspace())
}

pub fn centroid_dim(alg: &FinAlgebra) -> Result<usize> {
    Ok(centroid(alg)?.dim())
}

/// Central simplicity certificate: semisimple with one-dimensional centroid.
/// A semisimple algebra splits into simple ideals and its centroid contains
/// the projection onto each, so one dimension forces a single summand.
pub fn is_central_simple(alg: &FinAlgebra) -> Result<bool> {
    Ok(is_semisimple(alg)? && centroid_dim(alg)? == 1)
}

/// Essentiality of a two-sided ideal, certified through semiprimeness: in a
/// semiprime algebra an ideal is essential exactly when its annihilator
/// vanishes.
pub fn is_essential_ideal(alg: &FinAlgebra, ideal: &Subspace) -> Result<bool> {
    alg.is_ideal(ideal)?;
    if !is_semiprime(alg)? {
        return Err(AlgError::Inconclusive(
            "essentiality via annihilators needs a semiprimeness certificate".into(),
        ));
    }
    let full = Subspace::full(alg.dim(), alg.field());
    Ok(alg.annihilator_in(&full, ideal)?.dim() == 0)
}

/// In a semisimple algebra every ideal is a direct summand, so the only
/// essential ideal is the algebra itself. Returns the certificate.
pub fn only_essential_ideal_is_whole(alg: &FinAlgebra) -> Result<bool> {
    is_semisimple(alg)
}
