//! Incremental kernel computation for large sparse homogeneous systems.
//!
//! Derivation and centroid solves produce systems with thousands of very
//! sparse rows over a few hundred unknowns. Running a dense elimination on the
//! stacked system is wasteful; instead we maintain a basis of the current
//! solution space (initially the whole coordinate space, as sparse unit
//! vectors) and restrict it batch by batch. Each batch only touches the basis
//! vectors whose support meets the batch's support, so the overall work tracks
//! the actual fill-in instead of the worst case.

use std::collections::BTreeMap;

use crate::field::{FieldTower, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// A sparse linear form over the unknowns: sorted (index, coefficient) pairs.
#[derive(Debug, Clone, Default)]
pub struct SparseRow {
    entries: Vec<(usize, Scalar)>,
}

impl SparseRow {
    pub fn new() -> SparseRow {
        SparseRow {
            entries: Vec::new(),
        }
    }

    /// Builds a row from unsorted terms, merging duplicate indices.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseRow {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (idx, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.remove(&idx) {
                Some(prev) => {
                    let s = prev.add(&c);
                    if !s.is_zero() {
                        map.insert(idx, s);
                    }
                }
                None => {
                    map.insert(idx, c);
                }
            }
        }
        SparseRow {
            entries: map.into_iter().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }
}

type SparseVec = Vec<(usize, Scalar)>;

fn sparse_get<'a>(v: &'a SparseVec, idx: usize) -> Option<&'a Scalar> {
    v.binary_search_by_key(&idx, |e| e.0)
        .ok()
        .map(|i| &v[i].1)
}

/// new = a + c·b, both sorted sparse.
fn sparse_add_scaled(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => {
                if ia < ib {
                    out.push((*ia, va.clone()));
                    i += 1;
                } else if ib < ia {
                    let v = c.mul(vb);
                    if !v.is_zero() {
                        out.push((*ib, v));
                    }
                    j += 1;
                } else {
                    let v = va.add(&c.mul(vb));
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                let v = c.mul(vb);
                if !v.is_zero() {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Maintains a basis of the joint kernel of all imposed rows.
pub struct NullspaceBuilder {
    n: usize,
    field: FieldTower,
    basis: Vec<SparseVec>,
}

impl NullspaceBuilder {
    /// Starts with the full coordinate space of dimension `n`.
    pub fn new(n: usize, field: FieldTower) -> NullspaceBuilder {
        let basis = (0..n)
            .map(|i| vec![(i, Scalar::one(field))])
            .collect();
        NullspaceBuilder { n, field, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Restricts the current space to the kernel of a batch of rows.
    pub fn impose(&mut self, rows: &[SparseRow]) {
        let rows: Vec<&SparseRow> = rows.iter().filter(|r| !r.is_empty()).collect();
        if rows.is_empty() || self.basis.is_empty() {
            return;
        }
        // Coordinates touched by this batch.
        let mut coords: Vec<usize> = rows
            .iter()
            .flat_map(|r| r.entries().iter().map(|e| e.0))
            .collect();
        coords.sort_unstable();
        coords.dedup();

        // Basis vectors whose support meets those coordinates.
        let mut touched = Vec::new();
        for (s, v) in self.basis.iter().enumerate() {
            if coords.iter().any(|&c| sparse_get(v, c).is_some()) {
                touched.push(s);
            }
        }
        if touched.is_empty() {
            return;
        }

        // Evaluate the batch on the touched vectors: P[e][t].
        let mut p = Matrix::zeros(rows.len(), touched.len(), self.field);
        let mut any_nonzero = false;
        for (e, row) in rows.iter().enumerate() {
            for (t, &s) in touched.iter().enumerate() {
                let mut acc = Scalar::zero(self.field);
                for (idx, c) in row.entries() {
                    if let Some(bv) = sparse_get(&self.basis[s], *idx) {
                        acc = acc.add(&c.mul(bv));
                    }
                }
                if !acc.is_zero() {
                    any_nonzero = true;
                    p.set(e, t, acc);
                }
            }
        }
        if !any_nonzero {
            return;
        }

        // Kernel of P in the touched-coefficient space; untouched vectors
        // survive unchanged.
        let kernel = p.nullspace();
        let mut new_basis: Vec<SparseVec> = Vec::with_capacity(self.basis.len());
        let touched_set: Vec<bool> = {
            let mut v = vec![false; self.basis.len()];
            for &s in &touched {
                v[s] = true;
            }
            v
        };
        for (s, v) in self.basis.iter().enumerate() {
            if !touched_set[s] {
                new_basis.push(v.clone());
            }
        }
        for k in 0..kernel.rows() {
            let mut combo: SparseVec = Vec::new();
            for (t, &s) in touched.iter().enumerate() {
                let c = kernel.at(k, t);
                if !c.is_zero() {
                    combo = sparse_add_scaled(&combo, c, &self.basis[s]);
                }
            }
            if !combo.is_empty() {
                new_basis.push(combo);
            }
        }
        self.basis = new_basis;
    }

    /// Canonical result as a subspace of the full coordinate space.
    pub fn into_subspace(self) -> Subspace {
        let mut rows = Vec::with_capacity(self.basis.len());
        for v in &self.basis {
            let mut dense = vec![Scalar::zero(self.field); self.n];
            for (i, c) in v {
                dense[*i] = c.clone();
            }
            rows.push(dense);
        }
        Subspace::from_rows(self.n, self.field, rows).expect("basis rows well-formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn matches_dense_nullspace_on_random_systems() {
        let f = FieldTower::fp(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.random_range(3..10);
            let m = rng.random_range(1..12);
            let mut rows = Vec::new();
            let mut dense_rows = Vec::new();
            for _ in 0..m {
                let mut dense = vec![Scalar::zero(f); n];
                let mut terms = Vec::new();
                for idx in 0..n {
                    if rng.random_range(0..3) == 0 {
                        let c = Scalar::from_i64(rng.random_range(1..5), f);
                        dense[idx] = c.clone();
                        terms.push((idx, c));
                    }
                }
                rows.push(SparseRow::from_terms(terms));
                dense_rows.push(dense);
            }
            let mut builder = NullspaceBuilder::new(n, f);
            // Impose in two batches to exercise the incremental path.
            let split = rows.len() / 2;
            builder.impose(&rows[..split]);
            builder.impose(&rows[split..]);
            let incremental = builder.into_subspace();

            let dense = Matrix::from_rows(dense_rows, n, f).unwrap();
            let expected = Subspace::from_matrix(&dense.nullspace());
            assert_eq!(incremental, expected);
        }
    }

    #[test]
    fn duplicate_terms_merge() {
        let f = FieldTower::Q;
        let row = SparseRow::from_terms(vec![
            (2, Scalar::from_i64(1, f)),
            (2, Scalar::from_i64(-1, f)),
            (0, Scalar::from_i64(3, f)),
        ]);
        assert_eq!(row.entries().len(), 1);
        let mut b = NullspaceBuilder::new(3, f);
        b.impose(&[row]);
        assert_eq!(b.dim(), 2);
    }
}
