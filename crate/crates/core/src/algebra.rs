//! Finite-dimensional algebras presented by structure constants.
//!
//! An algebra is a basis e_0, ..., e_{dim-1} together with the sparse table
//! e_i·e_j = Σ_k c_ijk e_k. Construction validates the declared kind
//! (associativity, or alternation plus Jacobi), the optional involution
//! (involutive anti-automorphism, degree checks live elsewhere), and the
//! optional unit, and reports the exact basis triple of any violation.

use crate::error::{AlgError, Result};
use crate::field::{FieldTower, Scalar};
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Associative,
    Lie,
}

impl AlgebraKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Lie => "lie",
        }
    }
}

/// One sparse structure constant: e_i · e_j has coefficient `c` on e_k.
#[derive(Debug, Clone)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FinAlgebra {
    dim: usize,
    kind: AlgebraKind,
    field: FieldTower,
    /// table[i * dim + j] = sorted nonzero coefficients of e_i·e_j.
    table: Vec<Vec<(usize, Scalar)>>,
    involution: Option<Matrix>,
    unit: Option<Vec<Scalar>>,
    labels: Option<Vec<String>>,
}

impl FinAlgebra {
    /// Validates and freezes an algebra. All declared axioms are checked on
    /// every basis pair/triple; the first violation aborts construction.
    pub fn build(
        dim: usize,
        kind: AlgebraKind,
        field: FieldTower,
        entries: Vec<StructureEntry>,
        involution: Option<Matrix>,
        unit: Option<Vec<Scalar>>,
        labels: Option<Vec<String>>,
    ) -> Result<FinAlgebra> {
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dim * dim];
        for e in entries {
            if e.i >= dim || e.j >= dim || e.k >= dim {
                return Err(AlgError::IndexOutOfRange {
                    i: e.i,
                    j: e.j,
                    k: e.k,
                    dim,
                });
            }
            if e.c.tower() != field {
                return Err(AlgError::FieldMismatch(e.c.tower(), field));
            }
            if e.c.is_zero() {
                continue;
            }
            let slot = &mut table[e.i * dim + e.j];
            match slot.binary_search_by_key(&e.k, |x| x.0) {
                Ok(pos) => {
                    let s = slot[pos].1.add(&e.c);
                    if s.is_zero() {
                        slot.remove(pos);
                    } else {
                        slot[pos].1 = s;
                    }
                }
                Err(pos) => slot.insert(pos, (e.k, e.c)),
            }
        }
        if let Some(ref l) = labels {
            if l.len() != dim {
                return Err(AlgError::DimensionMismatch(format!(
                    "{} labels for dimension {}",
                    l.len(),
                    dim
                )));
            }
        }
        let alg = FinAlgebra {
            dim,
            kind,
            field,
            table,
            involution: None,
            unit: None,
            labels,
        };
        alg.check_axioms()?;
        let alg = match involution {
            Some(m) => alg.with_involution(m)?,
            None => alg,
        };
        match unit {
            Some(u) => alg.with_unit(u),
            None => Ok(alg),
        }
    }

    fn check_axioms(&self) -> Result<()> {
        match self.kind {
            AlgebraKind::Associative => {
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let ij = self.basis_product(i, j).to_vec();
                        for k in 0..self.dim {
                            let left = self.mul_sparse_basis(&ij, k, true);
                            let jk = self.basis_product(j, k).to_vec();
                            let right = self.mul_sparse_basis(&jk, i, false);
                            if left != right {
                                return Err(AlgError::AxiomViolation {
                                    law: "associativity",
                                    i,
                                    j,
                                    k,
                                });
                            }
                        }
                    }
                }
            }
            AlgebraKind::Lie => {
                for i in 0..self.dim {
                    if !self.basis_product(i, i).is_empty() {
                        return Err(AlgError::AxiomViolation {
                            law: "alternation [x,x] = 0",
                            i,
                            j: i,
                            k: i,
                        });
                    }
                    for j in 0..i {
                        let ij = self.basis_product(i, j);
                        let ji = self.basis_product(j, i);
                        let mut sum: Vec<Scalar> = vec_ops::zero(self.dim, self.field);
                        for (k, c) in ij.iter().chain(ji.iter()) {
                            sum[*k] = sum[*k].add(c);
                        }
                        if !vec_ops::is_zero(&sum) {
                            return Err(AlgError::AxiomViolation {
                                law: "antisymmetry",
                                i,
                                j,
                                k: 0,
                            });
                        }
                    }
                }
                for i in 0..self.dim {
                    for j in (i + 1)..self.dim {
                        for k in (j + 1)..self.dim {
                            if !self.jacobi_holds(i, j, k) {
                                return Err(AlgError::AxiomViolation {
                                    law: "Jacobi identity",
                                    i,
                                    j,
                                    k,
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Multiplies the sparse vector by basis element k: on the left when
    /// `vec_on_left`, i.e. (Σ c_m e_m)·e_k, otherwise e_k·(Σ c_m e_m).
    fn mul_sparse_basis(
        &self,
        v: &[(usize, Scalar)],
        k: usize,
        vec_on_left: bool,
    ) -> Vec<Scalar> {
        let mut out = vec_ops::zero(self.dim, self.field);
        for (m, c) in v {
            let prod = if vec_on_left {
                self.basis_product(*m, k)
            } else {
                self.basis_product(k, *m)
            };
            for (t, d) in prod {
                out[*t] = out[*t].add(&c.mul(d));
            }
        }
        out
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let jk = self.basis_product(j, k).to_vec();
        let ki = self.basis_product(k, i).to_vec();
        let ij = self.basis_product(i, j).to_vec();
        let a = self.mul_sparse_basis(&jk, i, false);
        let b = self.mul_sparse_basis(&ki, j, false);
        let c = self.mul_sparse_basis(&ij, k, false);
        let sum = vec_ops::add(&vec_ops::add(&a, &b), &c);
        vec_ops::is_zero(&sum)
    }

    /// Attaches an involution after validating it is an involutive
    /// anti-automorphism (automorphism of the bracket for Lie algebras is not
    /// supported; skew parts are taken on the associative side).
    pub fn with_involution(mut self, m: Matrix) -> Result<FinAlgebra> {
        if self.kind != AlgebraKind::Associative {
            return Err(AlgError::BadInvolution(
                "involutions are only attached to associative algebras".into(),
            ));
        }
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(AlgError::BadInvolution(format!(
                "involution matrix is {}x{} on a dimension-{} algebra",
                m.rows(),
                m.cols(),
                self.dim
            )));
        }
        if m.field() != self.field {
            return Err(AlgError::FieldMismatch(m.field(), self.field));
        }
        let square = m.mul(&m)?;
        if square != Matrix::identity(self.dim, self.field) {
            return Err(AlgError::BadInvolution("map does not square to the identity".into()));
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                // (e_i e_j)* must equal e_j* e_i*.
                let prod = self.basis_vec_product(i, j);
                let lhs = m.mul_vec(&prod)?;
                let istar = m.mul_vec(&vec_ops::unit(self.dim, i, self.field))?;
                let jstar = m.mul_vec(&vec_ops::unit(self.dim, j, self.field))?;
                let rhs = self.product(&jstar, &istar);
                if lhs != rhs {
                    return Err(AlgError::BadInvolution(format!(
                        "anti-automorphism law fails at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        self.involution = Some(m);
        Ok(self)
    }

    pub fn with_unit(mut self, u: Vec<Scalar>) -> Result<FinAlgebra> {
        if u.len() != self.dim {
            return Err(AlgError::DimensionMismatch(format!(
                "unit of length {} in dimension {}",
                u.len(),
                self.dim
            )));
        }
        for i in 0..self.dim {
            let e = vec_ops::unit(self.dim, i, self.field);
            if self.product(&u, &e) != e || self.product(&e, &u) != e {
                return Err(AlgError::BadUnit(i));
            }
        }
        self.unit = Some(u);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn field(&self) -> FieldTower {
        self.field
    }

    pub fn involution(&self) -> Option<&Matrix> {
        self.involution.as_ref()
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<FinAlgebra> {
        if labels.len() != self.dim {
            return Err(AlgError::DimensionMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{i}"),
        }
    }

    /// Sparse table row for e_i·e_j.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    fn basis_vec_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec_ops::zero(self.dim, self.field);
        for (k, c) in self.basis_product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Iterates over the nonzero structure constants.
    pub fn structure_entries(&self) -> impl Iterator<Item = StructureEntry> + '_ {
        (0..self.dim * self.dim).flat_map(move |slot| {
            let (i, j) = (slot / self.dim, slot % self.dim);
            self.table[slot].iter().map(move |(k, c)| StructureEntry {
                i,
                j,
                k: *k,
                c: c.clone(),
            })
        })
    }

    /// Product of coordinate vectors.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vec_ops::zero(self.dim, self.field);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi.mul(yj);
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = out[*k].add(&f.mul(c));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication x·(-).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim, self.field);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    let v = m.at(*k, j).add(&xi.mul(c));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication (-)·x.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim, self.field);
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for (k, c) in self.basis_product(i, j) {
                    let v = m.at(*k, i).add(&xj.mul(c));
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    /// Adjoint map [x, -] for Lie algebras (left multiplication by x).
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        debug_assert_eq!(self.kind, AlgebraKind::Lie);
        self.left_mul_matrix(x)
    }

    pub fn apply_involution(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let m = self.involution.as_ref().ok_or_else(|| {
            AlgError::Precondition("algebra has no involution attached".into())
        })?;
        m.mul_vec(x)
    }

    /// The same space with the commutator bracket [x,y] = xy - yx.
    pub fn minus_algebra(&self) -> Result<FinAlgebra> {
        if self.kind != AlgebraKind::Associative {
            return Err(AlgError::Precondition(
                "minus algebra is formed from an associative algebra".into(),
            ));
        }
        let mut entries = Vec::new();
        for e in self.structure_entries() {
            entries.push(StructureEntry {
                i: e.i,
                j: e.j,
                k: e.k,
                c: e.c.clone(),
            });
            entries.push(StructureEntry {
                i: e.j,
                j: e.i,
                k: e.k,
                c: e.c.neg(),
            });
        }
        FinAlgebra::build(
            self.dim,
            AlgebraKind::Lie,
            self.field,
            entries,
            None,
            None,
            self.labels.clone(),
        )
    }

    /// Skew-symmetric part K = {x : x* = -x} under the commutator bracket,
    /// returned with its embedding into this algebra.
    pub fn skew_part(&self) -> Result<(FinAlgebra, Subspace)> {
        let m = self.involution.as_ref().ok_or_else(|| {
            AlgError::Precondition("skew part needs an involution".into())
        })?;
        let system = m.add(&Matrix::identity(self.dim, self.field))?;
        let space = Subspace::from_matrix(&system.nullspace());
        let minus = self.minus_algebra()?;
        let alg = minus.subalgebra_on(&space)?;
        Ok((alg, space))
    }

    /// Structure constants restricted to a product-closed subspace, using the
    /// subspace's canonical basis. Errors when the subspace is not closed.
    pub fn subalgebra_on(&self, space: &Subspace) -> Result<FinAlgebra> {
        let basis: Vec<Vec<Scalar>> = space.basis_rows().map(|r| r.to_vec()).collect();
        self.subalgebra_with_basis(&basis)
    }

    /// Same as [`subalgebra_on`](Self::subalgebra_on) but with a caller-chosen
    /// basis (checked for independence). The change of basis from the span's
    /// canonical form is factored once, so each product costs one reduction
    /// and one small matrix-vector multiply.
    pub fn subalgebra_with_basis(&self, basis: &[Vec<Scalar>]) -> Result<FinAlgebra> {
        let space = Subspace::from_rows(self.dim, self.field, basis.to_vec())?;
        if space.dim() != basis.len() {
            return Err(AlgError::Precondition(
                "subalgebra basis is linearly dependent".into(),
            ));
        }
        let n = basis.len();
        let mut t = Matrix::zeros(n, n, self.field);
        for (r, b) in basis.iter().enumerate() {
            let coords = space
                .coords_of(b)
                .expect("basis rows lie in their own span");
            for (c, v) in coords.into_iter().enumerate() {
                t.set(r, c, v);
            }
        }
        let into_basis = t
            .transpose()
            .inverse()
            .expect("independent rows give an invertible change of basis");
        let mut entries = Vec::new();
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate() {
                let prod = self.product(x, y);
                let canonical = space.coords_of(&prod).ok_or(AlgError::NotSubalgebra(a, b))?;
                let in_basis = into_basis.mul_vec(&canonical)?;
                for (k, c) in in_basis.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(StructureEntry { i: a, j: b, k, c });
                    }
                }
            }
        }
        FinAlgebra::build(n, self.kind, self.field, entries, None, None, None)
    }

    /// Center: elements commuting (associative) or bracketing to zero (Lie)
    /// with the whole algebra.
    pub fn center(&self) -> Subspace {
        let mut stacked: Option<Matrix> = None;
        for i in 0..self.dim {
            let e = vec_ops::unit(self.dim, i, self.field);
            // Map x -> x·e_i - e_i·x (for Lie this is [x, e_i], enough since
            // the bracket is antisymmetric).
            let m = self
                .right_mul_matrix(&e)
                .sub(&self.left_mul_matrix(&e))
                .expect("shapes agree");
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.vstack(&m).expect("shapes agree"),
            });
        }
        match stacked {
            None => Subspace::full(0, self.field),
            Some(s) => Subspace::from_matrix(&s.nullspace()),
        }
    }

    /// Ann_X(Y) = {x in X : x·y = 0 and y·x = 0 for all y in Y}.
    /// For Lie algebras one side suffices.
    pub fn annihilator_in(&self, x_space: &Subspace, y_space: &Subspace) -> Result<Subspace> {
        self.check_space(x_space)?;
        self.check_space(y_space)?;
        let xdim = x_space.dim();
        if xdim == 0 || y_space.dim() == 0 {
            return if y_space.dim() == 0 {
                Ok(x_space.clone())
            } else {
                Ok(Subspace::zero(self.dim, self.field))
            };
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for y in y_space.basis_rows() {
            let ly = self.left_mul_matrix(y);
            let ry = self.right_mul_matrix(y);
            for k in 0..self.dim {
                let mut row_l = vec_ops::zero(xdim, self.field);
                let mut row_r = vec_ops::zero(xdim, self.field);
                for (s, bx) in x_space.basis_rows().enumerate() {
                    // coefficient of e_k in x_s·y resp. y·x_s
                    let mut acc_l = Scalar::zero(self.field);
                    let mut acc_r = Scalar::zero(self.field);
                    for (c, v) in bx.iter().enumerate() {
                        if !v.is_zero() {
                            acc_l = acc_l.add(&ry.at(k, c).mul(v));
                            acc_r = acc_r.add(&ly.at(k, c).mul(v));
                        }
                    }
                    row_l[s] = acc_l;
                    row_r[s] = acc_r;
                }
                rows.push(row_l);
                if self.kind == AlgebraKind::Associative {
                    rows.push(row_r);
                }
            }
        }
        let system = Matrix::from_rows(rows, xdim, self.field)?;
        let kernel = system.nullspace();
        let mut out_rows = Vec::new();
        for r in 0..kernel.rows() {
            out_rows.push(x_space.vec_from_coords(kernel.row(r)));
        }
        Subspace::from_rows(self.dim, self.field, out_rows)
    }

    /// Left annihilator {a : a·x = 0 for all x in X} (associative).
    pub fn left_annihilator(&self, x_space: &Subspace) -> Result<Subspace> {
        self.check_space(x_space)?;
        let mut stacked: Option<Matrix> = None;
        for x in x_space.basis_rows() {
            let rx = self.right_mul_matrix(x);
            stacked = Some(match stacked {
                None => rx,
                Some(s) => s.vstack(&rx)?,
            });
        }
        Ok(match stacked {
            None => Subspace::full(self.dim, self.field),
            Some(s) => Subspace::from_matrix(&s.nullspace()),
        })
    }

    /// Right annihilator {a : x·a = 0 for all x in X} (associative).
    pub fn right_annihilator(&self, x_space: &Subspace) -> Result<Subspace> {
        self.check_space(x_space)?;
        let mut stacked: Option<Matrix> = None;
        for x in x_space.basis_rows() {
            let lx = self.left_mul_matrix(x);
            stacked = Some(match stacked {
                None => lx,
                Some(s) => s.vstack(&lx)?,
            });
        }
        Ok(match stacked {
            None => Subspace::full(self.dim, self.field),
            Some(s) => Subspace::from_matrix(&s.nullspace()),
        })
    }

    /// Two-sided annihilator lan ∩ ran.
    pub fn two_sided_annihilator(&self, x_space: &Subspace) -> Result<Subspace> {
        self.left_annihilator(x_space)?
            .intersect(&self.right_annihilator(x_space)?)
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(AlgError::FieldMismatch(s.field(), self.field));
        }
        if s.ambient() != self.dim {
            return Err(AlgError::DimensionMismatch(format!(
                "subspace of ambient {} inside a dimension-{} algebra",
                s.ambient(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Smallest ideal containing the given subspace: saturates under left and
    /// right multiplication by basis elements.
    pub fn ideal_closure(&self, generators: &Subspace) -> Result<Subspace> {
        self.check_space(generators)?;
        let mut current = generators.clone();
        loop {
            let mut new_rows: Vec<Vec<Scalar>> = Vec::new();
            for v in current.basis_rows() {
                for i in 0..self.dim {
                    let e = vec_ops::unit(self.dim, i, self.field);
                    let left = self.product(&e, v);
                    if !current.contains(&left) {
                        new_rows.push(left);
                    }
                    if self.kind == AlgebraKind::Associative {
                        let right = self.product(v, &e);
                        if !current.contains(&right) {
                            new_rows.push(right);
                        }
                    }
                }
            }
            if new_rows.is_empty() {
                return Ok(current);
            }
            let added = Subspace::from_rows(self.dim, self.field, new_rows)?;
            let next = current.sum(&added)?;
            if next.dim() == current.dim() {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Checks the two-sided ideal property, reporting the first violating
    /// pair (basis index of the algebra, basis index of the subspace).
    pub fn is_ideal(&self, i_space: &Subspace) -> Result<()> {
        self.check_space(i_space)?;
        for (b, v) in i_space.basis_rows().enumerate() {
            for a in 0..self.dim {
                let e = vec_ops::unit(self.dim, a, self.field);
                if !i_space.contains(&self.product(&e, v)) {
                    return Err(AlgError::NotIdeal(a, b));
                }
                if self.kind == AlgebraKind::Associative && !i_space.contains(&self.product(v, &e))
                {
                    return Err(AlgError::NotIdeal(a, b));
                }
            }
        }
        Ok(())
    }

    /// Quotient by a two-sided ideal, on coset representatives completing the
    /// ideal to the whole space. Unit descends when present; involutions are
    /// dropped.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<FinAlgebra> {
        Ok(self.quotient_with_map(ideal)?.0)
    }

    /// Quotient together with the projection matrix taking parent
    /// coordinates to quotient coordinates. The quotient basis is the set of
    /// coset representatives completing the ideal basis.
    pub fn quotient_with_map(&self, ideal: &Subspace) -> Result<(FinAlgebra, Matrix)> {
        self.is_ideal(ideal)?;
        let full = Subspace::full(self.dim, self.field);
        let reps = ideal.completion_within(&full)?;
        let qdim = reps.len();
        // Rows of the change matrix: ideal basis then representatives.
        let mut rows: Vec<Vec<Scalar>> = ideal.basis_rows().map(|r| r.to_vec()).collect();
        rows.extend(reps.iter().cloned());
        let change = Matrix::from_rows(rows, self.dim, self.field)?;
        let to_coords = change
            .transpose()
            .inverse()
            .expect("ideal basis plus representatives span the space");
        let proj_rows: Vec<Vec<Scalar>> = (ideal.dim()..self.dim)
            .map(|r| to_coords.row(r).to_vec())
            .collect();
        let proj = Matrix::from_rows(proj_rows, self.dim, self.field)?;
        let reduce = |v: &[Scalar]| -> Result<Vec<Scalar>> { proj.mul_vec(v) };
        let mut entries = Vec::new();
        for (a, x) in reps.iter().enumerate() {
            for (b, y) in reps.iter().enumerate() {
                let prod = reduce(&self.product(x, y))?;
                for (k, c) in prod.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push(StructureEntry { i: a, j: b, k, c });
                    }
                }
            }
        }
        let unit = match &self.unit {
            Some(u) => {
                let red = reduce(u)?;
                if vec_ops::is_zero(&red) {
                    None
                } else {
                    Some(red)
                }
            }
            None => None,
        };
        let quo = FinAlgebra::build(qdim, self.kind, self.field, entries, None, unit, None)?;
        Ok((quo, proj))
    }

    /// Span of the products x·y over basis vectors of the two subspaces.
    pub fn span_product(&self, x: &Subspace, y: &Subspace) -> Result<Subspace> {
        self.check_space(x)?;
        self.check_space(y)?;
        let mut rows = Vec::new();
        for a in x.basis_rows() {
            for b in y.basis_rows() {
                let p = self.product(a, b);
                if !vec_ops::is_zero(&p) {
                    rows.push(p);
                }
            }
        }
        Subspace::from_rows(self.dim, self.field, rows)
    }

    /// Span of all products x·y (the derived subspace [S,S] for Lie kinds).
    pub fn product_span(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.basis_vec_product(i, j);
                if !vec_ops::is_zero(&v) {
                    rows.push(v);
                }
            }
        }
        Subspace::from_rows(self.dim, self.field, rows).expect("rows well-formed")
    }

    /// Formats a coordinate vector against the basis labels.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lab = self.label(i);
            if c.is_one() {
                parts.push(lab);
            } else {
                parts.push(format!("{}*{}", c.render(), lab));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Result of a quadratic annihilator membership test.
#[derive(Debug, Clone)]
pub struct QannResult {
    pub member: bool,
    /// Basis vector of Y witnessing failure, with the nonzero value
    /// x·(x·y) when not a member.
    pub witness: Option<(Vec<Scalar>, Vec<Scalar>)>,
}

/// Tests x ∈ QAnn_X(Y): x ∈ X and [x,[x,y]] = 0 for every y in Y
/// (products taken in `alg`, which is Lie in all intended uses).
pub fn qann_member(
    alg: &FinAlgebra,
    x: &[Scalar],
    x_space: &Subspace,
    y_space: &Subspace,
) -> Result<QannResult> {
    if !x_space.contains(x) {
        return Ok(QannResult {
            member: false,
            witness: None,
        });
    }
    for y in y_space.basis_rows() {
        let inner = alg.product(x, y);
        let outer = alg.product(x, &inner);
        if !vec_ops::is_zero(&outer) {
            return Ok(QannResult {
                member: false,
                witness: Some((y.to_vec(), outer)),
            });
        }
    }
    Ok(QannResult {
        member: true,
        witness: None,
    })
}
