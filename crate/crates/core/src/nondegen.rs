//! Absolute zero divisors and strong nondegeneracy searches.
//!
//! An element x of a Lie algebra is an absolute zero divisor when
//! (ad x)^2 = 0. Strong nondegeneracy, the absence of nonzero such
//! elements, cannot be settled by enumeration over the rationals, so
//! verdicts are three-valued: over characteristic zero the Killing form
//! either decides the question or the verdict is inconclusive, while
//! over F_p an exhaustive projective search decides it whenever the
//! candidate weight fits the budget. Degenerate verdicts always carry a
//! re-verified witness, and searches run in a fixed order so witnesses
//! are reproducible.

use std::fmt;

use crate::algebra::{qann_member, AlgebraKind, FinAlgebra};
use crate::certify;
use crate::check::{CheckOutcome, Status};
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::grading::ZGrading;
use crate::matrix::{vec_ops, Matrix};
use crate::subspace::Subspace;

/// Cap on the enumeration weight (sum of p^dim over the searched frames).
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SndStatus {
    Nondegenerate,
    Degenerate,
    Inconclusive,
}

impl fmt::Display for SndStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SndStatus::Nondegenerate => "nondegenerate",
            SndStatus::Degenerate => "degenerate",
            SndStatus::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct SndVerdict {
    pub status: SndStatus,
    /// Verified absolute zero divisor; present exactly when degenerate.
    pub witness: Option<Vec<Scalar>>,
    /// One of "killing", "exhaustive-Fp", "homogeneous-exhaustive-Fp".
    pub method: &'static str,
    /// Certificate or search parameters, for reports.
    pub params: String,
}

impl SndVerdict {
    pub fn summary(&self) -> String {
        let mut s = format!("{} by {} ({})", self.status, self.method, self.params);
        if let Some(w) = &self.witness {
            s.push_str(&format!(", witness {}", fmt_coords(w)));
        }
        s
    }
}

fn fmt_coords(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.render()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone)]
pub struct AzdOutcome {
    pub is_azd: bool,
    /// Basis vector y with [x,[x,y]] nonzero when the answer is no.
    pub witness: Option<Vec<Scalar>>,
}

/// Decides whether (ad x)^2 = 0 by running x against every basis vector.
/// The zero element passes vacuously.
pub fn azd_test(l: &FinAlgebra, x: &[Scalar]) -> Result<AzdOutcome> {
    require_lie(l)?;
    if x.len() != l.dim() {
        return Err(AlgError::DimensionMismatch(format!(
            "element has {} coordinates in an algebra of dimension {}",
            x.len(),
            l.dim()
        )));
    }
    for j in 0..l.dim() {
        let y = vec_ops::unit(l.dim(), j, l.field());
        let inner = l.product(x, &y);
        if vec_ops::is_zero(&inner) {
            continue;
        }
        if !vec_ops::is_zero(&l.product(x, &inner)) {
            return Ok(AzdOutcome {
                is_azd: false,
                witness: Some(y),
            });
        }
    }
    Ok(AzdOutcome {
        is_azd: true,
        witness: None,
    })
}

fn require_lie(l: &FinAlgebra) -> Result<()> {
    if l.kind() != AlgebraKind::Lie {
        return Err(AlgError::Precondition(
            "absolute zero divisors are a Lie algebra notion".into(),
        ));
    }
    Ok(())
}

fn squared_ad_vanishes(l: &FinAlgebra, x: &[Scalar]) -> bool {
    let n = l.dim();
    for j in 0..n {
        let inner = l.product(x, &vec_ops::unit(n, j, l.field()));
        if vec_ops::is_zero(&inner) {
            continue;
        }
        if !vec_ops::is_zero(&l.product(x, &inner)) {
            return false;
        }
    }
    true
}

/// One representative per line of F_p^dim, in lexicographic order of
/// coordinate tuples. Normalization sets the first nonzero coordinate to 1,
/// so (0,..,0,1) comes first and the order is deterministic.
struct ProjectiveIter {
    p: u64,
    digits: Vec<u64>,
    lead: usize,
    started: bool,
    done: bool,
}

impl ProjectiveIter {
    fn new(dim: usize, p: u64) -> ProjectiveIter {
        ProjectiveIter {
            p,
            digits: vec![0; dim],
            lead: dim,
            started: false,
            done: dim == 0,
        }
    }
}

impl Iterator for ProjectiveIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let n = self.digits.len();
        if !self.started {
            self.started = true;
            self.lead = n - 1;
            self.digits[self.lead] = 1;
            return Some(self.digits.clone());
        }
        // advance the odometer on the positions right of the leading 1
        let mut i = n;
        while i > self.lead + 1 {
            let k = i - 1;
            self.digits[k] += 1;
            if self.digits[k] < self.p {
                return Some(self.digits.clone());
            }
            self.digits[k] = 0;
            i -= 1;
        }
        if self.lead == 0 {
            self.done = true;
            return None;
        }
        self.digits[self.lead] = 0;
        self.lead -= 1;
        self.digits[self.lead] = 1;
        Some(self.digits.clone())
    }
}

fn digits_to_vec(digits: &[u64], frame: &Subspace) -> Vec<Scalar> {
    let field = frame.field();
    let coords: Vec<Scalar> = digits
        .iter()
        .map(|d| Scalar::from_i64(*d as i64, field))
        .collect();
    frame.vec_from_coords(&coords)
}

fn enumeration_weight(p: u64, frames: &[Subspace]) -> u128 {
    let mut w: u128 = 0;
    for f in frames {
        let term = (p as u128)
            .checked_pow(f.dim() as u32)
            .unwrap_or(u128::MAX);
        w = w.saturating_add(term);
    }
    w
}

/// Exhaustive absolute zero divisor search over a finite field. With a
/// grading the search is restricted to homogeneous elements, walking the
/// components in ascending degree order; without one it covers every line
/// of the algebra. Budget overruns yield an inconclusive verdict rather
/// than a partial answer.
pub fn azd_exhaustive(
    l: &FinAlgebra,
    homogeneous: Option<&ZGrading>,
    budget: u64,
) -> Result<SndVerdict> {
    require_lie(l)?;
    let p = l.field().characteristic();
    if p == 0 {
        return Err(AlgError::Precondition(
            "exhaustive search needs a finite coefficient field".into(),
        ));
    }
    let method: &'static str;
    let frames: Vec<Subspace> = match homogeneous {
        Some(g) => {
            if g.ambient_dim() != l.dim() {
                return Err(AlgError::DimensionMismatch(format!(
                    "grading on dimension {} against an algebra of dimension {}",
                    g.ambient_dim(),
                    l.dim()
                )));
            }
            if g.field() != l.field() {
                return Err(AlgError::FieldMismatch(g.field(), l.field()));
            }
            method = "homogeneous-exhaustive-Fp";
            let mut degs = g.support();
            degs.sort_unstable();
            degs.iter().map(|d| g.component(*d)).collect()
        }
        None => {
            method = "exhaustive-Fp";
            vec![Subspace::full(l.dim(), l.field())]
        }
    };
    let weight = enumeration_weight(p, &frames);
    if weight > budget as u128 {
        return Ok(SndVerdict {
            status: SndStatus::Inconclusive,
            witness: None,
            method,
            params: format!("enumeration weight {weight} exceeds the budget {budget}"),
        });
    }
    let mut examined: u64 = 0;
    for frame in &frames {
        for digits in ProjectiveIter::new(frame.dim(), p) {
            examined += 1;
            let x = digits_to_vec(&digits, frame);
            if squared_ad_vanishes(l, &x) {
                debug_assert!(azd_test(l, &x)?.is_azd);
                return Ok(SndVerdict {
                    status: SndStatus::Degenerate,
                    witness: Some(x),
                    method,
                    params: format!("p = {p}, stopped after {examined} candidates"),
                });
            }
        }
    }
    Ok(SndVerdict {
        status: SndStatus::Nondegenerate,
        witness: None,
        method,
        params: format!("p = {p}, all {examined} candidates examined"),
    })
}

/// Three-valued nondegeneracy verdict. Over a finite field this is the
/// full projective search. Over characteristic zero the Killing form
/// decides: a trivial radical certifies that no absolute zero divisor
/// exists, and a nontrivial one ends in an abelian ideal (the last
/// nonzero term of its derived series) whose every nonzero element is a
/// witness.
pub fn snd_verdict(l: &FinAlgebra, budget: u64) -> Result<SndVerdict> {
    require_lie(l)?;
    if l.field().characteristic() != 0 {
        return azd_exhaustive(l, None, budget);
    }
    let n = l.dim();
    let field = l.field();
    if n == 0 {
        return Ok(SndVerdict {
            status: SndStatus::Nondegenerate,
            witness: None,
            method: "killing",
            params: "zero algebra".into(),
        });
    }
    // Radical as the Killing orthogonal of the derived subalgebra.
    let gram = certify::killing_gram(l)?;
    let full = Subspace::full(n, field);
    let derived = l.span_product(&full, &full)?;
    let radical = if derived.dim() == 0 {
        full
    } else {
        let mut rows = Vec::new();
        for b in derived.basis_rows() {
            rows.push(gram.mul_vec(b)?);
        }
        Subspace::from_matrix(&Matrix::from_rows(rows, n, field)?.nullspace())
    };
    if radical.dim() == 0 {
        return Ok(SndVerdict {
            status: SndStatus::Nondegenerate,
            witness: None,
            method: "killing",
            params: format!("trivial radical, dimension {n}"),
        });
    }
    let mut term = radical;
    loop {
        let next = l.span_product(&term, &term)?;
        if next.dim() == 0 {
            break;
        }
        if next.dim() >= term.dim() {
            return Ok(SndVerdict {
                status: SndStatus::Inconclusive,
                witness: None,
                method: "killing",
                params: "derived series of the radical did not descend".into(),
            });
        }
        term = next;
    }
    let witness = term
        .basis_rows()
        .next()
        .expect("nonzero ideal has a basis vector")
        .to_vec();
    if azd_test(l, &witness)?.is_azd {
        Ok(SndVerdict {
            status: SndStatus::Degenerate,
            witness: Some(witness),
            method: "killing",
            params: format!("abelian ideal of dimension {} inside the radical", term.dim()),
        })
    } else {
        Ok(SndVerdict {
            status: SndStatus::Inconclusive,
            witness: None,
            method: "killing",
            params: "radical witness failed re-verification".into(),
        })
    }
}

fn verdict_status(v: &SndVerdict) -> Status {
    match v.status {
        SndStatus::Nondegenerate => Status::Pass,
        SndStatus::Degenerate => Status::Fail,
        SndStatus::Inconclusive => Status::Inconclusive,
    }
}

/// Runs the full and the homogeneous searches on the same graded algebra
/// and asserts that they reach the same verdict. Both fixtures with and
/// without zero divisors are in scope; the assertion is the agreement.
pub fn check_grequiv(l: &FinAlgebra, g: &ZGrading, budget: u64) -> Result<Vec<CheckOutcome>> {
    let fullv = azd_exhaustive(l, None, budget)?;
    let homv = azd_exhaustive(l, Some(g), budget)?;
    let mut out = vec![
        CheckOutcome::pass("grequiv/full-search", fullv.summary()),
        CheckOutcome::pass("grequiv/homogeneous-search", homv.summary()),
    ];
    let name = "grequiv/verdicts-agree";
    if fullv.status == SndStatus::Inconclusive || homv.status == SndStatus::Inconclusive {
        out.push(CheckOutcome::new(
            name,
            Status::Inconclusive,
            "a search exceeded its budget",
        ));
    } else {
        out.push(CheckOutcome::expect(
            name,
            fullv.status == homv.status,
            format!("full {}, homogeneous {}", fullv.status, homv.status),
        ));
    }
    Ok(out)
}

/// Inheritance of nondegeneracy along a three-grading: when the center
/// vanishes, the zero component is generated by the outer brackets, and
/// the zero component is nondegenerate, the whole algebra is graded
/// nondegenerate. Each hypothesis is reported on its own; when one fails
/// the conclusion is skipped and the whole algebra gets an unconditional
/// verdict instead, which is how the standard counterexamples show up.
pub fn check_herencia1(l: &FinAlgebra, g: &ZGrading, budget: u64) -> Result<Vec<CheckOutcome>> {
    require_lie(l)?;
    let p = l.field().characteristic();
    if p == 2 || p == 3 {
        return Err(AlgError::Precondition(
            "the three-graded inheritance statement excludes characteristics 2 and 3".into(),
        ));
    }
    if g.ambient_dim() != l.dim() {
        return Err(AlgError::DimensionMismatch(format!(
            "grading on dimension {} against an algebra of dimension {}",
            g.ambient_dim(),
            l.dim()
        )));
    }
    if g.field() != l.field() {
        return Err(AlgError::FieldMismatch(g.field(), l.field()));
    }
    for d in g.support() {
        if !(-1..=1).contains(&d) {
            return Err(AlgError::InvalidGrading(format!(
                "support contains degree {d}; a three-grading allows -1, 0, 1"
            )));
        }
    }

    let mut out = Vec::new();
    let center = l.center();
    out.push(CheckOutcome::expect(
        "herencia1/center-zero",
        center.dim() == 0,
        format!("center has dimension {}", center.dim()),
    ));

    let zero = g.component(0);
    let outer = l.span_product(&g.component(1), &g.component(-1))?;
    out.push(CheckOutcome::expect(
        "herencia1/zero-part-generated",
        outer == zero,
        format!(
            "bracket span of the outer components has dimension {}, the zero component {}",
            outer.dim(),
            zero.dim()
        ),
    ));

    let zero_part = if zero.dim() == 0 {
        CheckOutcome::pass("herencia1/zero-part-nondegenerate", "zero component is trivial")
    } else {
        let l0 = l.subalgebra_on(&zero)?;
        let v = snd_verdict(&l0, budget)?;
        CheckOutcome::new("herencia1/zero-part-nondegenerate", verdict_status(&v), v.summary())
    };
    out.push(zero_part);

    if out.iter().all(|o| o.status == Status::Pass) {
        let v = if p == 0 {
            snd_verdict(l, budget)?
        } else {
            azd_exhaustive(l, Some(g), budget)?
        };
        out.push(CheckOutcome::new(
            "herencia1/graded-nondegenerate",
            verdict_status(&v),
            v.summary(),
        ));
    } else {
        out.push(CheckOutcome::skip(
            "herencia1/graded-nondegenerate",
            "a hypothesis failed, the inheritance statement does not apply",
        ));
        let v = snd_verdict(l, budget)?;
        out.push(CheckOutcome::new(
            "herencia1/whole-algebra-nondegenerate",
            verdict_status(&v),
            v.summary(),
        ));
    }
    Ok(out)
}

fn require_graded_ideal(l: &FinAlgebra, g: &ZGrading, ideal: &Subspace) -> Result<()> {
    require_lie(l)?;
    if g.ambient_dim() != l.dim() || ideal.ambient() != l.dim() {
        return Err(AlgError::DimensionMismatch(
            "grading, ideal and algebra must share an ambient dimension".into(),
        ));
    }
    if g.field() != l.field() {
        return Err(AlgError::FieldMismatch(g.field(), l.field()));
    }
    if ideal.field() != l.field() {
        return Err(AlgError::FieldMismatch(ideal.field(), l.field()));
    }
    l.is_ideal(ideal)?;
    if !g.is_graded_subspace(ideal)? {
        return Err(AlgError::InvalidGrading(
            "the ideal is not a graded subspace".into(),
        ));
    }
    Ok(())
}

/// Quadratic annihilator stability inside a graded ideal of a centerless
/// algebra: for every homogeneous member x of QAnn_I(I) and every
/// homogeneous basis element a, the double bracket [x,[x,a]] lands back
/// in QAnn_I(I). Membership is scale invariant, so one representative per
/// projective line suffices.
pub fn check_homcuad(
    l: &FinAlgebra,
    g: &ZGrading,
    ideal: &Subspace,
    budget: u64,
) -> Result<Vec<CheckOutcome>> {
    require_graded_ideal(l, g, ideal)?;
    let p = l.field().characteristic();
    if p == 0 {
        return Err(AlgError::Precondition(
            "quadratic annihilator enumeration needs a finite coefficient field".into(),
        ));
    }
    let center = l.center();
    if center.dim() != 0 {
        return Err(AlgError::Precondition(format!(
            "the statement needs a centerless algebra, center has dimension {}",
            center.dim()
        )));
    }
    let mut out = vec![CheckOutcome::pass(
        "homcuad/graded-ideal",
        format!("graded ideal of dimension {}", ideal.dim()),
    )];
    let mut slices = g.graded_slices(ideal)?;
    slices.sort_by_key(|(d, _)| *d);
    let frames: Vec<Subspace> = slices.iter().map(|(_, s)| s.clone()).collect();
    let weight = enumeration_weight(p, &frames);
    if weight > budget as u128 {
        out.push(CheckOutcome::new(
            "homcuad/closure",
            Status::Inconclusive,
            format!("enumeration weight {weight} exceeds the budget {budget}"),
        ));
        return Ok(out);
    }
    let mut members: Vec<Vec<Scalar>> = Vec::new();
    for frame in &frames {
        for digits in ProjectiveIter::new(frame.dim(), p) {
            let x = digits_to_vec(&digits, frame);
            if qann_member(l, &x, ideal, ideal)?.member {
                members.push(x);
            }
        }
    }
    let mut degs = g.support();
    degs.sort_unstable();
    let mut products = 0usize;
    let mut violation: Option<String> = None;
    'outer: for x in &members {
        for d in &degs {
            let comp = g.component(*d);
            for a in comp.basis_rows() {
                let w = l.product(x, &l.product(x, a));
                products += 1;
                if !qann_member(l, &w, ideal, ideal)?.member {
                    violation = Some(format!(
                        "x = {}, a = {}: the double bracket leaves the annihilator",
                        fmt_coords(x),
                        fmt_coords(a)
                    ));
                    break 'outer;
                }
            }
        }
    }
    out.push(match violation {
        Some(detail) => CheckOutcome::fail("homcuad/closure", detail),
        None => CheckOutcome::pass(
            "homcuad/closure",
            format!(
                "{} homogeneous annihilator members, {} double brackets stay inside",
                members.len(),
                products
            ),
        ),
    });
    Ok(out)
}

/// A graded ideal inherits graded nondegeneracy: if the homogeneous
/// search finds no absolute zero divisor in the whole algebra, it finds
/// none in the ideal, with brackets taken inside the ideal.
pub fn check_gradid(
    l: &FinAlgebra,
    g: &ZGrading,
    ideal: &Subspace,
    budget: u64,
) -> Result<Vec<CheckOutcome>> {
    require_graded_ideal(l, g, ideal)?;
    let p = l.field().characteristic();
    if p == 0 {
        return Err(AlgError::Precondition(
            "the inheritance search needs a finite coefficient field".into(),
        ));
    }
    let whole = azd_exhaustive(l, Some(g), budget)?;
    let mut out = vec![CheckOutcome::new(
        "gradid/whole-algebra",
        match whole.status {
            SndStatus::Inconclusive => Status::Inconclusive,
            _ => Status::Pass,
        },
        whole.summary(),
    )];
    let name = "gradid/ideal-inherits";
    match whole.status {
        SndStatus::Inconclusive => {
            out.push(CheckOutcome::new(
                name,
                Status::Inconclusive,
                "the whole algebra search exceeded its budget",
            ));
        }
        SndStatus::Degenerate => {
            out.push(CheckOutcome::skip(
                name,
                "the whole algebra has a homogeneous absolute zero divisor, nothing to inherit",
            ));
        }
        SndStatus::Nondegenerate => {
            let sub = l.subalgebra_on(ideal)?;
            let mut slices = g.graded_slices(ideal)?;
            slices.sort_by_key(|(d, _)| *d);
            let mut found: Option<Vec<Scalar>> = None;
            let mut examined = 0u64;
            'search: for (_, slice) in &slices {
                for digits in ProjectiveIter::new(slice.dim(), p) {
                    examined += 1;
                    let x = digits_to_vec(&digits, slice);
                    let inside = ideal
                        .coords_of(&x)
                        .expect("slice vectors lie inside the ideal");
                    if squared_ad_vanishes(&sub, &inside) {
                        found = Some(x);
                        break 'search;
                    }
                }
            }
            out.push(match found {
                Some(x) => CheckOutcome::fail(
                    name,
                    format!("homogeneous witness {} annihilates inside the ideal", fmt_coords(&x)),
                ),
                None => CheckOutcome::pass(
                    name,
                    format!("all {examined} homogeneous ideal candidates examined, none annihilates"),
                ),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructureEntry;
    use crate::constructors::{direct_sum, sl};
    use crate::field::FieldTower;

    const Q: FieldTower = FieldTower::Q;
    const F3: FieldTower = FieldTower::Fp(3);
    const F5: FieldTower = FieldTower::Fp(5);

    fn one(f: FieldTower) -> Scalar {
        Scalar::one(f)
    }

    // Basis h, e with [h, e] = e.
    fn borel(f: FieldTower) -> FinAlgebra {
        let entries = vec![
            StructureEntry { i: 0, j: 1, k: 1, c: one(f) },
            StructureEntry { i: 1, j: 0, k: 1, c: Scalar::from_i64(-1, f) },
        ];
        FinAlgebra::build(2, AlgebraKind::Lie, f, entries, None, None, None).unwrap()
    }

    fn borel_grading(l: &FinAlgebra) -> ZGrading {
        let f = l.field();
        ZGrading::new(
            l,
            vec![
                (0, vec![vec_ops::unit(2, 0, f)]),
                (1, vec![vec_ops::unit(2, 1, f)]),
            ],
        )
        .unwrap()
    }

    fn standard_sl2_grading(l: &FinAlgebra) -> ZGrading {
        // sl(2) basis order is e12, h, e21.
        let f = l.field();
        let u = |i| vec_ops::unit(3, i, f);
        ZGrading::new(
            l,
            vec![(-1, vec![u(2)]), (0, vec![u(1)]), (1, vec![u(0)])],
        )
        .unwrap()
    }

    #[test]
    fn zero_and_nilpotents_pass_the_pointwise_test() {
        let l = sl(2, Q).unwrap();
        let zero = vec_ops::zero(3, Q);
        assert!(azd_test(&l, &zero).unwrap().is_azd);
        // e12 is nilpotent but not an absolute zero divisor: [e,[e,f]] = -2e
        let t = azd_test(&l, &vec_ops::unit(3, 0, Q)).unwrap();
        assert!(!t.is_azd);
        let w = t.witness.unwrap();
        assert!(!vec_ops::is_zero(&l.product(
            &vec_ops::unit(3, 0, Q),
            &l.product(&vec_ops::unit(3, 0, Q), &w)
        )));
    }

    #[test]
    fn projective_enumeration_is_lexicographic_and_complete() {
        let seen: Vec<Vec<u64>> = ProjectiveIter::new(2, 3).collect();
        assert_eq!(seen, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        // (p^dim - 1)/(p - 1) lines
        assert_eq!(ProjectiveIter::new(3, 5).count(), 31);
        assert_eq!(ProjectiveIter::new(0, 5).count(), 0);
    }

    #[test]
    fn sl2_over_f5_is_nondegenerate_by_search() {
        let l = sl(2, F5).unwrap();
        let v = azd_exhaustive(&l, None, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(v.status, SndStatus::Nondegenerate);
        assert_eq!(v.method, "exhaustive-Fp");
        assert!(v.params.contains("31 candidates"));
        assert!(v.witness.is_none());
    }

    #[test]
    fn borel_over_f3_has_a_deterministic_witness() {
        let l = borel(F3);
        let v = azd_exhaustive(&l, None, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(v.status, SndStatus::Degenerate);
        // first candidate (0, 1) is the nilpotent basis vector and annihilates
        assert_eq!(v.witness.unwrap(), vec_ops::unit(2, 1, F3));
    }

    #[test]
    fn scaling_does_not_change_the_answer() {
        let l = sl(2, F5);
        let l = l.unwrap();
        for digits in ProjectiveIter::new(3, 5) {
            let x = digits_to_vec(&digits, &Subspace::full(3, F5));
            let base = azd_test(&l, &x).unwrap().is_azd;
            for c in 2..5 {
                let scaled = vec_ops::scale(&Scalar::from_i64(c, F5), &x);
                assert_eq!(azd_test(&l, &scaled).unwrap().is_azd, base);
            }
        }
    }

    #[test]
    fn tiny_budget_is_reported_as_inconclusive() {
        let l = sl(2, F5).unwrap();
        let v = azd_exhaustive(&l, None, 10).unwrap();
        assert_eq!(v.status, SndStatus::Inconclusive);
        assert!(v.witness.is_none());
    }

    #[test]
    fn killing_route_certifies_sl2_and_refutes_the_borel() {
        let v = snd_verdict(&sl(2, Q).unwrap(), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(v.status, SndStatus::Nondegenerate);
        assert_eq!(v.method, "killing");

        let w = snd_verdict(&borel(Q), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(w.status, SndStatus::Degenerate);
        assert_eq!(w.method, "killing");
        // the nilpotent part is the abelian ideal the radical descent finds
        assert_eq!(w.witness.unwrap(), vec_ops::unit(2, 1, Q));
    }

    #[test]
    fn search_and_certificate_agree_across_primes() {
        // the same structure constants, decided by different methods
        assert_eq!(
            snd_verdict(&sl(2, Q).unwrap(), DEFAULT_SEARCH_BUDGET).unwrap().status,
            SndStatus::Nondegenerate
        );
        assert_eq!(
            snd_verdict(&sl(2, F5).unwrap(), DEFAULT_SEARCH_BUDGET).unwrap().status,
            SndStatus::Nondegenerate
        );
        assert_eq!(
            snd_verdict(&borel(Q), DEFAULT_SEARCH_BUDGET).unwrap().status,
            SndStatus::Degenerate
        );
        assert_eq!(
            snd_verdict(&borel(F3), DEFAULT_SEARCH_BUDGET).unwrap().status,
            SndStatus::Degenerate
        );
    }

    #[test]
    fn grequiv_agrees_on_both_kinds_of_fixture () {
        let l = sl(2, F5).unwrap();
        let out = check_grequiv(&l, &standard_sl2_grading(&l), DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(crate::check::all_passed(&out));

        let b = borel(F3);
        let out = check_grequiv(&b, &borel_grading(&b), DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(crate::check::all_passed(&out));
        let agree = out.iter().find(|o| o.name == "grequiv/verdicts-agree").unwrap();
        assert_eq!(agree.status, Status::Pass);
        assert!(agree.detail.contains("degenerate"));
    }

    #[test]
    fn abelian_graded_algebra_is_degenerate_in_both_modes() {
        let l = FinAlgebra::build(2, AlgebraKind::Lie, F3, vec![], None, None, None).unwrap();
        let g = borel_grading(&l);
        let out = check_grequiv(&l, &g, DEFAULT_SEARCH_BUDGET).unwrap();
        let agree = out.iter().find(|o| o.name == "grequiv/verdicts-agree").unwrap();
        assert_eq!(agree.status, Status::Pass);
        assert!(agree.detail.contains("degenerate"));
    }

    #[test]
    fn sl2_standard_grading_breaks_a_hypothesis_yet_stays_nondegenerate() {
        let l = sl(2, Q).unwrap();
        let out = check_herencia1(&l, &standard_sl2_grading(&l), DEFAULT_SEARCH_BUDGET).unwrap();
        let by_name = |n: &str| out.iter().find(|o| o.name == n).unwrap();
        assert_eq!(by_name("herencia1/center-zero").status, Status::Pass);
        assert_eq!(by_name("herencia1/zero-part-generated").status, Status::Pass);
        // the zero part is the abelian Cartan line, an absolute zero divisor
        assert_eq!(by_name("herencia1/zero-part-nondegenerate").status, Status::Fail);
        assert_eq!(by_name("herencia1/graded-nondegenerate").status, Status::Skip);
        assert_eq!(
            by_name("herencia1/whole-algebra-nondegenerate").status,
            Status::Pass
        );
    }

    #[test]
    fn herencia1_rejects_small_characteristic_and_wide_support() {
        let b = borel(F3);
        let err = check_herencia1(&b, &borel_grading(&b), DEFAULT_SEARCH_BUDGET).unwrap_err();
        assert!(matches!(err, AlgError::Precondition(_)));

        let l = sl(2, Q).unwrap();
        let u = |i| vec_ops::unit(3, i, Q);
        let wide = ZGrading::new(
            &l,
            vec![(-2, vec![u(2)]), (0, vec![u(1)]), (2, vec![u(0)])],
        )
        .unwrap();
        let err = check_herencia1(&l, &wide, DEFAULT_SEARCH_BUDGET).unwrap_err();
        assert!(matches!(err, AlgError::InvalidGrading(_)));
    }

    #[test]
    fn quadratic_annihilator_of_the_borel_line_is_stable() {
        let l = borel(F3);
        let g = borel_grading(&l);
        let ideal = Subspace::from_rows(2, F3, vec![vec_ops::unit(2, 1, F3)]).unwrap();
        let out = check_homcuad(&l, &g, &ideal, DEFAULT_SEARCH_BUDGET).unwrap();
        let closure = out.iter().find(|o| o.name == "homcuad/closure").unwrap();
        assert_eq!(closure.status, Status::Pass);
        // one projective point on the line, tested against both basis elements
        assert!(closure.detail.contains("1 homogeneous annihilator members"));
    }

    #[test]
    fn homcuad_on_the_whole_of_sl2_is_vacuous() {
        let l = sl(2, F5).unwrap();
        let g = standard_sl2_grading(&l);
        let ideal = Subspace::full(3, F5);
        let out = check_homcuad(&l, &g, &ideal, DEFAULT_SEARCH_BUDGET).unwrap();
        let closure = out.iter().find(|o| o.name == "homcuad/closure").unwrap();
        assert_eq!(closure.status, Status::Pass);
        assert!(closure.detail.contains("0 homogeneous annihilator members"));
    }

    #[test]
    fn homcuad_requires_an_ideal_and_a_trivial_center() {
        let l = sl(2, F5).unwrap();
        let g = standard_sl2_grading(&l);
        let not_ideal = Subspace::from_rows(3, F5, vec![vec_ops::unit(3, 0, F5)]).unwrap();
        // span(e12) brackets out of itself
        assert!(check_homcuad(&l, &g, &not_ideal, DEFAULT_SEARCH_BUDGET).is_err());
    }

    #[test]
    fn ideal_of_a_graded_nondegenerate_sum_inherits() {
        let s = sl(2, F5).unwrap();
        let l = direct_sum(&s, &s).unwrap();
        let f = F5;
        let u = |i| vec_ops::unit(6, i, f);
        // grade the first summand by the standard weights, the second at zero
        let g = ZGrading::new(
            &l,
            vec![
                (-1, vec![u(2)]),
                (0, vec![u(1), u(3), u(4), u(5)]),
                (1, vec![u(0)]),
            ],
        )
        .unwrap();
        let ideal = Subspace::from_rows(6, f, vec![u(0), u(1), u(2)]).unwrap();
        let out = check_gradid(&l, &g, &ideal, DEFAULT_SEARCH_BUDGET).unwrap();
        let by_name = |n: &str| out.iter().find(|o| o.name == n).unwrap();
        assert_eq!(by_name("gradid/whole-algebra").status, Status::Pass);
        assert!(by_name("gradid/whole-algebra").detail.contains("nondegenerate"));
        assert_eq!(by_name("gradid/ideal-inherits").status, Status::Pass);
    }

    #[test]
    fn degenerate_whole_algebra_makes_inheritance_vacuous() {
        let l = borel(F3);
        let g = borel_grading(&l);
        let ideal = Subspace::from_rows(2, F3, vec![vec_ops::unit(2, 1, F3)]).unwrap();
        let out = check_gradid(&l, &g, &ideal, DEFAULT_SEARCH_BUDGET).unwrap();
        let inherit = out.iter().find(|o| o.name == "gradid/ideal-inherits").unwrap();
        assert_eq!(inherit.status, Status::Skip);
    }
}
