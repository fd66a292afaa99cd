//! Inner ideals of a Lie algebra and exhaustive minimality checks.
//!
//! A subalgebra B is an inner ideal when [B,[B,L]] stays inside B. Over a
//! finite field, minimality (no proper nonzero subspace of B is itself an
//! inner ideal of L) is decided by walking every candidate subspace once,
//! using the unique reduced row echelon basis per subspace, so the scan
//! neither repeats nor misses anything.

use crate::algebra::{AlgebraKind, FinAlgebra};
use crate::check::Status;
use crate::error::{AlgError, Result};
use crate::field::Scalar;
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct InnerIdealReport {
    pub is_inner_ideal: bool,
    pub is_abelian: bool,
    /// Pass: no proper nonzero subspace of B is an inner ideal. Fail: one
    /// is, named in the detail. Skip: B itself is not an inner ideal.
    /// Inconclusive: no finite field, or the candidate count is over budget.
    pub minimality: Status,
    pub detail: String,
}

fn contains_double_bracket(l: &FinAlgebra, c: &Subspace) -> Result<bool> {
    let full = Subspace::full(l.dim(), l.field());
    let once = l.span_product(c, &full)?;
    let twice = l.span_product(c, &once)?;
    Ok(c.contains_subspace(&twice) && c.contains_subspace(&l.span_product(c, c)?))
}

/// Lexicographic pivot column sets of size d inside 0..k.
fn pivot_sets(k: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, d, &mut Vec::with_capacity(d), &mut out);
    out
}

/// Slots a reduced echelon basis with the given pivots leaves free: entries
/// to the right of each pivot that are not pivot columns themselves.
fn free_slots(pivots: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for (r, p) in pivots.iter().enumerate() {
        for c in p + 1..k {
            if !pivots.contains(&c) {
                slots.push((r, c));
            }
        }
    }
    slots
}

fn proper_subspace_count(k: usize, p: u64) -> u128 {
    let mut total: u128 = 0;
    for d in 1..k {
        for pivots in pivot_sets(k, d) {
            let slots = free_slots(&pivots, k).len() as u32;
            total = total.saturating_add((p as u128).checked_pow(slots).unwrap_or(u128::MAX));
        }
    }
    total
}

/// Visits the digit rows of every proper nonzero subspace of F_p^k exactly
/// once, dimensions ascending, pivot sets and free entries lexicographic.
/// Stops early when the visitor returns true.
fn scan_proper_subspaces<F>(k: usize, p: u64, mut visit: F) -> u64
where
    F: FnMut(&[Vec<u64>]) -> bool,
{
    let mut seen = 0u64;
    for d in 1..k {
        for pivots in pivot_sets(k, d) {
            let slots = free_slots(&pivots, k);
            let mut digits = vec![0u64; slots.len()];
            loop {
                let mut rows = vec![vec![0u64; k]; d];
                for (r, pc) in pivots.iter().enumerate() {
                    rows[r][*pc] = 1;
                }
                for (s, (r, c)) in slots.iter().enumerate() {
                    rows[*r][*c] = digits[s];
                }
                seen += 1;
                if visit(&rows) {
                    return seen;
                }
                // odometer over the free entries, last slot fastest
                let mut i = slots.len();
                loop {
                    if i == 0 {
                        break;
                    }
                    digits[i - 1] += 1;
                    if digits[i - 1] < p {
                        break;
                    }
                    digits[i - 1] = 0;
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
            }
        }
    }
    seen
}

/// Bracket closure, commutativity and minimality of a candidate inner
/// ideal. Minimality enumerates subspaces, so it needs a finite field and
/// a candidate count within the budget; everything else is exact linear
/// algebra over any field.
pub fn inner_ideal_tests(l: &FinAlgebra, b: &Subspace, budget: u64) -> Result<InnerIdealReport> {
    if l.kind() != AlgebraKind::Lie {
        return Err(AlgError::Precondition(
            "inner ideals are a Lie algebra notion".into(),
        ));
    }
    if b.ambient() != l.dim() {
        return Err(AlgError::DimensionMismatch(format!(
            "subspace of ambient dimension {} in an algebra of dimension {}",
            b.ambient(),
            l.dim()
        )));
    }
    if b.field() != l.field() {
        return Err(AlgError::FieldMismatch(b.field(), l.field()));
    }
    let is_inner_ideal = contains_double_bracket(l, b)?;
    let is_abelian = l.span_product(b, b)?.dim() == 0;
    if !is_inner_ideal {
        return Ok(InnerIdealReport {
            is_inner_ideal,
            is_abelian,
            minimality: Status::Skip,
            detail: "the double bracket leaves the subspace".into(),
        });
    }
    let p = l.field().characteristic();
    if p == 0 {
        return Ok(InnerIdealReport {
            is_inner_ideal,
            is_abelian,
            minimality: Status::Inconclusive,
            detail: "subspace enumeration needs a finite coefficient field".into(),
        });
    }
    let k = b.dim();
    let count = proper_subspace_count(k, p);
    if count > budget as u128 {
        return Ok(InnerIdealReport {
            is_inner_ideal,
            is_abelian,
            minimality: Status::Inconclusive,
            detail: format!("{count} proper subspaces exceed the budget {budget}"),
        });
    }
    let field = l.field();
    let mut smaller: Option<Subspace> = None;
    let mut error: Option<AlgError> = None;
    let examined = scan_proper_subspaces(k, p, |rows| {
        let ambient: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| {
                let coords: Vec<Scalar> = row
                    .iter()
                    .map(|d| Scalar::from_i64(*d as i64, field))
                    .collect();
                b.vec_from_coords(&coords)
            })
            .collect();
        let cand = match Subspace::from_rows(b.ambient(), field, ambient) {
            Ok(c) => c,
            Err(e) => {
                error = Some(e);
                return true;
            }
        };
        match contains_double_bracket(l, &cand) {
            Ok(true) => {
                smaller = Some(cand);
                true
            }
            Ok(false) => false,
            Err(e) => {
                error = Some(e);
                true
            }
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(match smaller {
        Some(c) => InnerIdealReport {
            is_inner_ideal,
            is_abelian,
            minimality: Status::Fail,
            detail: format!(
                "a proper inner ideal of dimension {} sits inside, first basis vector {}",
                c.dim(),
                fmt_row(c.basis_rows().next().expect("nonzero subspace"))
            ),
        },
        None => InnerIdealReport {
            is_inner_ideal,
            is_abelian,
            minimality: Status::Pass,
            detail: format!("all {examined} proper nonzero subspaces examined, none is an inner ideal"),
        },
    })
}

fn fmt_row(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.render()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::sl;
    use crate::field::FieldTower;
    use crate::matrix::vec_ops;

    const Q: FieldTower = FieldTower::Q;
    const F5: FieldTower = FieldTower::Fp(5);

    #[test]
    fn scan_counts_match_the_gaussian_numbers() {
        // F_3^2 has 4 lines; F_2^3 has 7 lines and 7 planes
        assert_eq!(scan_proper_subspaces(2, 3, |_| false), 4);
        assert_eq!(scan_proper_subspaces(3, 2, |_| false), 14);
        assert_eq!(proper_subspace_count(3, 2), 14);
        assert_eq!(proper_subspace_count(3, 5), 62);
    }

    #[test]
    fn nilpotent_line_is_a_minimal_abelian_inner_ideal() {
        let l = sl(2, F5).unwrap();
        let b = Subspace::from_rows(3, F5, vec![vec_ops::unit(3, 0, F5)]).unwrap();
        let r = inner_ideal_tests(&l, &b, 1_000_000).unwrap();
        assert!(r.is_inner_ideal);
        assert!(r.is_abelian);
        assert_eq!(r.minimality, Status::Pass);
    }

    #[test]
    fn the_whole_algebra_is_inner_but_far_from_minimal() {
        let l = sl(2, F5).unwrap();
        let b = Subspace::full(3, F5);
        let r = inner_ideal_tests(&l, &b, 1_000_000).unwrap();
        assert!(r.is_inner_ideal);
        assert!(!r.is_abelian);
        assert_eq!(r.minimality, Status::Fail);
        assert!(r.detail.contains("dimension 1"));
    }

    #[test]
    fn split_torus_line_is_not_an_inner_ideal() {
        let l = sl(2, F5).unwrap();
        // e12 + e21 spans a line that brackets onto h and back out
        let mut v = vec_ops::unit(3, 0, F5);
        v[2] = Scalar::one(F5);
        let b = Subspace::from_rows(3, F5, vec![v]).unwrap();
        let r = inner_ideal_tests(&l, &b, 1_000_000).unwrap();
        assert!(!r.is_inner_ideal);
        assert!(r.is_abelian);
        assert_eq!(r.minimality, Status::Skip);
    }

    #[test]
    fn budget_and_field_limits_are_reported() {
        let l = sl(2, F5).unwrap();
        let r = inner_ideal_tests(&l, &Subspace::full(3, F5), 3).unwrap();
        assert_eq!(r.minimality, Status::Inconclusive);

        let lq = sl(2, Q).unwrap();
        let b = Subspace::from_rows(3, Q, vec![vec_ops::unit(3, 0, Q)]).unwrap();
        let r = inner_ideal_tests(&lq, &b, 1_000_000).unwrap();
        assert!(r.is_inner_ideal);
        assert_eq!(r.minimality, Status::Inconclusive);
    }
}
