//! The pinned fixture set the suites run against.
//!
//! Everything is generated from the stock constructors so that the JSON files
//! under `fixtures/` are reproducible: `cargo run --example make_fixtures`
//! rewrites them, and an integration test fails when the shipped files drift
//! from this catalog.

use alg_core::algebra::{AlgebraKind, FinAlgebra, StructureEntry};
use alg_core::constructors as cons;
use alg_core::grading::ZGrading;
use alg_core::matrix::vec_ops;
use alg_core::{FieldTower, Result, Scalar};
use alg_finitary::family::Family;

use crate::fixture::Fixture;

pub fn all() -> Result<Vec<Fixture>> {
    Ok(vec![
        sl2("sl2_q", FieldTower::Q)?,
        sl2("sl2_f3", FieldTower::Fp(3))?,
        sl2_f5()?,
        sl_blocks("sl3_q", 3, &[1, 2])?,
        sl_blocks("sl4_q", 4, &[2, 2])?,
        sl2sl2_f5()?,
        borel2_f3()?,
        abelian2_f3()?,
        heis3_f3()?,
        otrunc4_f5()?,
        m2_q()?,
        m3_q()?,
        matrix_blocks("m4_q", 4, &[2, 2])?,
        matrix_blocks("m5_q", 5, &[2, 3])?,
        matrix_blocks("m5p_q", 5, &[1, 2, 2])?,
        transpose_fixture("m3t_q", 3, None)?,
        transpose_fixture("m5t_q", 5, None)?,
        transpose_fixture("m6t_q", 6, Some(&[3, 3]))?,
        m2m3_q()?,
    ])
}

fn short_grading(alg: &FinAlgebra, n: usize, split: &[usize]) -> Result<ZGrading> {
    ZGrading::new(alg, cons::sl_block_components(n, split, alg.field()))
}

fn sl2(name: &str, field: FieldTower) -> Result<Fixture> {
    let alg = cons::sl(2, field)?;
    let g = short_grading(&alg, 2, &[1, 1])?;
    Ok(Fixture::from_parts(name, &alg, Some(&g), &[], &[]))
}

/// The counterexample algebra: over F_5 the span of e_{12} is an abelian
/// minimal inner ideal, checked by the inner-ideals suite.
fn sl2_f5() -> Result<Fixture> {
    let field = FieldTower::Fp(5);
    let alg = cons::sl(2, field)?;
    let g = short_grading(&alg, 2, &[1, 1])?;
    // e_{12} sits first in the basis layout.
    let e12 = vec_ops::unit(3, 0, field);
    Ok(Fixture::from_parts(
        "sl2_f5",
        &alg,
        Some(&g),
        &[],
        &[("inner-e", vec![e12])],
    ))
}

fn sl_blocks(name: &str, n: usize, split: &[usize]) -> Result<Fixture> {
    let alg = cons::sl(n, FieldTower::Q)?;
    let g = short_grading(&alg, n, split)?;
    Ok(Fixture::from_parts(name, &alg, Some(&g), &[], &[]))
}

fn embed(v: &[Scalar], offset: usize, total: usize, field: FieldTower) -> Vec<Scalar> {
    let mut out = vec![Scalar::from_i64(0, field); total];
    for (i, c) in v.iter().enumerate() {
        out[offset + i] = c.clone();
    }
    out
}

fn sl2sl2_f5() -> Result<Fixture> {
    let field = FieldTower::Fp(5);
    let a = cons::sl(2, field)?;
    let sum = cons::direct_sum(&a, &a)?;
    let half = a.dim();
    let total = sum.dim();
    let mut by_degree: Vec<(i64, Vec<Vec<Scalar>>)> = Vec::new();
    for (d, rows) in cons::sl_block_components(2, &[1, 1], field) {
        let mut embedded = Vec::new();
        for row in &rows {
            embedded.push(embed(row, 0, total, field));
        }
        for row in &rows {
            embedded.push(embed(row, half, total, field));
        }
        by_degree.push((d, embedded));
    }
    let g = ZGrading::new(&sum, by_degree)?;
    let left: Vec<Vec<Scalar>> = (0..half).map(|i| vec_ops::unit(total, i, field)).collect();
    let right: Vec<Vec<Scalar>> = (half..total)
        .map(|i| vec_ops::unit(total, i, field))
        .collect();
    Ok(Fixture::from_parts(
        "sl2sl2_f5",
        &sum,
        Some(&g),
        &[],
        &[("ideal-left", left), ("ideal-right", right)],
    ))
}

/// Two-dimensional solvable algebra [h, e] = e. Its radical span(e) is a
/// graded ideal with zero center, the smallest interesting input for the
/// quadratic annihilator checks.
fn borel2_f3() -> Result<Fixture> {
    let field = FieldTower::Fp(3);
    let one = Scalar::from_i64(1, field);
    let entries = vec![
        StructureEntry {
            i: 0,
            j: 1,
            k: 1,
            c: one.clone(),
        },
        StructureEntry {
            i: 1,
            j: 0,
            k: 1,
            c: one.neg(),
        },
    ];
    let alg = FinAlgebra::build(
        2,
        AlgebraKind::Lie,
        field,
        entries,
        None,
        None,
        Some(vec!["h".into(), "e".into()]),
    )?;
    let h = vec_ops::unit(2, 0, field);
    let e = vec_ops::unit(2, 1, field);
    let g = ZGrading::new(&alg, vec![(0, vec![h]), (1, vec![e.clone()])])?;
    Ok(Fixture::from_parts(
        "borel2_f3",
        &alg,
        Some(&g),
        &[],
        &[("ideal-rad", vec![e])],
    ))
}

fn abelian2_f3() -> Result<Fixture> {
    let field = FieldTower::Fp(3);
    let alg = FinAlgebra::build(
        2,
        AlgebraKind::Lie,
        field,
        Vec::new(),
        None,
        None,
        Some(vec!["a".into(), "b".into()]),
    )?;
    let g = ZGrading::new(
        &alg,
        vec![
            (0, vec![vec_ops::unit(2, 0, field)]),
            (1, vec![vec_ops::unit(2, 1, field)]),
        ],
    )?;
    Ok(Fixture::from_parts("abelian2_f3", &alg, Some(&g), &[], &[]))
}

/// Heisenberg algebra [e, f] = z with e, f, z in degrees 1, -1, 0. Every
/// element is an absolute zero divisor, so the graded and ungraded searches
/// must both find one.
fn heis3_f3() -> Result<Fixture> {
    let field = FieldTower::Fp(3);
    let one = Scalar::from_i64(1, field);
    let entries = vec![
        StructureEntry {
            i: 0,
            j: 1,
            k: 2,
            c: one.clone(),
        },
        StructureEntry {
            i: 1,
            j: 0,
            k: 2,
            c: one.neg(),
        },
    ];
    let alg = FinAlgebra::build(
        3,
        AlgebraKind::Lie,
        field,
        entries,
        None,
        None,
        Some(vec!["e".into(), "f".into(), "z".into()]),
    )?;
    let g = ZGrading::new(
        &alg,
        vec![
            (1, vec![vec_ops::unit(3, 0, field)]),
            (-1, vec![vec_ops::unit(3, 1, field)]),
            (0, vec![vec_ops::unit(3, 2, field)]),
        ],
    )?;
    Ok(Fixture::from_parts("heis3_f3", &alg, Some(&g), &[], &[]))
}

/// Degree-wise truncation of the finitary orthogonal family at four indices,
/// dimension six over F_5.
fn otrunc4_f5() -> Result<Fixture> {
    let (alg, g) = Family::O.truncate(4, FieldTower::Fp(5))?;
    Ok(Fixture::from_parts("otrunc4_f5", &alg, Some(&g), &[], &[]))
}

fn matrix_blocks(name: &str, n: usize, split: &[usize]) -> Result<Fixture> {
    let field = FieldTower::Q;
    let alg = cons::matrix_algebra(n, field)?;
    let g = ZGrading::new(&alg, cons::matrix_block_components(n, split, field))?;
    Ok(Fixture::from_parts(name, &alg, Some(&g), &[], &[]))
}

fn m2_q() -> Result<Fixture> {
    let field = FieldTower::Q;
    let alg = cons::matrix_algebra(2, field)?;
    let g = ZGrading::new(&alg, cons::matrix_block_components(2, &[1, 1], field))?;
    let corner = cons::matrix_unit(2, 0, 0, field);
    Ok(Fixture::from_parts(
        "m2_q",
        &alg,
        Some(&g),
        &[("x-corner", corner)],
        &[],
    ))
}

fn m3_q() -> Result<Fixture> {
    let field = FieldTower::Q;
    let alg = cons::matrix_algebra(3, field)?;
    let g = ZGrading::new(&alg, cons::matrix_block_components(3, &[1, 2], field))?;
    let corner = cons::diagonal_idempotent(3, [0, 1], field);
    let shift = vec_ops::add(
        &cons::matrix_unit(3, 0, 1, field),
        &cons::matrix_unit(3, 1, 2, field),
    );
    Ok(Fixture::from_parts(
        "m3_q",
        &alg,
        Some(&g),
        &[("x-corner", corner), ("x-shift", shift)],
        &[],
    ))
}

fn transpose_fixture(name: &str, n: usize, split: Option<&[usize]>) -> Result<Fixture> {
    let field = FieldTower::Q;
    let alg = cons::matrix_algebra_with_transpose(n, field)?;
    let g = match split {
        Some(s) => Some(ZGrading::new(
            &alg,
            cons::matrix_block_components(n, s, field),
        )?),
        None => None,
    };
    Ok(Fixture::from_parts(name, &alg, g.as_ref(), &[], &[]))
}

/// M_2 + M_3 with a regular element spread across both summands, for the
/// local algebra checks at a non-simple parent.
fn m2m3_q() -> Result<Fixture> {
    let field = FieldTower::Q;
    let a = cons::matrix_algebra(2, field)?;
    let b = cons::matrix_algebra(3, field)?;
    let sum = cons::direct_sum(&a, &b)?;
    let total = sum.dim();
    let left = embed(&cons::matrix_unit(2, 0, 0, field), 0, total, field);
    let right = embed(
        &cons::diagonal_idempotent(3, [0, 1], field),
        a.dim(),
        total,
        field,
    );
    let mixed = vec_ops::add(&left, &right);
    Ok(Fixture::from_parts(
        "m2m3_q",
        &sum,
        None,
        &[("x-mixed", mixed)],
        &[],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_builds() {
        let fixtures = all().unwrap();
        assert_eq!(fixtures.len(), 19);
        for fx in fixtures {
            let built = fx.build().unwrap_or_else(|e| panic!("{}: {e}", fx.name));
            assert_eq!(built.algebra.dim(), fx.dim);
            let text = fx.canonical_json();
            let back: Fixture = serde_json::from_str(&text).unwrap();
            assert_eq!(back.canonical_json(), text, "{} round trip", fx.name);
        }
    }

    #[test]
    fn names_are_unique() {
        let fixtures = all().unwrap();
        let mut names: Vec<String> = fixtures.iter().map(|f| f.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), fixtures.len());
    }
}
