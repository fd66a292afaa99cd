//! The named check suites behind `alg suite`.
//!
//! Each suite pins a fixture set and a driver from the analysis crates.  A
//! suite run is deterministic given its name, seed, and configuration; the
//! only fields that vary between identical runs are the per-record timings.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use alg_core::check::CheckOutcome;
use alg_core::grading::ZGrading;
use alg_core::subspace::Subspace;
use alg_core::{derivation, inner_ideal, local, nondegen, peirce, qm};
use alg_core::{AlgError, FieldTower, Result, Scalar};
use alg_finitary::banded::PeriodicBandedMatrix;
use alg_finitary::checks as fin;
use alg_finitary::family::Family;
use alg_finitary::sparse::SparseInfMatrix;

use crate::fixture::{BuiltFixture, Fixture};
use crate::report::{CheckRecord, Report};

pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub fixtures_dir: PathBuf,
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: DEFAULT_SEED,
            fixtures_dir: PathBuf::from("fixtures"),
            budget: nondegen::DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl SuiteConfig {
    fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("budget".into(), self.budget.to_string());
        m.insert(
            "fixtures_dir".into(),
            self.fixtures_dir.display().to_string(),
        );
        m
    }
}

/// Every runnable suite name, with `all` last.
pub fn suite_names() -> &'static [&'static str] {
    &[
        "grequiv",
        "herencia1",
        "homcuad",
        "gradid",
        "peirce-idempotents",
        "local-iso",
        "lemma-local",
        "qs-zero",
        "qm-der",
        "zero-component",
        "inner-ideals",
        "finitary-grading",
        "finitary-snd",
        "finitary-qm",
        "all",
    ]
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new(name, cfg.seed, cfg.echo());
    match name {
        "grequiv" => grequiv(cfg, &mut report)?,
        "herencia1" => herencia1(cfg, &mut report)?,
        "homcuad" => homcuad(cfg, &mut report)?,
        "gradid" => gradid(cfg, &mut report)?,
        "peirce-idempotents" => peirce_idempotents(cfg, &mut report)?,
        "local-iso" => local_iso(cfg, &mut report)?,
        "lemma-local" => lemma_local(cfg, &mut report)?,
        "qs-zero" => qs_zero(cfg, &mut report)?,
        "qm-der" => qm_der(cfg, &mut report)?,
        "zero-component" => zero_component(cfg, &mut report)?,
        "inner-ideals" => inner_ideals(cfg, &mut report)?,
        "finitary-grading" => finitary_grading(cfg, &mut report)?,
        "finitary-snd" => finitary_snd(cfg, &mut report)?,
        "finitary-qm" => finitary_qm(cfg, &mut report)?,
        "all" => {
            for n in suite_names() {
                if *n == "all" {
                    continue;
                }
                let sub = run_suite(n, cfg)?;
                for rec in sub.checks {
                    report.push(rec);
                }
            }
        }
        other => {
            return Err(AlgError::Parse(format!(
                "unknown suite {other:?}; expected one of {}",
                suite_names().join(", ")
            )))
        }
    }
    Ok(report)
}

fn load(cfg: &SuiteConfig, name: &str) -> Result<BuiltFixture> {
    let path = cfg.fixtures_dir.join(format!("{name}.json"));
    Fixture::load(&path)?.build()
}

fn require_grading<'a>(b: &'a BuiltFixture) -> Result<&'a ZGrading> {
    b.grading.as_ref().ok_or_else(|| {
        AlgError::Precondition(format!("fixture {} carries no grading", b.name))
    })
}

fn require_subspace<'a>(b: &'a BuiltFixture, name: &str) -> Result<&'a Subspace> {
    b.subspaces.get(name).ok_or_else(|| {
        AlgError::Precondition(format!("fixture {} has no subspace {name:?}", b.name))
    })
}

fn require_element<'a>(b: &'a BuiltFixture, name: &str) -> Result<&'a [Scalar]> {
    b.elements
        .get(name)
        .map(|v| v.as_slice())
        .ok_or_else(|| {
            AlgError::Precondition(format!("fixture {} has no element {name:?}", b.name))
        })
}

/// Maps a driver result onto records.  Precondition errors become skips and
/// inconclusive certificates stay inconclusive, so a suite run is total;
/// anything else is a hard failure and is reported as one.
fn push_driver(
    report: &mut Report,
    anchor: &str,
    prefix: &str,
    started: Instant,
    result: Result<Vec<CheckOutcome>>,
) {
    let ms = started.elapsed().as_millis() as u64;
    match result {
        Ok(outcomes) => {
            for o in outcomes {
                let mut rec = CheckRecord::from_outcome(&o, anchor, ms);
                rec.name = format!("{prefix}/{}", rec.name);
                report.push(rec);
            }
        }
        Err(e) => report.push(error_record(prefix, anchor, &e, ms)),
    }
}

fn error_record(name: &str, anchor: &str, e: &AlgError, ms: u64) -> CheckRecord {
    let status = match e {
        AlgError::Precondition(_) => "skip",
        AlgError::Inconclusive(_) => "inconclusive",
        _ => "fail",
    };
    CheckRecord {
        name: name.to_string(),
        anchor: anchor.to_string(),
        status: status.into(),
        expected: None,
        actual: e.to_string(),
        witness: None,
        duration_ms: ms,
    }
}

fn push_expect(report: &mut Report, anchor: &str, name: &str, ok: bool, detail: String, ms: u64) {
    report.push(CheckRecord {
        name: name.to_string(),
        anchor: anchor.to_string(),
        status: if ok { "pass" } else { "fail" }.into(),
        expected: None,
        actual: detail,
        witness: None,
        duration_ms: ms,
    });
}

fn grequiv(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for name in [
        "sl2_f3",
        "sl2_f5",
        "borel2_f3",
        "abelian2_f3",
        "heis3_f3",
        "otrunc4_f5",
    ] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        let t = Instant::now();
        let res = nondegen::check_grequiv(&b.algebra, g, cfg.budget);
        push_driver(report, "grequiv", name, t, res);
    }
    Ok(())
}

fn herencia1(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for name in ["sl2_q", "sl2_f5", "sl2sl2_f5", "otrunc4_f5"] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        let t = Instant::now();
        let res = nondegen::check_herencia1(&b.algebra, g, cfg.budget);
        push_driver(report, "herencia1", name, t, res);
    }
    Ok(())
}

/// Resolves an ideal argument: the reserved name `full` means the whole
/// algebra, anything else is looked up among the fixture's subspaces.
fn resolve_ideal(b: &BuiltFixture, name: &str) -> Result<Subspace> {
    if name == "full" {
        Ok(Subspace::full(b.algebra.dim(), b.algebra.field()))
    } else {
        Ok(require_subspace(b, name)?.clone())
    }
}

fn homcuad(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for (name, ideals) in [
        ("sl2_f3", &["full"][..]),
        ("borel2_f3", &["ideal-rad", "full"][..]),
    ] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        for ideal_name in ideals {
            let ideal = resolve_ideal(&b, ideal_name)?;
            let t = Instant::now();
            let res = nondegen::check_homcuad(&b.algebra, g, &ideal, cfg.budget);
            push_driver(report, "homcuad", &format!("{name}/{ideal_name}"), t, res);
        }
    }
    Ok(())
}

fn gradid(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for (name, ideals) in [
        ("sl2_f5", &["full"][..]),
        ("sl2sl2_f5", &["ideal-left", "ideal-right", "full"][..]),
    ] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        for ideal_name in ideals {
            let ideal = resolve_ideal(&b, ideal_name)?;
            let t = Instant::now();
            let res = nondegen::check_gradid(&b.algebra, g, &ideal, cfg.budget);
            push_driver(report, "gradid", &format!("{name}/{ideal_name}"), t, res);
        }
    }
    Ok(())
}

fn gradings_agree(a: &ZGrading, b: &ZGrading) -> bool {
    let sa = a.support();
    if sa != b.support() {
        return false;
    }
    sa.iter().all(|d| a.part(*d) == b.part(*d))
}

fn peirce_idempotents(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    const ANCHOR: &str = "peirce-idempotents";
    for name in ["m2_q", "m3_q", "m4_q", "m5p_q"] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        let alg = &b.algebra;
        let t = Instant::now();
        let outcome = (|| -> Result<Vec<CheckOutcome>> {
            let ps = peirce::peirce_system(alg, g)?;
            let mut out = Vec::new();
            out.push(CheckOutcome::expect(
                "peirce/direct-sum",
                ps.is_direct_sum(),
                match ps.failure() {
                    Some(f) => f.to_string(),
                    None => format!("radius {}", ps.radius()),
                },
            ));
            let es = peirce::idempotents_from_grading(alg, g)?;
            out.push(CheckOutcome::expect(
                "peirce/frame-orthogonal",
                peirce::family_is_complete_orthogonal(alg, &es),
                format!("{} idempotents summing to the unit", es.len()),
            ));
            out.push(CheckOutcome::expect(
                "peirce/blocks-are-corners",
                ps.blocks_match_corners(alg, &es)?,
                "H_ij = e_i A e_j for every pair",
            ));
            let violation = ps.multiplication_rule(alg)?;
            out.push(CheckOutcome::expect(
                "peirce/multiplication-rule",
                violation.is_none(),
                match violation {
                    Some((i, j, k, l)) => format!("H_{i}{j} H_{k}{l} leaves its target"),
                    None => "H_ij H_jk lands in H_ik, disjoint products vanish".into(),
                },
            ));
            let g2 = peirce::grading_from_idempotents(alg, &es)?;
            out.push(CheckOutcome::expect(
                "peirce/grading-roundtrip",
                gradings_agree(g, &g2),
                "grading -> idempotent frame -> grading is the identity",
            ));
            Ok(out)
        })();
        push_driver(report, ANCHOR, name, t, outcome);
    }
    Ok(())
}

fn local_iso(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for (name, point) in [
        ("m3_q", "x-corner"),
        ("m3_q", "x-shift"),
        ("m2m3_q", "x-mixed"),
    ] {
        let b = load(cfg, name)?;
        let x = require_element(&b, point)?;
        let t = Instant::now();
        let res = local::check_local_iso(&b.algebra, x);
        push_driver(report, "local-iso", &format!("{name}/{point}"), t, res);
    }
    Ok(())
}

fn lemma_local(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for (name, point) in [
        ("m2_q", "x-corner"),
        ("m3_q", "x-corner"),
        ("m3_q", "x-shift"),
        ("m2m3_q", "x-mixed"),
    ] {
        let b = load(cfg, name)?;
        let x = require_element(&b, point)?;
        let t = Instant::now();
        let res = (|| {
            let loc = local::local_algebra(&b.algebra, x)?;
            let whole = Subspace::full(loc.structure.dim(), loc.structure.field());
            local::check_lemma_local(&b.algebra, x, &loc, &whole)
        })();
        push_driver(report, "lemma-local", &format!("{name}/{point}"), t, res);
    }
    Ok(())
}

fn qs_zero(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for name in ["m3_q", "m4_q", "m5_q"] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        let t = Instant::now();
        let res = local::check_qs_zero_component(&b.algebra, g);
        push_driver(report, "qs-zero", name, t, res);
    }
    Ok(())
}

fn qm_der(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    const ANCHOR: &str = "qm-der";
    // Full derivation algebras with their inner spans.
    for (name, want) in [
        ("sl2_q", 3usize),
        ("sl3_q", 8),
        ("sl4_q", 15),
        ("m2_q", 3),
        ("m3_q", 8),
    ] {
        let b = load(cfg, name)?;
        let t = Instant::now();
        let res = (|| -> Result<Vec<CheckOutcome>> {
            let d = derivation::derivations(&b.algebra)?;
            let inner = derivation::inner_span(&b.algebra)?;
            let mut out = vec![CheckOutcome::expect(
                "der/dim",
                d.dim() == want,
                format!("derivation space has dim {}, expected {want}", d.dim()),
            )];
            out.push(CheckOutcome::expect(
                "der/inner-exhausts",
                inner == *d.space(),
                format!("inner span dim {}", inner.dim()),
            ));
            Ok(out)
        })();
        push_driver(report, ANCHOR, name, t, res);
    }
    // Starred derivations of the transpose fixtures.
    for (name, want) in [("m3t_q", 3usize), ("m5t_q", 10)] {
        let b = load(cfg, name)?;
        let t = Instant::now();
        let res = (|| -> Result<Vec<CheckOutcome>> {
            let s = derivation::sderivations(&b.algebra)?;
            Ok(vec![CheckOutcome::expect(
                "sder/dim",
                s.dim() == want,
                format!("starred derivation space has dim {}, expected {want}", s.dim()),
            )])
        })();
        push_driver(report, ANCHOR, name, t, res);
    }
    // The adjoint kernel is the center, on every fixture in the directory.
    for name in fixture_files(cfg)? {
        let b = load(cfg, &name)?;
        let t = Instant::now();
        let res = (|| -> Result<Vec<CheckOutcome>> {
            let k = derivation::ad_kernel(&b.algebra)?;
            let z = b.algebra.center();
            Ok(vec![CheckOutcome::expect(
                "ad-kernel-is-center",
                k == z,
                format!("kernel dim {}, center dim {}", k.dim(), z.dim()),
            )])
        })();
        push_driver(report, ANCHOR, &name, t, res);
    }
    // Semisimple certificates collapse the maximal quotient onto Der.
    for name in ["sl2_q", "sl3_q", "sl4_q"] {
        let b = load(cfg, name)?;
        let t = Instant::now();
        let res = (|| -> Result<Vec<CheckOutcome>> {
            let d = derivation::derivations(&b.algebra)?;
            let q = qm::qm_compute(&b.algebra)?;
            Ok(vec![CheckOutcome::expect(
                "qm-equals-der",
                q.space.dim() == d.dim() && q.space.space() == d.space(),
                q.certificate.clone(),
            )])
        })();
        push_driver(report, ANCHOR, name, t, res);
    }
    Ok(())
}

fn fixture_files(cfg: &SuiteConfig) -> Result<Vec<String>> {
    let mut names = Vec::new();
    let entries = std::fs::read_dir(&cfg.fixtures_dir)
        .map_err(|e| AlgError::Parse(format!("{}: {e}", cfg.fixtures_dir.display())))?;
    for entry in entries {
        let entry = entry.map_err(|e| AlgError::Parse(e.to_string()))?;
        let path = entry.path();
        if path.extension().is_some_and(|x| x == "json") {
            if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                names.push(stem.to_string());
            }
        }
    }
    names.sort();
    Ok(names)
}

fn zero_component(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    for name in ["m3_q", "m4_q", "m5_q", "m6t_q"] {
        let b = load(cfg, name)?;
        let g = require_grading(&b)?;
        let t = Instant::now();
        let res = qm::check_zero_component_iso(&b.algebra, g).map(|r| r.outcomes);
        push_driver(report, "zero-component", name, t, res);
    }
    Ok(())
}

fn inner_ideals(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    let b = load(cfg, "sl2_f5")?;
    let inner = require_subspace(&b, "inner-e")?;
    let t = Instant::now();
    let res = (|| -> Result<Vec<CheckOutcome>> {
        let rep = inner_ideal::inner_ideal_tests(&b.algebra, inner, cfg.budget)?;
        Ok(vec![
            CheckOutcome::expect(
                "inner-ideal/closed",
                rep.is_inner_ideal,
                "[B,[B,L]] lands back in B",
            ),
            CheckOutcome::expect("inner-ideal/abelian", rep.is_abelian, "[B,B] = 0"),
            CheckOutcome::new("inner-ideal/minimal", rep.minimality, rep.detail.clone()),
        ])
    })();
    push_driver(report, "inner-ideals", "sl2_f5/inner-e", t, res);
    Ok(())
}

const FINITARY_FAMILIES: [(Family, &[u64]); 3] = [
    (Family::Sl { split: 1 }, &[3, 4]),
    (Family::O, &[4, 6]),
    (Family::Sp, &[4, 6]),
];

fn finitary_grading(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    const ANCHOR: &str = "finitary-grading";
    let field = FieldTower::Q;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for (fam, bounds) in FINITARY_FAMILIES {
        for &bound in bounds {
            let t = Instant::now();
            let label = format!("{}{}", fam.name(), bound);
            match fam.truncate(bound, field) {
                Ok((alg, g)) => {
                    let dims: Vec<String> = g
                        .support()
                        .iter()
                        .map(|d| format!("{d}: {}", g.part(*d).map_or(0, |s| s.dim())))
                        .collect();
                    push_expect(
                        report,
                        ANCHOR,
                        &format!("{label}/truncates"),
                        true,
                        format!("dim {}, parts {{{}}}", alg.dim(), dims.join(", ")),
                        t.elapsed().as_millis() as u64,
                    );
                }
                Err(e) => {
                    report.push(error_record(
                        &format!("{label}/truncates"),
                        ANCHOR,
                        &e,
                        t.elapsed().as_millis() as u64,
                    ));
                }
            }
            let t = Instant::now();
            match fin::l0_bracket_generation(&fam, bound, 0, field) {
                Ok(rep) => push_expect(
                    report,
                    ANCHOR,
                    &format!("{label}/l0-bracket-generation"),
                    rep.generated,
                    format!(
                        "degree zero target dim {}, bracket span dim {}",
                        rep.target_dim, rep.bracket_span_dim
                    ),
                    t.elapsed().as_millis() as u64,
                ),
                Err(e) => report.push(error_record(
                    &format!("{label}/l0-bracket-generation"),
                    ANCHOR,
                    &e,
                    t.elapsed().as_millis() as u64,
                )),
            }
        }
        // Degree additivity on random homogeneous generator pairs.
        let t = Instant::now();
        let bound = 6;
        let mut checked = 0usize;
        let mut bad = None;
        for _ in 0..100 {
            let d1 = rng.random_range(-1..=1i64);
            let d2 = rng.random_range(-1..=1i64);
            let g1 = fam.generators(d1, bound, field);
            let g2 = fam.generators(d2, bound, field);
            let a = &g1[rng.random_range(0..g1.len())];
            let b = &g2[rng.random_range(0..g2.len())];
            let w = a.bracket(b);
            checked += 1;
            if !fam.degree_member(&w, d1 + d2) {
                bad = Some((d1, d2));
                break;
            }
        }
        push_expect(
            report,
            ANCHOR,
            &format!("{}/degree-additive", fam.name()),
            bad.is_none(),
            match bad {
                Some((d1, d2)) => format!("bracket of degrees {d1}, {d2} left degree {}", d1 + d2),
                None => format!("{checked} random generator pairs at size {bound}"),
            },
            t.elapsed().as_millis() as u64,
        );
    }
    Ok(())
}

/// A random nonzero member of the family, supported inside `bound`: a short
/// combination of generators, homogeneous when a degree is given.
fn random_member(
    fam: &Family,
    deg: Option<i64>,
    bound: u64,
    field: FieldTower,
    rng: &mut impl Rng,
) -> SparseInfMatrix {
    loop {
        let mut x = SparseInfMatrix::zero(field);
        for _ in 0..rng.random_range(1..=3usize) {
            let d = match deg {
                Some(d) => d,
                None => rng.random_range(-1..=1i64),
            };
            let gens = fam.generators(d, bound, field);
            let g = &gens[rng.random_range(0..gens.len())];
            x = x.add(&g.scale(&fin::random_scalar(field, rng)));
        }
        if !x.is_zero() {
            return x;
        }
    }
}

fn random_nonzero_sparse(
    bound: u64,
    entries: usize,
    field: FieldTower,
    rng: &mut impl Rng,
) -> SparseInfMatrix {
    loop {
        let x = fin::random_sparse(bound, entries, field, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn finitary_snd(cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    const ANCHOR: &str = "finitary-snd";
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fields = [FieldTower::Q, FieldTower::Fp(5)];
    let bound = 6;

    // 40 elements of the full finitary algebra, 40 of the traceless one,
    // then 60 homogeneous elements of each form family, 20 per degree.
    let mut groups: Vec<(String, Option<Family>, Option<i64>, usize)> = vec![
        ("gl".into(), None, None, 40),
        ("sl".into(), Some(Family::Sl { split: 1 }), None, 40),
    ];
    for fam in [Family::O, Family::Sp] {
        for d in [-1i64, 0, 1] {
            groups.push((format!("{}/deg{d}", fam.name()), Some(fam), Some(d), 20));
        }
    }

    for (label, fam, deg, count) in groups {
        let t = Instant::now();
        let mut witnesses = 0usize;
        let mut inconclusive = 0usize;
        let mut first_open = None;
        for k in 0..count {
            let field = fields[k % fields.len()];
            let x = match &fam {
                Some(f) => random_member(f, deg, bound, field, &mut rng),
                None => random_nonzero_sparse(bound, 4, field, &mut rng),
            };
            match fin::azd_witness_search_inf(fam.as_ref(), &x, 1)? {
                fin::WitnessSearch::Witness { .. } => witnesses += 1,
                fin::WitnessSearch::Inconclusive { .. } => {
                    inconclusive += 1;
                    if first_open.is_none() {
                        first_open = Some(x.clone());
                    }
                }
            }
        }
        push_expect(
            report,
            ANCHOR,
            &format!("finitary/{label}/witnesses"),
            witnesses == count && inconclusive == 0,
            format!("{witnesses}/{count} witnessed, {inconclusive} inconclusive"),
            t.elapsed().as_millis() as u64,
        );
    }

    // The blockwise double bracket expansion on random samples.
    let t = Instant::now();
    let split = 2;
    let mut samples = Vec::with_capacity(50);
    for k in 0..50 {
        let field = fields[k % fields.len()];
        let x = fin::random_block_diagonal(split, bound, 4, field, &mut rng);
        let y = fin::random_sparse(bound, 5, field, &mut rng);
        samples.push((x, y));
    }
    match fin::block_azd_identity_check(split, &samples) {
        Ok(rep) => push_expect(
            report,
            ANCHOR,
            "finitary/block-double-bracket",
            rep.all_match(),
            format!("{}/{} samples match the expansion", rep.matches, rep.samples),
            t.elapsed().as_millis() as u64,
        ),
        Err(e) => report.push(error_record(
            "finitary/block-double-bracket",
            ANCHOR,
            &e,
            t.elapsed().as_millis() as u64,
        )),
    }
    Ok(())
}

fn finitary_qm(_cfg: &SuiteConfig, report: &mut Report) -> Result<()> {
    const ANCHOR: &str = "finitary-qm";
    let field = FieldTower::Q;
    let fam = Family::Sl { split: 1 };
    let bound = 12;
    let one = Scalar::from_i64(1, field);
    let qs: Vec<(&str, PeriodicBandedMatrix)> = vec![
        ("identity", PeriodicBandedMatrix::scalar(one.clone())),
        (
            "pair-rotation",
            PeriodicBandedMatrix::alternating_pair_form(field),
        ),
        (
            "corner-projection",
            PeriodicBandedMatrix::from_sparse(SparseInfMatrix::unit(1, 1, field)),
        ),
        ("period3-shift", period3_shift(field)?),
    ];
    for (label, q) in &qs {
        let t = Instant::now();
        match fin::rcf_derivation_check(&fam, q, bound) {
            Ok(rep) => {
                let scalar_txt = match &rep.scalar {
                    Some(c) => format!("scalar {}", c.render()),
                    None => "not scalar".into(),
                };
                let witness_txt = match &rep.witness {
                    Some((idx, _)) => format!("moves generator {idx}"),
                    None => "kills every generator".into(),
                };
                push_expect(
                    report,
                    ANCHOR,
                    &format!("rcf/{label}"),
                    rep.identity_preserved && rep.kernel_consistent,
                    format!(
                        "{} generators, brackets stay traceless, {scalar_txt}, {witness_txt}, support <= {}",
                        rep.generators_tested, rep.max_bracket_support
                    ),
                    t.elapsed().as_millis() as u64,
                );
            }
            Err(e) => report.push(error_record(
                &format!("rcf/{label}"),
                ANCHOR,
                &e,
                t.elapsed().as_millis() as u64,
            )),
        }
    }
    Ok(())
}

/// Superdiagonal with entries cycling 1, 2, 3 down the band.
pub fn period3_shift(field: FieldTower) -> Result<PeriodicBandedMatrix> {
    let z = Scalar::from_i64(0, field);
    let table = vec![
        vec![z.clone(), z.clone(), Scalar::from_i64(1, field)],
        vec![z.clone(), z.clone(), Scalar::from_i64(2, field)],
        vec![z.clone(), z.clone(), Scalar::from_i64(3, field)],
    ];
    PeriodicBandedMatrix::new(field, z.clone(), 3, 1, table, SparseInfMatrix::zero(field))
}

/// One-off finitary run for the CLI: a single family, one check kind.
pub fn run_finitary(family: &str, check: &str, size: u64, seed: u64) -> Result<Report> {
    let fam = match family {
        "sl" => Family::Sl { split: 1 },
        "o" => Family::O,
        "sp" => Family::Sp,
        other => {
            return Err(AlgError::Parse(format!(
                "unknown family {other:?}; expected sl, o, or sp"
            )))
        }
    };
    // For the form families the size argument counts pairs.
    let bound = match fam {
        Family::Sl { .. } => size,
        Family::O | Family::Sp => 2 * size,
    };
    let field = FieldTower::Q;
    let mut config = BTreeMap::new();
    config.insert("family".into(), family.to_string());
    config.insert("size".into(), size.to_string());
    let mut report = Report::new(&format!("finitary-{check}"), seed, config);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match check {
        "grading" => {
            let t = Instant::now();
            let (alg, g) = fam.truncate(bound, field)?;
            let dims: Vec<String> = g
                .support()
                .iter()
                .map(|d| format!("{d}: {}", g.part(*d).map_or(0, |s| s.dim())))
                .collect();
            push_expect(
                &mut report,
                "finitary-grading",
                &format!("{}{bound}/truncates", fam.name()),
                true,
                format!("dim {}, parts {{{}}}", alg.dim(), dims.join(", ")),
                t.elapsed().as_millis() as u64,
            );
            let t = Instant::now();
            let mut bad = None;
            for _ in 0..100 {
                let d1 = rng.random_range(-1..=1i64);
                let d2 = rng.random_range(-1..=1i64);
                let g1 = fam.generators(d1, bound, field);
                let g2 = fam.generators(d2, bound, field);
                let a = &g1[rng.random_range(0..g1.len())];
                let b = &g2[rng.random_range(0..g2.len())];
                if !fam.degree_member(&a.bracket(b), d1 + d2) {
                    bad = Some((d1, d2));
                    break;
                }
            }
            push_expect(
                &mut report,
                "finitary-grading",
                &format!("{}/degree-additive", fam.name()),
                bad.is_none(),
                match bad {
                    Some((d1, d2)) => format!("degrees {d1} + {d2} failed"),
                    None => format!("100 random generator pairs at size {bound}"),
                },
                t.elapsed().as_millis() as u64,
            );
        }
        "l0gen" => {
            let t = Instant::now();
            let rep = fin::l0_bracket_generation(&fam, bound, 0, field)?;
            push_expect(
                &mut report,
                "finitary-grading",
                &format!("{}{bound}/l0-bracket-generation", fam.name()),
                rep.generated,
                format!(
                    "degree zero target dim {}, bracket span dim {}",
                    rep.target_dim, rep.bracket_span_dim
                ),
                t.elapsed().as_millis() as u64,
            );
        }
        "snd" => {
            let t = Instant::now();
            let count = 20;
            let mut witnesses = 0;
            let mut inconclusive = 0;
            for k in 0..count {
                let f = if k % 2 == 0 {
                    FieldTower::Q
                } else {
                    FieldTower::Fp(5)
                };
                let x = random_member(&fam, None, bound.min(6), f, &mut rng);
                match fin::azd_witness_search_inf(Some(&fam), &x, 1)? {
                    fin::WitnessSearch::Witness { .. } => witnesses += 1,
                    fin::WitnessSearch::Inconclusive { .. } => inconclusive += 1,
                }
            }
            push_expect(
                &mut report,
                "finitary-snd",
                &format!("finitary/{}/witnesses", fam.name()),
                witnesses == count && inconclusive == 0,
                format!("{witnesses}/{count} witnessed, {inconclusive} inconclusive"),
                t.elapsed().as_millis() as u64,
            );
        }
        "qm" => {
            let qs: Vec<(&str, PeriodicBandedMatrix)> = match fam {
                Family::Sl { .. } => vec![
                    (
                        "identity",
                        PeriodicBandedMatrix::scalar(Scalar::from_i64(1, field)),
                    ),
                    (
                        "pair-rotation",
                        PeriodicBandedMatrix::alternating_pair_form(field),
                    ),
                    (
                        "corner-projection",
                        PeriodicBandedMatrix::from_sparse(SparseInfMatrix::unit(1, 1, field)),
                    ),
                    ("period3-shift", period3_shift(field)?),
                ],
                // For the form families only elements of the centralizer
                // class are admissible.
                Family::O => vec![(
                    "elementary-skew",
                    PeriodicBandedMatrix::from_sparse(skew_unit(1, 2, field)),
                )],
                Family::Sp => vec![(
                    "pair-rotation",
                    PeriodicBandedMatrix::alternating_pair_form(field),
                )],
            };
            for (label, q) in &qs {
                let t = Instant::now();
                let rep = fin::rcf_derivation_check(&fam, q, bound.max(6))?;
                push_expect(
                    &mut report,
                    "finitary-qm",
                    &format!("rcf/{label}"),
                    rep.identity_preserved && rep.kernel_consistent,
                    format!(
                        "{} generators tested, bracket support <= {}",
                        rep.generators_tested, rep.max_bracket_support
                    ),
                    t.elapsed().as_millis() as u64,
                );
            }
        }
        other => {
            return Err(AlgError::Parse(format!(
                "unknown check {other:?}; expected grading, snd, qm, or l0gen"
            )))
        }
    }
    Ok(report)
}

fn skew_unit(i: u64, j: u64, field: FieldTower) -> SparseInfMatrix {
    let one = Scalar::from_i64(1, field);
    let mut x = SparseInfMatrix::zero(field);
    x.add_at(i, j, &one);
    x.add_at(j, i, &one.neg());
    x
}

/// Sample elements drawn the same way the finitary-snd suite draws them, for
/// reuse by integration tests.
pub fn snd_sample(
    fam: Option<&Family>,
    deg: Option<i64>,
    bound: u64,
    field: FieldTower,
    rng: &mut impl Rng,
) -> SparseInfMatrix {
    match fam {
        Some(f) => random_member(f, deg, bound, field, rng),
        None => random_nonzero_sparse(bound, 4, field, rng),
    }
}

/// The built algebra behind a fixture file, for callers outside the suite
/// drivers.
pub fn load_fixture(cfg: &SuiteConfig, name: &str) -> Result<BuiltFixture> {
    load(cfg, name)
}
