//! End-to-end exit checks. Each numbered check drives the shipped fixtures
//! through the public suite entry points (or the library directly where a
//! single computation is the point) and prints one verdict line.
//!
//! Two checks are recorded as honest failures: restriction of degree-zero
//! derivations to the zero part of a block grading always has a kernel
//! spanned by inner derivations of the zero-part center, and the orthogonal
//! family at its smallest truncation has a degree-zero part too large for
//! the bracket span of the outer components. Both shapes are asserted
//! exactly so any drift shows up as a test failure rather than a silently
//! changed verdict line.

use std::path::PathBuf;
use std::time::Instant;

use alg_cli::report::{CheckRecord, Report};
use alg_cli::suites::{load_fixture, run_suite, SuiteConfig};
use alg_core::matrix::vec_ops;
use alg_core::nondegen::{azd_exhaustive, azd_test, SndStatus, DEFAULT_SEARCH_BUDGET};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn suite(name: &str, cfg: &SuiteConfig) -> Report {
    run_suite(name, cfg).unwrap_or_else(|e| panic!("suite {name} failed to run: {e}"))
}

fn counts(r: &Report, passed: usize, failed: usize, skipped: usize) {
    assert_eq!(
        (r.passed, r.failed, r.skipped, r.inconclusive),
        (passed, failed, skipped, 0),
        "suite {} counts drifted: {:?}",
        r.suite,
        r.checks
            .iter()
            .filter(|c| c.status != "pass")
            .map(|c| format!("{} [{}] {}", c.name, c.status, c.actual))
            .collect::<Vec<_>>()
    );
}

fn rec<'a>(r: &'a Report, name: &str) -> &'a CheckRecord {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("suite {} has no record named {name}", r.suite))
}

fn rec_is<'a>(r: &'a Report, name: &str, status: &str) -> &'a CheckRecord {
    let c = rec(r, name);
    assert_eq!(c.status, status, "record {name}: {}", c.actual);
    c
}

fn rec_eq(r: &Report, name: &str, status: &str, actual: &str) {
    let c = rec_is(r, name, status);
    assert_eq!(c.actual, actual, "record {name} detail drifted");
}

fn name_prefixes(r: &Report, separator: &str) -> std::collections::BTreeSet<String> {
    r.checks
        .iter()
        .filter_map(|c| c.name.split(separator).next().map(str::to_string))
        .collect()
}

struct Line {
    number: usize,
    met: bool,
    label: &'static str,
    detail: String,
    ms: u128,
}

fn check(
    lines: &mut Vec<Line>,
    number: usize,
    met: bool,
    label: &'static str,
    run: impl FnOnce() -> String,
) {
    let started = Instant::now();
    let detail = run();
    lines.push(Line {
        number,
        met,
        label,
        detail,
        ms: started.elapsed().as_millis(),
    });
}

fn main() {
    let cfg = SuiteConfig {
        fixtures_dir: fixtures_dir(),
        ..SuiteConfig::default()
    };
    let total = Instant::now();
    let mut lines = Vec::new();

    check(&mut lines, 1, true, "graded-counterexample", || {
        let started = Instant::now();
        let b = load_fixture(&cfg, "sl2_f5").expect("sl2_f5 loads and builds");
        let g = b.grading.as_ref().expect("sl2_f5 ships its 3-grading");
        assert_eq!(g.support(), vec![-1, 0, 1], "standard 3-grading expected");
        let whole = azd_exhaustive(&b.algebra, Some(g), DEFAULT_SEARCH_BUDGET)
            .expect("homogeneous search runs");
        assert_eq!(
            whole.status,
            SndStatus::Nondegenerate,
            "whole algebra: {}",
            whole.summary()
        );
        let zero = g.part(0).expect("degree zero part");
        assert_eq!(zero.dim(), 1);
        // Basis order is e12, e11 - e22, e21, so index 1 is the diagonal
        // element; coords_of doubles as the membership proof.
        let h = vec_ops::unit(3, 1, b.algebra.field());
        let h0 = zero
            .coords_of(&h)
            .expect("e11 - e22 spans the degree zero part");
        assert!(!vec_ops::is_zero(&h0));
        let l0 = b
            .algebra
            .subalgebra_on(zero)
            .expect("degree zero part closes under the bracket");
        let out = azd_test(&l0, &h0).expect("square of ad runs");
        assert!(out.is_azd, "e11 - e22 should square to zero under ad");
        let ms = started.elapsed().as_millis();
        assert!(ms < 1000, "took {ms} ms, budget is one second");
        format!(
            "whole sl2 over F5 clean by {}, yet e11 - e22 is an absolute zero divisor of the degree zero subalgebra",
            whole.method
        )
    });

    check(&mut lines, 2, true, "graded-search-equivalence", || {
        let started = Instant::now();
        let r = suite("grequiv", &cfg);
        counts(&r, 18, 0, 0);
        let anchors = name_prefixes(&r, "/grequiv/");
        assert!(anchors.len() >= 4, "need at least four graded fixtures");
        for a in &anchors {
            rec_is(&r, &format!("{a}/grequiv/verdicts-agree"), "pass");
        }
        let ms = started.elapsed().as_millis();
        assert!(ms < 10_000, "took {ms} ms, budget is ten seconds");
        format!(
            "full and homogeneous verdicts agree on all {} fixtures",
            anchors.len()
        )
    });

    check(&mut lines, 3, true, "quadratic-annihilator-closure", || {
        let r = suite("homcuad", &cfg);
        counts(&r, 6, 0, 0);
        for name in [
            "sl2_f3/full/homcuad/closure",
            "borel2_f3/ideal-rad/homcuad/closure",
            "borel2_f3/full/homcuad/closure",
        ] {
            rec_is(&r, name, "pass");
        }
        "double brackets from the homogeneous quadratic annihilator stay inside on every centerless fixture over F3".into()
    });

    check(&mut lines, 4, true, "graded-ideal-inheritance", || {
        let r = suite("gradid", &cfg);
        counts(&r, 8, 0, 0);
        for name in [
            "sl2_f5/full/gradid/ideal-inherits",
            "sl2sl2_f5/ideal-left/gradid/ideal-inherits",
            "sl2sl2_f5/ideal-right/gradid/ideal-inherits",
            "sl2sl2_f5/full/gradid/ideal-inherits",
        ] {
            rec_is(&r, name, "pass");
        }
        "every supplied graded ideal of the F5 fixtures is graded nondegenerate by exhaustive search".into()
    });

    check(&mut lines, 5, true, "peirce-idempotent-roundtrip", || {
        let r = suite("peirce-idempotents", &cfg);
        counts(&r, 20, 0, 0);
        for f in ["m2_q", "m3_q", "m4_q", "m5p_q"] {
            for part in [
                "direct-sum",
                "frame-orthogonal",
                "blocks-are-corners",
                "multiplication-rule",
                "grading-roundtrip",
            ] {
                rec_is(&r, &format!("{f}/peirce/{part}"), "pass");
            }
        }
        "Peirce axioms, complete orthogonal frames, and grading round trips hold on M2 through the 5-graded M5".into()
    });

    check(&mut lines, 6, true, "local-algebra-identification", || {
        let r = suite("local-iso", &cfg);
        counts(&r, 15, 0, 0);
        for anchor in ["m3_q/x-corner", "m3_q/x-shift", "m2m3_q/x-mixed"] {
            rec_is(&r, &format!("{anchor}/local-iso/regular"), "pass");
            rec_is(&r, &format!("{anchor}/local-iso/identity"), "pass");
        }
        "regular inverses found and the local algebra of the quotient matches the local algebra on the nose, three points".into()
    });

    check(&mut lines, 7, true, "local-annihilator-lemma", || {
        let r = suite("lemma-local", &cfg);
        counts(&r, 20, 0, 0);
        let anchors = name_prefixes(&r, "/lemma-local/");
        assert!(anchors.len() >= 3, "need at least three points");
        for a in &anchors {
            rec_is(&r, &format!("{a}/lemma-local/essential-sum"), "pass");
            rec_is(&r, &format!("{a}/lemma-local/annihilator-bound"), "pass");
        }
        format!(
            "ideal plus annihilator essential and the annihilator sits inside lan and ran at {} points",
            anchors.len()
        )
    });

    check(&mut lines, 8, true, "quotient-zero-component", || {
        let r = suite("qs-zero", &cfg);
        counts(&r, 18, 0, 0);
        for f in ["m3_q", "m4_q", "m5_q"] {
            rec_is(&r, &format!("{f}/qs-zero/zero-component-splits"), "pass");
            rec_is(&r, &format!("{f}/qs-zero/corners-semisimple"), "pass");
        }
        "degree zero component splits into the diagonal corners and every corner is semisimple on M3, M4, M5".into()
    });

    check(&mut lines, 9, true, "derivation-oracles", || {
        let r = suite("qm-der", &cfg);
        counts(&r, 34, 0, 0);
        for (f, d) in [
            ("sl2_q", 3),
            ("sl3_q", 8),
            ("sl4_q", 15),
            ("m2_q", 3),
            ("m3_q", 8),
        ] {
            rec_eq(
                &r,
                &format!("{f}/der/dim"),
                "pass",
                &format!("derivation space has dim {d}, expected {d}"),
            );
        }
        for f in ["sl2_q", "sl3_q", "sl4_q"] {
            rec_is(&r, &format!("{f}/der/inner-exhausts"), "pass");
        }
        for (f, d) in [("m3t_q", 3), ("m5t_q", 10)] {
            rec_eq(
                &r,
                &format!("{f}/sder/dim"),
                "pass",
                &format!("starred derivation space has dim {d}, expected {d}"),
            );
        }
        let kernels = r
            .checks
            .iter()
            .filter(|c| c.name.ends_with("/ad-kernel-is-center"))
            .count();
        assert_eq!(kernels, 19, "one ad-kernel check per shipped fixture");
        "derivation dimensions, inner spans, starred variants, and ad kernels all match the closed forms".into()
    });

    // The zero part of the (p, q) block grading of sl_n is s(gl_p + gl_q),
    // dimension p^2 + q^2 - 1. Its one dimensional center acts as zero on
    // itself but not on the outer components, so its inner derivations are
    // killed by restriction: the map cannot be injective. The skew side of
    // M6 under transpose has centerless zero part (so3 + so3) and restricts
    // injectively. The dimensions are asserted here against the independent
    // solver; the injectivity verdict stays an honest fail.
    check(&mut lines, 10, false, "zero-component-derivations", || {
        let r = suite("zero-component", &cfg);
        counts(&r, 15, 4, 9);
        for (f, d) in [("m3_q", 4), ("m4_q", 7), ("m5_q", 12), ("m6t_q", 17)] {
            rec_is(&r, &format!("{f}/zero-component/central-simple"), "pass");
            rec_is(&r, &format!("{f}/zero-component/inner-onto"), "pass");
            rec_eq(
                &r,
                &format!("{f}/zero-component/derived-dims"),
                "pass",
                &format!("graded degree-zero dim {d}, zero-part derivation dim {d}"),
            );
            rec_eq(
                &r,
                &format!("{f}/zero-component/derived-injective"),
                "fail",
                "restriction kernel dim 1, spanned by inner derivations of the zero-part center",
            );
        }
        rec_is(&r, "m6t_q/zero-component/skew-inner-onto", "pass");
        rec_eq(
            &r,
            "m6t_q/zero-component/skew-derived-dims",
            "pass",
            "graded degree-zero dim 6, zero-part derivation dim 6",
        );
        rec_eq(
            &r,
            "m6t_q/zero-component/skew-derived-injective",
            "pass",
            "restriction kernel dim 0",
        );
        "degree-zero dims match the zero-part derivation algebras (4, 7, 12, 17) and the skew path on m6t_q is injective with both sides dim 6, but plain restriction has kernel dim 1 on every fixture, spanned by inner derivations of the zero-part center".into()
    });

    check(&mut lines, 11, true, "abelian-minimal-inner-ideal", || {
        let r = suite("inner-ideals", &cfg);
        counts(&r, 3, 0, 0);
        for part in ["closed", "abelian", "minimal"] {
            rec_is(&r, &format!("sl2_f5/inner-e/inner-ideal/{part}"), "pass");
        }
        "the span of e12 in sl2 over F5 is an abelian minimal inner ideal by exhaustive subspace enumeration".into()
    });

    // The orthogonal family at its smallest truncation has outer components
    // of dimension 1 each, so their bracket span cannot reach the dimension
    // 4 degree-zero part; generation needs m >= 3. The failure shape is
    // asserted exactly.
    check(&mut lines, 12, false, "finitary-gradings", || {
        let r = suite("finitary-grading", &cfg);
        counts(&r, 14, 1, 0);
        for (name, actual) in [
            ("sl3/truncates", "dim 8, parts {-1: 2, 0: 4, 1: 2}"),
            ("sl4/truncates", "dim 15, parts {-1: 3, 0: 9, 1: 3}"),
            ("o4/truncates", "dim 6, parts {-1: 1, 0: 4, 1: 1}"),
            ("o6/truncates", "dim 15, parts {-1: 3, 0: 9, 1: 3}"),
            ("sp4/truncates", "dim 10, parts {-1: 3, 0: 4, 1: 3}"),
            ("sp6/truncates", "dim 21, parts {-1: 6, 0: 9, 1: 6}"),
        ] {
            rec_eq(&r, name, "pass", actual);
        }
        for name in [
            "sl3/l0-bracket-generation",
            "sl4/l0-bracket-generation",
            "o6/l0-bracket-generation",
            "sp4/l0-bracket-generation",
            "sp6/l0-bracket-generation",
        ] {
            rec_is(&r, name, "pass");
        }
        rec_eq(
            &r,
            "o4/l0-bracket-generation",
            "fail",
            "degree zero target dim 4, bracket span dim 1",
        );
        for fam in ["sl", "o", "sp"] {
            rec_eq(
                &r,
                &format!("{fam}/degree-additive"),
                "pass",
                "100 random generator pairs at size 6",
            );
        }
        "all six truncations are 3-gradings and degree additivity holds on 100 random pairs per family, but at the smallest orthogonal truncation the outer brackets span dim 1 of the dim 4 degree-zero part".into()
    });

    let snd = suite("finitary-snd", &cfg);

    check(&mut lines, 13, true, "finitary-witness-search", || {
        counts(&snd, 9, 0, 0);
        let mut samples = 0;
        for (label, n) in [
            ("gl", 40),
            ("sl", 40),
            ("o/deg-1", 20),
            ("o/deg0", 20),
            ("o/deg1", 20),
            ("sp/deg-1", 20),
            ("sp/deg0", 20),
            ("sp/deg1", 20),
        ] {
            rec_eq(
                &snd,
                &format!("finitary/{label}/witnesses"),
                "pass",
                &format!("{n}/{n} witnessed, 0 inconclusive"),
            );
            samples += n;
        }
        assert_eq!(samples, 200);
        "a square-killing witness found for all 200 seeded nonzero elements, no inconclusive window".into()
    });

    check(&mut lines, 14, true, "row-column-finite-action", || {
        let r = suite("finitary-qm", &cfg);
        counts(&r, 4, 0, 0);
        rec_eq(
            &r,
            "rcf/identity",
            "pass",
            "143 generators, brackets stay traceless, scalar 1, kills every generator, support <= 0",
        );
        for (name, support) in [
            ("rcf/pair-rotation", 12),
            ("rcf/corner-projection", 12),
            ("rcf/period3-shift", 13),
        ] {
            rec_eq(
                &r,
                name,
                "pass",
                &format!(
                    "143 generators, brackets stay traceless, not scalar, moves generator 0, support <= {support}"
                ),
            );
        }
        "bracket action on sl at size 12 is finitely supported and identity preserving for all four samples, and only the scalar one acts as zero".into()
    });

    check(&mut lines, 15, true, "block-double-bracket", || {
        rec_eq(
            &snd,
            "finitary/block-double-bracket",
            "pass",
            "50/50 samples match the expansion",
        );
        "the corner of [x,[x,y]] equals a0^2 b - 2 a0 b d0 + b d0^2 on 50 seeded samples".into()
    });

    let mut met = 0;
    for line in &lines {
        let verdict = if line.met { "pass" } else { "fail" };
        println!(
            "check {:02} [{verdict}] {}: {} ({} ms)",
            line.number, line.label, line.detail, line.ms
        );
        if line.met {
            met += 1;
        }
    }
    let ms = total.elapsed().as_millis();
    assert_eq!(lines.len(), 15);
    assert!(ms < 120_000, "took {ms} ms, budget is two minutes");
    println!(
        "acceptance: {met}/15 met, {} recorded shortfalls, {} ms",
        15 - met,
        ms
    );
}
