//! The shipped fixture files must stay in lockstep with the generator in
//! `catalog`. Regenerate with `cargo run --example make_fixtures` after
//! touching either side.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use alg_cli::catalog;
use alg_cli::fixture::Fixture;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn shipped_files_match_the_catalog_byte_for_byte() {
    let all = catalog::all().expect("catalog builds");
    assert!(!all.is_empty());
    for fx in &all {
        let path = fixtures_dir().join(format!("{}.json", fx.name));
        let disk = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
        assert_eq!(
            disk,
            fx.canonical_json(),
            "stale fixture file {}, regenerate with the make_fixtures example",
            fx.name
        );
    }
}

#[test]
fn no_stray_files_in_the_fixture_directory() {
    let known: BTreeSet<String> = catalog::all()
        .expect("catalog builds")
        .into_iter()
        .map(|fx| format!("{}.json", fx.name))
        .collect();
    for entry in fs::read_dir(fixtures_dir()).expect("fixture directory exists") {
        let name = entry.expect("readable entry").file_name();
        let name = name.to_string_lossy().into_owned();
        assert!(known.contains(&name), "unexpected fixture file {name}");
    }
}

#[test]
fn every_shipped_file_loads_builds_and_round_trips() {
    for fx in catalog::all().expect("catalog builds") {
        let path = fixtures_dir().join(format!("{}.json", fx.name));
        let loaded = Fixture::load(&path).expect("fixture parses");
        let built = loaded.build().expect("fixture builds");
        assert_eq!(built.name, fx.name);
        assert_eq!(
            loaded.canonical_json(),
            fx.canonical_json(),
            "round trip changed {}",
            fx.name
        );
    }
}
