//! Rewrites the fixture directory from the catalog.
//!
//! Usage: cargo run --example make_fixtures [DIR]

use std::path::PathBuf;

use alg_cli::catalog;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"));
    std::fs::create_dir_all(&dir).expect("fixture directory");
    let fixtures = catalog::all().expect("catalog construction");
    for fx in fixtures {
        let path = dir.join(format!("{}.json", fx.name));
        fx.save(&path).expect("fixture write");
        println!("wrote {}", path.display());
    }
}
