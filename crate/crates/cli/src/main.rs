use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use alg_cli::fixture::{BuiltFixture, Fixture};
use alg_cli::suites::{self, SuiteConfig};
use alg_core::subspace::Subspace;
use alg_core::{derivation, nondegen, qm, AlgError};

#[derive(Parser)]
#[command(name = "alg", version, about = "Graded Lie and associative algebra checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Load a fixture, rebuild the algebra, and verify every declared axiom.
    Validate { fixture: String },
    /// Compute the derivation space of a fixture.
    Der {
        fixture: String,
        /// Restrict the domain to a named subspace of the fixture.
        #[arg(long)]
        ideal: Option<String>,
        /// Decompose the derivation space along the fixture's grading.
        #[arg(long)]
        graded: bool,
    },
    /// Compute the maximal quotient space when a certificate is available.
    Qm { fixture: String },
    /// Run a named check suite over the fixture directory.
    Suite {
        name: String,
        #[arg(long, env = "ALG_SEED")]
        seed: Option<u64>,
        #[arg(long, env = "ALG_FIXTURES")]
        fixtures: Option<PathBuf>,
        /// Write the JSON report here as well as printing the text form.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Enumeration weight cap for the exhaustive searches.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run one finitary check against an infinite matrix family.
    Finitary {
        /// sl, o, or sp.
        family: String,
        /// grading, snd, qm, or l0gen.
        #[arg(long)]
        check: String,
        /// Matrix size for sl, number of index pairs for o and sp.
        #[arg(long)]
        size: u64,
        #[arg(long, env = "ALG_SEED")]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AlgError> {
    match cli.cmd {
        Cmd::Validate { fixture } => validate(&fixture),
        Cmd::Der {
            fixture,
            ideal,
            graded,
        } => der(&fixture, ideal.as_deref(), graded),
        Cmd::Qm { fixture } => qm_cmd(&fixture),
        Cmd::Suite {
            name,
            seed,
            fixtures,
            out,
            budget,
        } => suite(&name, seed, fixtures, out, budget),
        Cmd::Finitary {
            family,
            check,
            size,
            seed,
        } => {
            let report = suites::run_finitary(&family, &check, size, seed.unwrap_or(suites::DEFAULT_SEED))?;
            print!("{}", report.render_text());
            Ok(ExitCode::from(report.exit_code() as u8))
        }
    }
}

/// Fixture arguments accept a direct path or a bare name resolved against
/// the fixture directory.
fn resolve_fixture(arg: &str) -> Result<PathBuf, AlgError> {
    let direct = Path::new(arg);
    if direct.is_file() {
        return Ok(direct.to_path_buf());
    }
    let dir = std::env::var_os("ALG_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"));
    for candidate in [dir.join(arg), dir.join(format!("{arg}.json"))] {
        if candidate.is_file() {
            return Ok(candidate);
        }
    }
    Err(AlgError::Parse(format!("no fixture found for {arg:?}")))
}

fn load_built(arg: &str) -> Result<(Fixture, BuiltFixture), AlgError> {
    let path = resolve_fixture(arg)?;
    let fx = Fixture::load(&path)?;
    let built = fx.build()?;
    Ok((fx, built))
}

fn validate(arg: &str) -> Result<ExitCode, AlgError> {
    let path = resolve_fixture(arg)?;
    let fx = Fixture::load(&path)?;
    match fx.build() {
        Ok(b) => {
            println!(
                "{}: {} algebra of dim {} over {} validates",
                b.name,
                b.algebra.kind().as_str(),
                b.algebra.dim(),
                b.algebra.field()
            );
            if let Some(g) = &b.grading {
                let dims: Vec<String> = g
                    .support()
                    .iter()
                    .map(|d| format!("{d}: {}", g.part(*d).map_or(0, |s| s.dim())))
                    .collect();
                println!("  grading parts {{{}}}", dims.join(", "));
            }
            for (name, _) in &b.elements {
                println!("  element {name}");
            }
            for (name, s) in &b.subspaces {
                println!("  subspace {name} of dim {}", s.dim());
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("{}: invalid: {e}", fx.name);
            Ok(ExitCode::from(1))
        }
    }
}

fn der(arg: &str, ideal: Option<&str>, graded: bool) -> Result<ExitCode, AlgError> {
    let (_, b) = load_built(arg)?;
    let d = match ideal {
        None => derivation::derivations(&b.algebra)?,
        Some(name) => {
            let sub = b.subspaces.get(name).ok_or_else(|| {
                AlgError::Parse(format!("fixture {} has no subspace {name:?}", b.name))
            })?;
            derivation::derivation_space(sub, &b.algebra)?
        }
    };
    println!("{}: derivation space of dim {}", b.name, d.dim());
    if ideal.is_none() {
        let inner = derivation::inner_span(&b.algebra)?;
        let kernel = derivation::ad_kernel(&b.algebra)?;
        println!("  inner span dim {}", inner.dim());
        println!(
            "  adjoint kernel dim {} ({} center)",
            kernel.dim(),
            if kernel == b.algebra.center() {
                "equals"
            } else {
                "differs from"
            }
        );
    }
    if graded {
        let g = b.grading.as_ref().ok_or_else(|| {
            AlgError::Parse(format!("fixture {} carries no grading", b.name))
        })?;
        let slices: Vec<(i64, Subspace)> = g
            .support()
            .into_iter()
            .map(|deg| (deg, g.component(deg)))
            .collect();
        let pieces = derivation::graded_pieces_over_slices(&d, &slices, &slices)?;
        let dims: Vec<String> = pieces
            .dims()
            .iter()
            .map(|(deg, dim)| format!("{deg}: {dim}"))
            .collect();
        println!("  graded pieces {{{}}}", dims.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn qm_cmd(arg: &str) -> Result<ExitCode, AlgError> {
    let (_, b) = load_built(arg)?;
    match qm::qm_compute(&b.algebra) {
        Ok(space) => {
            println!(
                "{}: maximal quotient space of dim {}",
                b.name,
                space.space.dim()
            );
            println!("  certificate: {}", space.certificate);
            Ok(ExitCode::SUCCESS)
        }
        Err(AlgError::Inconclusive(why)) => {
            println!("{}: inconclusive: {why}", b.name);
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => Err(e),
    }
}

fn suite(
    name: &str,
    seed: Option<u64>,
    fixtures: Option<PathBuf>,
    out: Option<PathBuf>,
    budget: Option<u64>,
) -> Result<ExitCode, AlgError> {
    let mut cfg = SuiteConfig::default();
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(dir) = fixtures {
        cfg.fixtures_dir = dir;
    }
    cfg.budget = budget.unwrap_or(nondegen::DEFAULT_SEARCH_BUDGET);
    let report = suites::run_suite(name, &cfg)?;
    print!("{}", report.render_text());
    if let Some(path) = out {
        std::fs::write(&path, report.to_json())
            .map_err(|e| AlgError::Parse(format!("{}: {e}", path.display())))?;
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}
