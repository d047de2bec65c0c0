//! Regenerates `fixtures/` from the built-in fixture algebras in canonical form.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use tauslice::algebra::PresentedAlgebra;
use tauslice::fixtures as fx;
use tauslice::modrep::Representation;
use tauslice_cli::format::{print_algebra, print_modules, NamedModule};

type Summands = fn(&Arc<PresentedAlgebra>) -> Vec<Representation>;

/// Summands named `<file>_<i>`, annotated with their stacked names.
fn modules(name: &str, a: &Arc<PresentedAlgebra>, f: Summands, stacked: &[&str]) -> String {
    let named: Vec<NamedModule> = f(a)
        .into_iter()
        .zip(stacked)
        .enumerate()
        .map(|(i, (module, s))| NamedModule { name: format!("{name}_{}", i + 1), note: Some(s.to_string()), module })
        .collect();
    print_modules(&named)
}

fn main() -> anyhow::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    fs::create_dir_all(&dir)?;
    let algebras: [(&str, Arc<PresentedAlgebra>); 9] = [
        ("ex1", fx::ex1_algebra()),
        ("ex2", fx::ex2_algebra()),
        ("fig1", fx::fig1_algebra()),
        ("fig2", fx::fig2_algebra()),
        ("fig3", fx::fig3_algebra()),
        ("ex5_tilde", fx::ex5_tilde()),
        ("ex5_a", fx::ex5_a()),
        ("ex5_a_prime", fx::ex5_a_prime()),
        ("ex5_c", fx::ex5_c()),
    ];
    for (name, a) in &algebras {
        fs::write(dir.join(format!("{name}.alg")), print_algebra(a))?;
    }
    let reps: [(&str, usize, Summands, &[&str]); 9] = [
        ("ex1_m", 0, fx::ex1_m, &["1/2/3", "1/2", "1"]),
        ("ex2_m", 1, fx::ex2_m, &["4/2/1", "4/2", "43/2/1", "4"]),
        ("fig1_sigma", 2, fx::fig1_sigma, &["4/3/2", "4/3", "54/3", "4", "1/4"]),
        ("fig1_sigma_tilde", 2, fx::fig1_sigma_tilde, &["4/3/2", "4/3", "3", "5/3", "3/1"]),
        ("fig2_sigma", 3, fx::fig2_sigma, &["11/2", "1", "3/11"]),
        ("fig3_sigma", 4, fx::fig3_sigma, &["2/1", "23/1", "2", "5/42", "5/2"]),
        ("ex5_sigma", 5, fx::ex5_sigma, &["2/1", "2", "3/2", "4/2"]),
        ("ex5_sigma1", 7, fx::ex5_sigma1, &["2/1", "2", "3/2"]),
        ("ex5_sigma2", 7, fx::ex5_sigma2, &["1/3", "1", "2/1"]),
    ];
    for (name, ai, f, stacked) in reps {
        fs::write(dir.join(format!("{name}.rep")), modules(name, &algebras[ai].1, f, stacked))?;
    }
    Ok(())
}
