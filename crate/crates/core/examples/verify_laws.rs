//! Runs every law of the catalog on seeded random games and prints one
//! summary line per law.
//!
//! `cargo run --release --example verify_laws -- [TRIALS] [SEED]`

use gamecat::verify::{check_law, GenParams, CATALOG};

fn main() -> gamecat::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let params = GenParams {
        seed,
        ..GenParams::default()
    };
    for law in CATALOG {
        let start = std::time::Instant::now();
        let r = check_law(law.name, &params, trials)?;
        println!(
            "{:<34} {:<13} passed {:>4}  failed {:>4}  skipped {:>3}  {:>6.2}s",
            law.name,
            law.module,
            r.passed,
            r.failures.len(),
            r.skipped,
            start.elapsed().as_secs_f64()
        );
        if let Some(f) = r.failures.first() {
            println!("    first failure, trial {}: {}", f.trial, f.observed);
        }
    }
    Ok(())
}
