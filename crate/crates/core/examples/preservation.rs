//! A morphism need not send equilibria to equilibria; surjective morphisms
//! that reflect access always do.

use gamecat::equilibria::{lemma_nash_check, nash_equilibria, preserves_ne};
use gamecat::fixtures::{counterexample_morphism, pd_to_g1_merged};
use gamecat::Morphism;

fn report(name: &str, m: &Morphism) -> gamecat::Result<()> {
    let ne = |g: &gamecat::Game| -> Vec<String> { nash_equilibria(g).iter().map(|&o| g.outcomes()[o].clone()).collect() };
    println!("{name}");
    println!("  source equilibria {:?}", ne(m.source()));
    println!("  target equilibria {:?}", ne(m.target()));
    println!("  outcome map       {:?}", m.labeled_outcome_map());
    println!("  preserves         {}", preserves_ne(m)?);
    println!("  hypotheses        {:?}", lemma_nash_check(m));
    Ok(())
}

fn main() -> gamecat::Result<()> {
    report("counterexample", &counterexample_morphism())?;
    report("PD → G₁/~", &pd_to_g1_merged())
}
