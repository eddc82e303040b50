//! Collapsing outcomes of G₁ can destroy its only equilibrium, and the
//! quotient map then fails to preserve equilibria.

use std::sync::Arc;

use gamecat::equilibria::{lemma_nash_check, nash_equilibria, preserves_ne};
use gamecat::fixtures::g1;
use gamecat::game::{identify_outcomes, partition_merging};
use gamecat::hom::enumerate_hom_fixed;
use gamecat::OutcomeClass;

fn main() -> gamecat::Result<()> {
    let g = Arc::new(g1());
    let merged = identify_outcomes(&g, &partition_merging(&g, &[OutcomeClass::labeled(&["TL", "DR"], "o")]))?;
    let names = |g: &gamecat::Game| -> Vec<String> { nash_equilibria(g).iter().map(|&o| g.outcomes()[o].clone()).collect() };
    println!("G₁ equilibria       {:?}", names(&g));
    println!("quotient outcomes   {:?}", merged.outcomes());
    println!("quotient equilibria {:?}", names(&merged));

    let merged = Arc::new(merged);
    for m in enumerate_hom_fixed(&g, &merged)?.iter().filter(|m| m.is_surjective_on_outcomes()) {
        let check = lemma_nash_check(m);
        println!(
            "{:?}: preserves equilibria {}, lemma applies {}",
            m.labeled_outcome_map(),
            preserves_ne(m)?,
            check.applies
        );
    }
    Ok(())
}
