//! Enumerating morphisms, with and without a fixed player map, and
//! classifying endomorphisms.

use std::sync::Arc;

use gamecat::fixtures::prisoners_dilemma;
use gamecat::hom::{candidate_count, enumerate_hom, enumerate_hom_fixed};
use gamecat::morphism::classify_morphism;

fn main() -> gamecat::Result<()> {
    let pd = Arc::new(prisoners_dilemma());
    println!("candidate map pairs PD → PD: {}", candidate_count(&pd, &pd));
    println!("morphisms PD → PD:           {}", enumerate_hom(&pd, &pd)?.len());
    let fixed = enumerate_hom_fixed(&pd, &pd)?;
    println!("with identity player map:    {}", fixed.len());
    for m in &fixed {
        let c = classify_morphism(m)?;
        println!(
            "  {:?}  monic {} epic {} iso {}",
            m.labeled_outcome_map().values().collect::<Vec<_>>(),
            c.monic,
            c.epic,
            c.iso
        );
    }
    Ok(())
}
