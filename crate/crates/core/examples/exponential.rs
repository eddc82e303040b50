//! The game of morphisms PD → G₁/~ over a fixed player set, with its
//! evaluation map and the currying bijection.

use std::sync::Arc;

use gamecat::constructions::{exponential_fixed, product_fixed, terminal_fixed};
use gamecat::fixtures::{g1_merged, prisoners_dilemma};
use gamecat::hom::enumerate_hom_fixed;

fn main() -> gamecat::Result<()> {
    let g = Arc::new(prisoners_dilemma());
    let h = Arc::new(g1_merged());
    let e = exponential_fixed(&g, &h)?;
    println!("{} morphisms PD → G₁/~, one outcome each:", e.game.outcomes().len());
    for o in e.game.outcomes() {
        println!("  {o}");
    }
    println!("eval is a morphism: {}", e.eval().is_valid());

    // points of the exponential correspond to morphisms 𝕋 × PD → G₁/~
    let t = Arc::new(terminal_fixed(g.players())?);
    let t_times_g = product_fixed(&[t.clone(), g.clone()])?;
    let uncurried = enumerate_hom_fixed(&t_times_g.game, &h)?;
    let points = enumerate_hom_fixed(&t, &e.game)?;
    println!("|Hom(𝕋 × PD, G₁/~)| = {}, |Hom(𝕋, exponential)| = {}", uncurried.len(), points.len());
    let round_trips = uncurried
        .iter()
        .all(|m| e.curry(m, &t_times_g).and_then(|u| e.uncurry(&u, &t_times_g)).is_ok_and(|back| back == *m));
    println!("uncurry ∘ curry = id: {round_trips}");
    Ok(())
}
