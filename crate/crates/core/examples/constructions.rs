//! Products, coproducts and the pushout along shared players, with the
//! equilibria each one has.

use std::sync::Arc;

use gamecat::constructions::{coproduct, product, product_fixed, pushout_shared_players};
use gamecat::equilibria::nash_equilibria;
use gamecat::fixtures::{bos, bos_shifted, prisoners_dilemma};
use gamecat::Game;

fn summary(name: &str, g: &Game) {
    let ne: Vec<&str> = nash_equilibria(g).iter().map(|&o| g.outcomes()[o].as_str()).collect();
    println!(
        "{name:<20} {} players, {:>2} outcomes, equilibria {ne:?}",
        g.players().len(),
        g.outcomes().len()
    );
}

fn main() -> gamecat::Result<()> {
    let pd = Arc::new(prisoners_dilemma());
    let bos = Arc::new(bos());
    summary("PD × BoS, shared", &product_fixed(&[pd.clone(), bos.clone()])?.game);
    summary("PD × BoS", &product(&[pd.clone(), bos.clone()])?.game);
    summary("PD + BoS", &coproduct(&[pd.clone(), bos.clone()])?.game);

    // BoS played by players 2 and 3 shares player 2 with PD
    let p = pushout_shared_players(&pd, &Arc::new(bos_shifted()))?;
    summary("PD ⊔ BoS over {2}", &p.game);
    println!("pushout players {:?}", p.game.players());
    for (name, leg) in &p.legs {
        println!("  leg {name}: players {:?}", leg.labeled_player_map());
    }
    Ok(())
}
