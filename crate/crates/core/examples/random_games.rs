//! Seeded random games: the same seed always yields the same game.

use gamecat::io::game_to_json;
use gamecat::verify::{draw_game, GenParams, Shape, SplitMix64};

fn main() {
    let params = GenParams {
        max_players: 2,
        max_outcomes: 3,
        seed: 42,
        ..GenParams::default()
    };
    let mut rng = SplitMix64::new(params.seed);
    for _ in 0..3 {
        let g = draw_game(&mut rng, &params, Shape { min_players: 1, min_outcomes: 2, players: None });
        print!("{}", game_to_json(&g));
    }
}
