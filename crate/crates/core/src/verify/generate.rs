//! Seeded random games.
//!
//! A draw consumes the generator in a fixed order, so a trial is replayable
//! from its seed alone:
//!
//! 1. the player count, `min + below(max - min + 1)`, unless fixed;
//! 2. the outcome count, likewise;
//! 3. for each player in creation order, for each unordered outcome pair
//!    `a < b`, one `chance(access_density)`;
//! 4. for each player, for each ordered pair `a ≠ b`, one
//!    `chance(pref_density)`.
//!
//! Players are `1, 2, ...` and outcomes `a, b, ...` (`o26`, `o27`, ... past
//! `z`). Drawn pairs are closed into a valid game.

use serde::Serialize;

use super::rng::SplitMix64;
use crate::game::Game;
use crate::relation::Relation;
use crate::strategic::StrategicGame;
use num_rational::Rational64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenParams {
    pub max_players: usize,
    pub max_outcomes: usize,
    pub access_density: f64,
    pub pref_density: f64,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_players: 2,
            max_outcomes: 3,
            access_density: 0.5,
            pref_density: 0.5,
            seed: 0,
        }
    }
}

/// Size constraints a law places on its random inputs.
#[derive(Clone, Copy, Debug, Default)]
pub struct Shape {
    pub min_players: usize,
    pub min_outcomes: usize,
    /// Exact player count, overriding the range.
    pub players: Option<usize>,
}

impl Shape {
    pub const ANY: Shape = Shape {
        min_players: 0,
        min_outcomes: 0,
        players: None,
    };

    pub fn with_players(n: usize) -> Shape {
        Shape {
            players: Some(n),
            ..Shape::ANY
        }
    }
}

pub fn player_label(k: usize) -> String {
    (k + 1).to_string()
}

pub fn outcome_label(k: usize) -> String {
    if k < 26 {
        char::from(b'a' + k as u8).to_string()
    } else {
        format!("o{k}")
    }
}

/// `min + below(max - min + 1)`; a `max` below `min` is raised to it.
pub(crate) fn size(rng: &mut SplitMix64, min: usize, max: usize) -> usize {
    let max = max.max(min);
    min + rng.below(max - min + 1)
}

/// The first draw of a trial seeded with `params.seed`.
pub fn random_game(params: &GenParams) -> Game {
    draw_game(&mut SplitMix64::new(params.seed), params, Shape::ANY)
}

pub fn draw_game(rng: &mut SplitMix64, params: &GenParams, shape: Shape) -> Game {
    let np = match shape.players {
        Some(n) => n,
        None => size(rng, shape.min_players, params.max_players),
    };
    let no = size(rng, shape.min_outcomes, params.max_outcomes);
    let mut access = Vec::with_capacity(np);
    for _ in 0..np {
        let mut r = Relation::empty(no);
        for a in 0..no {
            for b in a + 1..no {
                if rng.chance(params.access_density) {
                    r.insert(a, b);
                }
            }
        }
        access.push(r.reflexive_symmetric_closure());
    }
    let mut prefs = Vec::with_capacity(np);
    for _ in 0..np {
        let mut r = Relation::empty(no);
        for a in 0..no {
            for b in 0..no {
                if a != b && rng.chance(params.pref_density) {
                    r.insert(a, b);
                }
            }
        }
        prefs.push(r.reflexive_transitive_closure());
    }
    Game::assemble(
        (0..np).map(player_label).collect(),
        (0..no).map(outcome_label).collect(),
        access,
        prefs,
    )
    .expect("generated labels are distinct")
}

/// A strategic game with up to `max_players` players, one to
/// `max(1, max_outcomes)` single-letter actions each, and integer payoffs in
/// `-2..=2`, drawn profile by profile with the first player slowest.
pub fn draw_strategic(rng: &mut SplitMix64, params: &GenParams) -> StrategicGame {
    let np = size(rng, 0, params.max_players);
    let players: Vec<String> = (0..np).map(player_label).collect();
    let actions = players
        .iter()
        .map(|p| {
            let n = size(rng, 1, params.max_outcomes.max(1));
            (p.clone(), (0..n).map(outcome_label).collect::<Vec<_>>())
        })
        .collect();
    let mut sg = StrategicGame {
        players,
        actions,
        payoffs: Default::default(),
        separator: ",".into(),
    };
    for profile in sg.profiles().expect("actions are listed for every player") {
        let values = (0..np)
            .map(|_| Rational64::from_integer(rng.below(5) as i64 - 2))
            .collect();
        sg.payoffs.insert(profile, values);
    }
    sg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_valid_and_reproducible() {
        for seed in 0..200 {
            let p = GenParams {
                seed,
                ..GenParams::default()
            };
            let g = random_game(&p);
            assert!(g.is_valid());
            assert!(g.players().len() <= 2 && g.outcomes().len() <= 3);
            assert_eq!(g, random_game(&p));
        }
    }

    #[test]
    fn densities_at_the_extremes() {
        let full = GenParams {
            max_players: 1,
            max_outcomes: 3,
            access_density: 1.0,
            pref_density: 1.0,
            seed: 5,
        };
        let mut rng = SplitMix64::new(5);
        let g = draw_game(&mut rng, &full, Shape { min_players: 1, min_outcomes: 3, players: None });
        assert_eq!(*g.access(0), Relation::full(3));
        assert_eq!(*g.prefs(0), Relation::full(3));
        let empty = GenParams {
            access_density: 0.0,
            pref_density: 0.0,
            ..full
        };
        let g = draw_game(&mut rng, &empty, Shape { min_players: 1, min_outcomes: 3, players: None });
        assert_eq!(*g.access(0), Relation::identity(3));
    }

    #[test]
    fn shapes_are_honoured() {
        let p = GenParams::default();
        let mut rng = SplitMix64::new(9);
        for _ in 0..50 {
            let g = draw_game(&mut rng, &p, Shape { min_players: 1, min_outcomes: 1, players: None });
            assert!(!g.players().is_empty() && !g.outcomes().is_empty());
            assert_eq!(draw_game(&mut rng, &p, Shape::with_players(2)).players().len(), 2);
        }
    }

    #[test]
    fn strategic_draws_validate() {
        let p = GenParams::default();
        let mut rng = SplitMix64::new(3);
        for _ in 0..50 {
            draw_strategic(&mut rng, &p).validate().unwrap();
        }
    }
}
