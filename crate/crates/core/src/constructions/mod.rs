//! Limits, colimits, exponentials and player functors, in both the category
//! of games over a fixed player list (`*_fixed`) and the category of games
//! with varying players.
//!
//! Every construction returns the new game together with its canonical
//! morphisms ("legs"), named per construction kind:
//!
//! | construction | legs |
//! |---|---|
//! | product | `proj0`, `proj1`, ... |
//! | coproduct, pushout | `inj0`, `inj1`, ... |
//! | equalizer | `equalize` |
//! | coequalizer | `quotient` |
//! | exponential | `eval` |
//!
//! Composite labels: product tuples `(a|b)`, coproduct tags `a@0`, merged
//! quotient classes `[least member]`, maps `a↦x;b↦y` (the empty map is `∅`).

mod coproduct;
mod equalizer;
mod exponential;
mod functor;
mod product;
mod pushout;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub use coproduct::{copair_mediate, coproduct, coproduct_fixed};
pub use equalizer::{coequalizer, coequalizer_mediate, equalizer, equalizer_mediate};
pub use exponential::{exponential, exponential_fixed, map_label, Exponential, Variant};
pub use functor::{pushforward_morphism, pushforward_players, pushforward_unit};
pub use product::{pair_mediate, product, product_fixed, product_map};
pub use pushout::{pushout_shared_players, shared_player_legs};

use crate::error::{Error, Result};
use crate::game::Game;
use crate::morphism::Morphism;
use crate::relation::Relation;

/// A constructed game with its canonical morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedGame {
    pub game: Arc<Game>,
    pub legs: BTreeMap<String, Morphism>,
}

impl ConstructedGame {
    pub fn leg(&self, name: &str) -> Result<&Morphism> {
        self.legs
            .get(name)
            .ok_or_else(|| Error::Unsupported(format!("construction has no leg `{name}`")))
    }

    /// Legs named `prefix0`, `prefix1`, ... in index order.
    pub fn indexed_legs(&self, prefix: &str) -> Vec<&Morphism> {
        (0..)
            .map_while(|k| self.legs.get(&format!("{prefix}{k}")))
            .collect()
    }
}

fn tuple_label(parts: &[&str]) -> String {
    format!("({})", parts.join("|"))
}

fn tag_label(id: &str, s: usize) -> String {
    format!("{id}@{s}")
}

/// All index tuples over `sizes`, lexicographically.
fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Position of each label of `labels` in the sorted carrier of `g`.
fn positions(labels: &[String], carrier: &[String]) -> Vec<usize> {
    let index: HashMap<&str, usize> = carrier
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_str(), k))
        .collect();
    labels.iter().map(|l| index[l.as_str()]).collect()
}

/// `G` and `G′` must be the same source and the same target.
fn require_parallel(f: &Morphism, g: &Morphism) -> Result<()> {
    if f.source() == g.source() && f.target() == g.target() {
        Ok(())
    } else {
        Err(Error::NotParallel)
    }
}

/// The terminal game: one player `*`, one outcome `*`.
pub fn terminal() -> Game {
    Game::assemble(
        vec!["*".into()],
        vec!["*".into()],
        vec![Relation::identity(1)],
        vec![Relation::identity(1)],
    )
    .expect("static carriers")
}

/// The empty game.
pub fn initial() -> Game {
    Game::assemble(vec![], vec![], vec![], vec![]).expect("static carriers")
}

/// Terminal game over a fixed player list: one outcome `*`.
pub fn terminal_fixed<S: AsRef<str>>(players: &[S]) -> Result<Game> {
    let ps: Vec<String> = players.iter().map(|s| s.as_ref().to_string()).collect();
    let k = ps.len();
    Game::assemble(
        ps,
        vec!["*".into()],
        vec![Relation::identity(1); k],
        vec![Relation::identity(1); k],
    )
}

/// Initial game over a fixed player list: no outcomes.
pub fn initial_fixed<S: AsRef<str>>(players: &[S]) -> Result<Game> {
    crate::game::player_game(players)
}

/// The unique morphism `g → 𝕋`.
pub fn to_terminal(g: Arc<Game>) -> Morphism {
    let p = vec![0; g.players().len()];
    let o = vec![0; g.outcomes().len()];
    Morphism::from_indices_unchecked(g, Arc::new(terminal()), p, o)
}

/// The unique morphism `𝟘 → g`.
pub fn from_initial(g: Arc<Game>) -> Morphism {
    Morphism::from_indices_unchecked(Arc::new(initial()), g, vec![], vec![])
}

/// The unique outcome map from `g` to the terminal game over its players.
pub fn to_terminal_fixed(g: Arc<Game>) -> Morphism {
    let t = terminal_fixed(g.players()).expect("players are unique");
    let p = (0..g.players().len()).collect();
    let o = vec![0; g.outcomes().len()];
    Morphism::from_indices_unchecked(g, Arc::new(t), p, o)
}

/// The empty outcome map from the initial game over `g`'s players.
pub fn from_initial_fixed(g: Arc<Game>) -> Morphism {
    let z = initial_fixed(g.players()).expect("players are unique");
    let p = (0..g.players().len()).collect();
    Morphism::from_indices_unchecked(Arc::new(z), g, p, vec![])
}

/// Finds the unique `u: x → target` with `leg_k(u(e)) = legs[k](e)` for all
/// `k`, where `leg_k` are `cone`'s maps out of `target`. Fails if some tuple
/// of images has no preimage.
fn factor_through_cone(x: &Arc<Game>, target: &Arc<Game>, cone: &[&Morphism], legs: &[Morphism]) -> Result<Morphism> {
    let players: HashMap<Vec<usize>, usize> = (0..target.players().len())
        .map(|j| (cone.iter().map(|c| c.map_player(j)).collect(), j))
        .collect();
    let outcomes: HashMap<Vec<usize>, usize> = (0..target.outcomes().len())
        .map(|o| (cone.iter().map(|c| c.map_outcome(o)).collect(), o))
        .collect();
    let mut pm = Vec::with_capacity(x.players().len());
    for i in 0..x.players().len() {
        let t: Vec<usize> = legs.iter().map(|l| l.map_player(i)).collect();
        pm.push(*players.get(&t).ok_or_else(|| {
            Error::MalformedMorphism(format!("no player of the limit over {t:?}"))
        })?);
    }
    let mut om = Vec::with_capacity(x.outcomes().len());
    for o in 0..x.outcomes().len() {
        let t: Vec<usize> = legs.iter().map(|l| l.map_outcome(o)).collect();
        om.push(*outcomes.get(&t).ok_or_else(|| {
            Error::MalformedMorphism(format!("no outcome of the limit over {t:?}"))
        })?);
    }
    Ok(Morphism::from_indices_unchecked(x.clone(), target.clone(), pm, om))
}
