//! Nash and weak Nash equilibria, solution subgames, and equilibrium
//! preservation by morphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::morphism::Morphism;

/// The restriction of `parent` to `selected` outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSubgame {
    pub parent: Arc<Game>,
    /// Sorted outcome indices of `parent`.
    pub selected: Vec<usize>,
    pub game: Game,
}

impl SolutionSubgame {
    pub fn selected_labels(&self) -> Vec<&str> {
        self.selected
            .iter()
            .map(|&o| self.parent.outcomes()[o].as_str())
            .collect()
    }
}

/// Restriction to the outcomes `selected` (labels, any order).
pub fn induced_subgame<S: AsRef<str>>(g: &Arc<Game>, selected: &[S]) -> Result<SolutionSubgame> {
    let mut idx = selected
        .iter()
        .map(|s| g.require_outcome(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    Ok(restrict(g, idx))
}

fn restrict(g: &Arc<Game>, selected: Vec<usize>) -> SolutionSubgame {
    let game = Game::assemble(
        g.players().to_vec(),
        selected.iter().map(|&o| g.outcomes()[o].clone()).collect(),
        (0..g.players().len()).map(|i| g.access(i).restrict(&selected)).collect(),
        (0..g.players().len()).map(|i| g.prefs(i).restrict(&selected)).collect(),
    )
    .expect("restriction keeps identifiers unique");
    SolutionSubgame {
        parent: g.clone(),
        selected,
        game,
    }
}

/// Every alternative a player can reach from `o` is weakly below `o` for
/// that player.
pub fn is_nash_at(g: &Game, o: usize) -> bool {
    (0..g.players().len()).all(|i| {
        let (r, q) = (g.access(i), g.prefs(i));
        (0..g.outcomes().len()).all(|p| !r.contains(o, p) || q.contains(p, o))
    })
}

/// No alternative a player can reach from `o` is strictly above `o` for
/// that player. Incomparable alternatives do not destabilize.
pub fn is_weak_nash_at(g: &Game, o: usize) -> bool {
    (0..g.players().len()).all(|i| {
        let (r, q) = (g.access(i), g.prefs(i));
        (0..g.outcomes().len()).all(|p| {
            let strictly_better = q.contains(o, p) && !q.contains(p, o);
            !r.contains(o, p) || q.contains(p, o) || !strictly_better
        })
    })
}

pub fn is_nash(g: &Game, o: &str) -> Result<bool> {
    Ok(is_nash_at(g, g.require_outcome(o)?))
}

pub fn is_weak_nash(g: &Game, o: &str) -> Result<bool> {
    Ok(is_weak_nash_at(g, g.require_outcome(o)?))
}

/// Sorted indices of the Nash equilibria.
pub fn nash_equilibria(g: &Game) -> Vec<usize> {
    (0..g.outcomes().len()).filter(|&o| is_nash_at(g, o)).collect()
}

/// Sorted indices of the weak Nash equilibria.
pub fn weak_nash_equilibria(g: &Game) -> Vec<usize> {
    (0..g.outcomes().len()).filter(|&o| is_weak_nash_at(g, o)).collect()
}

pub fn phi_ne(g: &Arc<Game>) -> SolutionSubgame {
    restrict(g, nash_equilibria(g))
}

pub fn phi_wne(g: &Arc<Game>) -> SolutionSubgame {
    restrict(g, weak_nash_equilibria(g))
}

/// Every outcome is a Nash equilibrium.
pub fn is_ne_object(g: &Game) -> bool {
    (0..g.outcomes().len()).all(|o| is_nash_at(g, o))
}

/// The image of every Nash equilibrium of the source is a Nash equilibrium
/// of the target.
pub fn preserves_ne(m: &Morphism) -> Result<bool> {
    if !m.is_valid() {
        return Err(Error::InvalidMorphism(m.violations()));
    }
    Ok(preserves_ne_unchecked(m))
}

pub(crate) fn preserves_ne_unchecked(m: &Morphism) -> bool {
    nash_equilibria(m.source())
        .into_iter()
        .all(|o| is_nash_at(m.target(), m.map_outcome(o)))
}

/// Hypotheses under which a morphism is known to preserve equilibria:
/// surjective on players and outcomes, and reflecting access.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct LemmaCheck {
    pub applies: bool,
    pub surjective_players: bool,
    pub surjective_outcomes: bool,
    pub reflects_access: bool,
}

/// Evaluates the hypotheses; `reflects_access` means `o R_i p` iff
/// `m(o) R′_{m(i)} m(p)` for every source player and outcome pair.
pub fn lemma_nash_check(m: &Morphism) -> LemmaCheck {
    let (s, t) = (m.source(), m.target());
    let reflects_access = (0..s.players().len()).all(|i| {
        let (r, r2) = (s.access(i), t.access(m.map_player(i)));
        (0..s.outcomes().len()).all(|o| {
            (0..s.outcomes().len())
                .all(|p| r.contains(o, p) == r2.contains(m.map_outcome(o), m.map_outcome(p)))
        })
    });
    let surjective_players = m.is_surjective_on_players();
    let surjective_outcomes = m.is_surjective_on_outcomes();
    LemmaCheck {
        applies: surjective_players && surjective_outcomes && reflects_access,
        surjective_players,
        surjective_outcomes,
        reflects_access,
    }
}
