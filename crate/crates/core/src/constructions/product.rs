use std::collections::BTreeMap;
use std::sync::Arc;

use super::{factor_through_cone, positions, terminal, tuple_label, tuples, ConstructedGame};
use crate::error::{Error, Result};
use crate::game::{Game, RelationKind};
use crate::morphism::{compose, GamI, Morphism};
use crate::relation::Relation;

/// Tuple outcomes of `gs`, their labels, and for each result player (given
/// as one player index per factor) the conjunctive access and preference
/// relations over tuple indices.
fn tuple_relations(gs: &[Arc<Game>], player_tuples: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<String>, Vec<Relation>, Vec<Relation>) {
    let sizes: Vec<usize> = gs.iter().map(|g| g.outcomes().len()).collect();
    let outs = tuples(&sizes);
    let labels = outs
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(gs)
                .map(|(&o, g)| g.outcomes()[o].as_str())
                .collect();
            tuple_label(&parts)
        })
        .collect();
    let n = outs.len();
    let conj = |alpha: &[usize], kind: RelationKind| {
        let mut r = Relation::empty(n);
        for (a, ta) in outs.iter().enumerate() {
            for (b, tb) in outs.iter().enumerate() {
                let all = (0..gs.len()).all(|s| gs[s].relation(alpha[s], kind).contains(ta[s], tb[s]));
                if all {
                    r.insert(a, b);
                }
            }
        }
        r
    };
    let access = player_tuples.iter().map(|a| conj(a, RelationKind::Access)).collect();
    let prefs = player_tuples.iter().map(|a| conj(a, RelationKind::Prefs)).collect();
    (outs, labels, access, prefs)
}

/// Projection legs: `proj_s` sends result player `k` to `player_tuple(k)[s]`
/// and result outcome `k` to `outcome_tuple(k)[s]`.
fn projections(
    game: &Arc<Game>,
    gs: &[Arc<Game>],
    player_of: &[Vec<usize>],
    outcome_of: &[Vec<usize>],
) -> BTreeMap<String, Morphism> {
    (0..gs.len())
        .map(|s| {
            let pm = player_of.iter().map(|t| t[s]).collect();
            let om = outcome_of.iter().map(|t| t[s]).collect();
            (
                format!("proj{s}"),
                Morphism::from_indices_unchecked(game.clone(), gs[s].clone(), pm, om),
            )
        })
        .collect()
}

/// Reorders per-tuple data into the sorted carrier order of the result.
fn by_position(items: &[Vec<usize>], pos: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); items.len()];
    for (t, &k) in pos.iter().enumerate() {
        out[k] = items[t].clone();
    }
    out
}

/// Product over a shared player list: outcomes are tuples and every
/// relation holds componentwise.
pub fn product_fixed(gs: &[Arc<Game>]) -> Result<ConstructedGame> {
    let refs: Vec<&Game> = gs.iter().map(|g| &**g).collect();
    let cat = GamI::common(&refs)?;
    let k = cat.players().len();
    let diag: Vec<Vec<usize>> = (0..k).map(|i| vec![i; gs.len()]).collect();
    let (outs, labels, access, prefs) = tuple_relations(gs, &diag);
    let game = Arc::new(Game::assemble(cat.players().to_vec(), labels.clone(), access, prefs)?);
    let outcome_of = by_position(&outs, &positions(&labels, game.outcomes()));
    let legs = projections(&game, gs, &diag, &outcome_of);
    Ok(ConstructedGame { game, legs })
}

/// Product with varying players: players and outcomes are tuples, and
/// player `(i|j)` relates two tuples iff each factor's player relates the
/// corresponding components. The empty product is the terminal game.
pub fn product(gs: &[Arc<Game>]) -> Result<ConstructedGame> {
    if gs.is_empty() {
        return Ok(ConstructedGame {
            game: Arc::new(terminal()),
            legs: BTreeMap::new(),
        });
    }
    let psizes: Vec<usize> = gs.iter().map(|g| g.players().len()).collect();
    let ptuples = tuples(&psizes);
    let plabels: Vec<String> = ptuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t
                .iter()
                .zip(gs)
                .map(|(&i, g)| g.players()[i].as_str())
                .collect();
            tuple_label(&parts)
        })
        .collect();
    let (outs, labels, access, prefs) = tuple_relations(gs, &ptuples);
    let game = Arc::new(Game::assemble(plabels.clone(), labels.clone(), access, prefs)?);
    let player_of = by_position(&ptuples, &positions(&plabels, game.players()));
    let outcome_of = by_position(&outs, &positions(&labels, game.outcomes()));
    let legs = projections(&game, gs, &player_of, &outcome_of);
    Ok(ConstructedGame { game, legs })
}

/// The unique `u: x → ∏ g_s` with `proj_s ∘ u = legs[s]`.
pub fn pair_mediate(x: &Arc<Game>, legs: &[Morphism], prod: &ConstructedGame) -> Result<Morphism> {
    let projs = prod.indexed_legs("proj");
    if projs.len() != legs.len() {
        return Err(Error::MalformedMorphism(format!(
            "{} legs for a product of {} factors",
            legs.len(),
            projs.len()
        )));
    }
    for (s, (l, p)) in legs.iter().zip(&projs).enumerate() {
        if l.source() != x || l.target() != p.target() {
            return Err(Error::MalformedMorphism(format!(
                "leg {s} does not run from the apex to factor {s}"
            )));
        }
    }
    factor_through_cone(x, &prod.game, &projs, legs)
}

/// `∏ f_s : ∏ a_s → ∏ b_s` between two products built by this module.
pub fn product_map(fs: &[Morphism], src: &ConstructedGame, dst: &ConstructedGame) -> Result<Morphism> {
    let projs = src.indexed_legs("proj");
    if projs.len() != fs.len() {
        return Err(Error::MalformedMorphism("factor count mismatch".into()));
    }
    let legs = projs
        .iter()
        .zip(fs)
        .map(|(p, f)| compose(p, f))
        .collect::<Result<Vec<_>>>()?;
    pair_mediate(&src.game, &legs, dst)
}
