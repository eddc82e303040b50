use std::collections::BTreeMap;
use std::sync::Arc;

use super::{initial, positions, tag_label, ConstructedGame};
use crate::error::{Error, Result};
use crate::game::{Game, RelationKind};
use crate::morphism::{GamI, Morphism};
use crate::relation::Relation;

/// Tagged outcomes `(s, o)` in summand order, with their labels.
fn tagged_outcomes(gs: &[Arc<Game>]) -> (Vec<(usize, usize)>, Vec<String>) {
    let tags: Vec<(usize, usize)> = gs
        .iter()
        .enumerate()
        .flat_map(|(s, g)| (0..g.outcomes().len()).map(move |o| (s, o)))
        .collect();
    let labels = tags
        .iter()
        .map(|&(s, o)| tag_label(&gs[s].outcomes()[o], s))
        .collect();
    (tags, labels)
}

/// Relation over tagged outcomes: `rel(s)` inside summand `s`, and `Id`
/// on every summand for which `rel` returns `None`.
fn block_relation(gs: &[Arc<Game>], tags: &[(usize, usize)], rel: impl Fn(usize) -> Option<Relation>) -> Relation {
    let n = tags.len();
    let mut r = Relation::identity(n);
    let mut offset = 0;
    for (s, g) in gs.iter().enumerate() {
        if let Some(block) = rel(s) {
            for (a, b) in block.pairs() {
                r.insert(offset + a, offset + b);
            }
        }
        offset += g.outcomes().len();
    }
    r
}

fn injections(
    game: &Arc<Game>,
    gs: &[Arc<Game>],
    player_pos: impl Fn(usize, usize) -> usize,
    outcome_pos: &[usize],
) -> BTreeMap<String, Morphism> {
    let mut legs = BTreeMap::new();
    let mut offset = 0;
    for (s, g) in gs.iter().enumerate() {
        let pm = (0..g.players().len()).map(|i| player_pos(s, i)).collect();
        let om = (0..g.outcomes().len()).map(|o| outcome_pos[offset + o]).collect();
        offset += g.outcomes().len();
        legs.insert(
            format!("inj{s}"),
            Morphism::from_indices_unchecked(g.clone(), game.clone(), pm, om),
        );
    }
    legs
}

/// Coproduct over a shared player list: tagged disjoint union of outcomes
/// with relations that never cross summands.
pub fn coproduct_fixed(gs: &[Arc<Game>]) -> Result<ConstructedGame> {
    let refs: Vec<&Game> = gs.iter().map(|g| &**g).collect();
    let cat = GamI::common(&refs)?;
    let (tags, labels) = tagged_outcomes(gs);
    let k = cat.players().len();
    let mut access = Vec::with_capacity(k);
    let mut prefs = Vec::with_capacity(k);
    for i in 0..k {
        access.push(block_relation(gs, &tags, |s| Some(gs[s].access(i).clone())));
        prefs.push(block_relation(gs, &tags, |s| Some(gs[s].prefs(i).clone())));
    }
    let game = Arc::new(Game::assemble(cat.players().to_vec(), labels.clone(), access, prefs)?);
    let pos = positions(&labels, game.outcomes());
    let legs = injections(&game, gs, |_, i| i, &pos);
    Ok(ConstructedGame { game, legs })
}

/// Coproduct with varying players: players and outcomes are tagged disjoint
/// unions. Player `i@s` keeps its own relations on summand `s` and is
/// indifferent (identity only) on every other summand.
pub fn coproduct(gs: &[Arc<Game>]) -> Result<ConstructedGame> {
    if gs.is_empty() {
        return Ok(ConstructedGame {
            game: Arc::new(initial()),
            legs: BTreeMap::new(),
        });
    }
    let (tags, labels) = tagged_outcomes(gs);
    let ptags: Vec<(usize, usize)> = gs
        .iter()
        .enumerate()
        .flat_map(|(s, g)| (0..g.players().len()).map(move |i| (s, i)))
        .collect();
    let plabels: Vec<String> = ptags
        .iter()
        .map(|&(s, i)| tag_label(&gs[s].players()[i], s))
        .collect();
    let rel = |kind: RelationKind| -> Vec<Relation> {
        ptags
            .iter()
            .map(|&(s0, i)| {
                block_relation(gs, &tags, |s| (s == s0).then(|| gs[s].relation(i, kind).clone()))
            })
            .collect()
    };
    let game = Arc::new(Game::assemble(
        plabels.clone(),
        labels.clone(),
        rel(RelationKind::Access),
        rel(RelationKind::Prefs),
    )?);
    let ppos = positions(&plabels, game.players());
    let offsets: Vec<usize> = gs
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.players().len();
            Some(o)
        })
        .collect();
    let pos = positions(&labels, game.outcomes());
    let legs = injections(&game, gs, |s, i| ppos[offsets[s] + i], &pos);
    Ok(ConstructedGame { game, legs })
}

/// The unique `u: ∐ g_s → y` with `u ∘ inj_s = legs[s]`.
pub fn copair_mediate(y: &Arc<Game>, legs: &[Morphism], coprod: &ConstructedGame) -> Result<Morphism> {
    let injs = coprod.indexed_legs("inj");
    if injs.len() != legs.len() {
        return Err(Error::MalformedMorphism(format!(
            "{} legs for a coproduct of {} summands",
            legs.len(),
            injs.len()
        )));
    }
    for (s, (l, inj)) in legs.iter().zip(&injs).enumerate() {
        if l.target() != y || l.source() != inj.source() {
            return Err(Error::MalformedMorphism(format!(
                "leg {s} does not run from summand {s} to the apex"
            )));
        }
    }
    let g = &coprod.game;
    let mut pm: Vec<Option<usize>> = vec![None; g.players().len()];
    let mut om: Vec<Option<usize>> = vec![None; g.outcomes().len()];
    for (l, inj) in legs.iter().zip(&injs) {
        for (i, &j) in inj.player_map().iter().enumerate() {
            let v = l.map_player(i);
            if pm[j].replace(v).is_some_and(|w| w != v) {
                return Err(Error::MalformedMorphism(
                    "legs disagree on a shared player".into(),
                ));
            }
        }
        for (o, &p) in inj.outcome_map().iter().enumerate() {
            om[p] = Some(l.map_outcome(o));
        }
    }
    let pm = pm
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::MalformedMorphism("player outside every summand".into())))
        .collect::<Result<Vec<_>>>()?;
    let om = om
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::MalformedMorphism("outcome outside every summand".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::from_indices_unchecked(g.clone(), y.clone(), pm, om))
}
