//! Reindexing games along a map of players.
//!
//! `F_f` sends a game over `I` to a game over `J` with the same outcomes:
//! player `j` accesses along any of its preimages. The union of preimage
//! relations is repaired into a valid game by closure, so a `j` outside the
//! image of `f` gets the identity and unions of preorders become preorders.
//! The fixed-player inclusion `F_I` needs no code here: a morphism with an
//! identity player map already is its own image.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::morphism::Morphism;
use crate::relation::Relation;

fn resolve(g: &Game, targets: &[String], f: &BTreeMap<String, String>) -> Result<(Vec<String>, Vec<usize>)> {
    let mut js = targets.to_vec();
    js.sort();
    js.dedup();
    if js.len() != targets.len() {
        return Err(Error::DuplicateIdentifier {
            kind: "player",
            id: "in the target player list".into(),
        });
    }
    let map = g
        .players()
        .iter()
        .map(|i| {
            let j = f
                .get(i)
                .ok_or_else(|| Error::MalformedMorphism(format!("player map is undefined on `{i}`")))?;
            js.binary_search(j).map_err(|_| Error::UnknownIdentifier {
                kind: "player",
                id: j.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((js, map))
}

/// `F_f(g)` over the players `targets`.
pub fn pushforward_players(g: &Game, targets: &[String], f: &BTreeMap<String, String>) -> Result<Game> {
    let (js, map) = resolve(g, targets, f)?;
    let n = g.outcomes().len();
    let mut access = vec![Relation::empty(n); js.len()];
    let mut prefs = vec![Relation::empty(n); js.len()];
    for (i, &j) in map.iter().enumerate() {
        access[j].union_with(g.access(i));
        prefs[j].union_with(g.prefs(i));
    }
    Game::assemble(
        js,
        g.outcomes().to_vec(),
        access.iter().map(Relation::reflexive_symmetric_closure).collect(),
        prefs.iter().map(Relation::reflexive_transitive_closure).collect(),
    )
}

/// `(f, 1_O): g → F_f(g)`.
pub fn pushforward_unit(g: &Arc<Game>, targets: &[String], f: &BTreeMap<String, String>) -> Result<Morphism> {
    let (_, map) = resolve(g, targets, f)?;
    let pushed = Arc::new(pushforward_players(g, targets, f)?);
    let ids = (0..g.outcomes().len()).collect();
    Ok(Morphism::from_indices_unchecked(g.clone(), pushed, map, ids))
}

/// `F_f(m)` for a fixed-player morphism `m`: the same outcome map between
/// the reindexed games.
pub fn pushforward_morphism(m: &Morphism, targets: &[String], f: &BTreeMap<String, String>) -> Result<Morphism> {
    if !m.is_fixed_players() {
        return Err(Error::Unsupported("reindexing needs an identity player map".into()));
    }
    let s = Arc::new(pushforward_players(m.source(), targets, f)?);
    let t = Arc::new(pushforward_players(m.target(), targets, f)?);
    let ids = (0..s.players().len()).collect();
    Ok(Morphism::from_indices_unchecked(s, t, ids, m.outcome_map().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn strings(ids: &[&str]) -> Vec<String> {
        ids.iter().map(|s| s.to_string()).collect()
    }

    fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn identity_reindexing_changes_nothing() {
        let pd = fixtures::prisoners_dilemma();
        let same = pushforward_players(&pd, &strings(&["1", "2"]), &map(&[("1", "1"), ("2", "2")])).unwrap();
        assert_eq!(same, pd);
    }

    #[test]
    fn collapsing_pd_players() {
        let pd = Arc::new(fixtures::prisoners_dilemma());
        let f = map(&[("1", "m"), ("2", "m")]);
        let g = pushforward_players(&pd, &strings(&["m"]), &f).unwrap();
        assert_eq!(g.access(0).len(), 12);
        assert!(pd.access(0).is_subset(g.access(0)) && pd.access(1).is_subset(g.access(0)));
        assert!(g.prefers_weakly("m", "CC", "DD") && g.prefers_weakly("m", "DD", "CC"));
        assert_eq!(g.prefs(0).len(), 16);
        let unit = pushforward_unit(&pd, &strings(&["m"]), &f).unwrap();
        assert!(unit.is_valid());
    }

    #[test]
    fn players_outside_the_image_get_the_identity() {
        let pd = fixtures::prisoners_dilemma();
        let g = pushforward_players(&pd, &strings(&["1", "2", "z"]), &map(&[("1", "1"), ("2", "2")])).unwrap();
        let z = g.require_player("z").unwrap();
        assert_eq!(*g.access(z), Relation::identity(4));
        assert_eq!(*g.prefs(z), Relation::identity(4));
        assert!(g.is_valid());
    }

    #[test]
    fn reindexed_morphism_stays_valid() {
        let m = fixtures::pd_to_g1_merged();
        let f = map(&[("1", "m"), ("2", "m")]);
        let pushed = pushforward_morphism(&m, &strings(&["m"]), &f).unwrap();
        assert!(pushed.is_valid());
    }
}
