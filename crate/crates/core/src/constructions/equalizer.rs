use std::collections::BTreeMap;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use super::{require_parallel, ConstructedGame};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::morphism::Morphism;
use crate::relation::Relation;

/// Subgame of the common source on which `f` and `g` agree, on players and
/// on outcomes, with restricted relations. The leg `equalize` is the
/// inclusion. With identity player maps this is the fixed-player equalizer.
pub fn equalizer(f: &Morphism, g: &Morphism) -> Result<ConstructedGame> {
    require_parallel(f, g)?;
    let src = f.source();
    let players: Vec<usize> = (0..src.players().len())
        .filter(|&i| f.map_player(i) == g.map_player(i))
        .collect();
    let outcomes: Vec<usize> = (0..src.outcomes().len())
        .filter(|&o| f.map_outcome(o) == g.map_outcome(o))
        .collect();
    let game = Arc::new(Game::assemble(
        players.iter().map(|&i| src.players()[i].clone()).collect(),
        outcomes.iter().map(|&o| src.outcomes()[o].clone()).collect(),
        players.iter().map(|&i| src.access(i).restrict(&outcomes)).collect(),
        players.iter().map(|&i| src.prefs(i).restrict(&outcomes)).collect(),
    )?);
    let e = Morphism::from_indices_unchecked(game.clone(), src.clone(), players, outcomes);
    Ok(ConstructedGame {
        game,
        legs: BTreeMap::from([("equalize".to_string(), e)]),
    })
}

/// The unique `u: x → E` with `equalize ∘ u = k`, for `k` landing in the
/// agreement sets.
pub fn equalizer_mediate(k: &Morphism, eq: &ConstructedGame) -> Result<Morphism> {
    let e = eq.leg("equalize")?;
    if k.target() != e.target() {
        return Err(Error::MalformedMorphism("morphism does not end at the equalized game".into()));
    }
    let invert = |image: &[usize], n: usize| {
        let mut back = vec![None; n];
        for (x, &y) in image.iter().enumerate() {
            back[y] = Some(x);
        }
        back
    };
    let pback = invert(e.player_map(), e.target().players().len());
    let oback = invert(e.outcome_map(), e.target().outcomes().len());
    let pm = k
        .player_map()
        .iter()
        .map(|&j| pback[j].ok_or_else(|| Error::MalformedMorphism("player outside the equalizer".into())))
        .collect::<Result<Vec<_>>>()?;
    let om = k
        .outcome_map()
        .iter()
        .map(|&o| oback[o].ok_or_else(|| Error::MalformedMorphism("outcome outside the equalizer".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::from_indices_unchecked(k.source().clone(), eq.game.clone(), pm, om))
}

/// Equivalence classes of `0..n` generated by `pairs`, ordered by least
/// member, plus the class of every element.
fn classes(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let mut root_class: BTreeMap<usize, usize> = BTreeMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for x in 0..n {
        let r = uf.find_mut(x);
        let c = *root_class.entry(r).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[c].push(x);
        class_of[x] = c;
    }
    (members, class_of)
}

/// Singletons keep their label; merged classes are `[least member]`.
fn class_label(members: &[usize], carrier: &[String]) -> String {
    match members {
        [only] => carrier[*only].clone(),
        _ => format!("[{}]", carrier[members[0]]),
    }
}

/// Quotient of the common target by the equivalences generated by
/// `f(x) ~ g(x)` on players and on outcomes. A player class accesses
/// `[o] – [p]` when some member accessed some representatives; its
/// preferences are the preorder generated by every member's preferences.
/// The leg `quotient` is the canonical surjection.
pub fn coequalizer(f: &Morphism, g: &Morphism) -> Result<ConstructedGame> {
    require_parallel(f, g)?;
    let tgt = f.target();
    let np = tgt.players().len();
    let no = tgt.outcomes().len();
    let (pclasses, pclass_of) = classes(
        np,
        (0..f.source().players().len()).map(|i| (f.map_player(i), g.map_player(i))),
    );
    let (oclasses, oclass_of) = classes(
        no,
        (0..f.source().outcomes().len()).map(|o| (f.map_outcome(o), g.map_outcome(o))),
    );
    let m = oclasses.len();
    let mut access = Vec::with_capacity(pclasses.len());
    let mut prefs = Vec::with_capacity(pclasses.len());
    for members in &pclasses {
        let mut a = Relation::empty(m);
        let mut q = Relation::empty(m);
        for &k in members {
            a.union_with(&tgt.access(k).image(&oclass_of, m));
            q.union_with(&tgt.prefs(k).image(&oclass_of, m));
        }
        access.push(a.reflexive_symmetric_closure());
        prefs.push(q.reflexive_transitive_closure());
    }
    let plabels: Vec<String> = pclasses.iter().map(|c| class_label(c, tgt.players())).collect();
    let olabels: Vec<String> = oclasses.iter().map(|c| class_label(c, tgt.outcomes())).collect();
    let game = Arc::new(Game::assemble(plabels.clone(), olabels.clone(), access, prefs)?);
    let ppos = super::positions(&plabels, game.players());
    let opos = super::positions(&olabels, game.outcomes());
    let q = Morphism::from_indices_unchecked(
        tgt.clone(),
        game.clone(),
        pclass_of.iter().map(|&c| ppos[c]).collect(),
        oclass_of.iter().map(|&c| opos[c]).collect(),
    );
    Ok(ConstructedGame {
        game,
        legs: BTreeMap::from([("quotient".to_string(), q)]),
    })
}

/// The unique `u: Q → y` with `u ∘ quotient = k`, for `k` constant on
/// every class.
pub fn coequalizer_mediate(k: &Morphism, coeq: &ConstructedGame) -> Result<Morphism> {
    let q = coeq.leg("quotient")?;
    if k.source() != q.source() {
        return Err(Error::MalformedMorphism("morphism does not start at the quotiented game".into()));
    }
    let descend = |classes_of: &[usize], n: usize, image: &dyn Fn(usize) -> usize| -> Result<Vec<usize>> {
        let mut out: Vec<Option<usize>> = vec![None; n];
        for (x, &c) in classes_of.iter().enumerate() {
            let v = image(x);
            if out[c].replace(v).is_some_and(|w| w != v) {
                return Err(Error::MalformedMorphism("morphism is not constant on a class".into()));
            }
        }
        Ok(out.into_iter().map(|v| v.expect("quotient is surjective")).collect())
    };
    let pm = descend(q.player_map(), coeq.game.players().len(), &|i| k.map_player(i))?;
    let om = descend(q.outcome_map(), coeq.game.outcomes().len(), &|o| k.map_outcome(o))?;
    Ok(Morphism::from_indices_unchecked(coeq.game.clone(), k.target().clone(), pm, om))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::terminal_fixed;
    use crate::fixtures;
    use crate::game::{identify_outcomes, partition_merging, OutcomeClass};
    use crate::hom::enumerate_hom_fixed;
    use crate::morphism::{classify_morphism, compose};

    fn arc(g: Game) -> Arc<Game> {
        Arc::new(g)
    }

    #[test]
    fn self_equalizer_is_the_source() {
        let f = fixtures::pd_to_g1_merged();
        let e = equalizer(&f, &f).unwrap();
        assert_eq!(e.game.as_ref(), f.source().as_ref());
        assert!(classify_morphism(e.leg("equalize").unwrap()).unwrap().iso);
    }

    #[test]
    fn disagreeing_points_have_empty_equalizer() {
        let pd = arc(fixtures::prisoners_dilemma());
        let t = arc(terminal_fixed(pd.players()).unwrap());
        let pts = enumerate_hom_fixed(&t, &pd).unwrap();
        let (cc, dd) = (&pts[0], &pts[3]);
        let e = equalizer(dd, cc).unwrap();
        assert_eq!(e.game.players(), ["1", "2"]);
        assert!(e.game.outcomes().is_empty());
    }

    #[test]
    fn non_parallel_pairs_are_rejected() {
        let f = fixtures::pd_to_g1_merged();
        let id = Morphism::identity(f.source().clone());
        assert!(matches!(equalizer(&f, &id), Err(Error::NotParallel)));
        assert!(matches!(coequalizer(&f, &id), Err(Error::NotParallel)));
    }

    #[test]
    fn self_coequalizer_is_the_target() {
        let f = fixtures::pd_to_g1_merged();
        let c = coequalizer(&f, &f).unwrap();
        assert_eq!(c.game.as_ref(), f.target().as_ref());
    }

    #[test]
    fn merging_two_points_matches_identification() {
        let g1 = arc(fixtures::g1());
        let t = arc(terminal_fixed(g1.players()).unwrap());
        let pts = enumerate_hom_fixed(&t, &g1).unwrap();
        let pick = |label: &str| pts.iter().find(|m| m.outcome_image("*").unwrap() == label).unwrap().clone();
        let (tl, dr) = (pick("TL"), pick("DR"));
        let c = coequalizer(&tl, &dr).unwrap();
        let expected = identify_outcomes(
            &g1,
            &partition_merging(&g1, &[OutcomeClass::labeled(&["DR", "TL"], "[DR]")]),
        )
        .unwrap();
        assert_eq!(c.game.as_ref(), &expected);
        let q = c.leg("quotient").unwrap();
        assert!(q.is_valid());
        assert_eq!(compose(&tl, q).unwrap(), compose(&dr, q).unwrap());
        let dropped = coequalizer_mediate(q, &c).unwrap();
        assert_eq!(dropped, Morphism::identity(c.game.clone()));
    }

    #[test]
    fn equalizer_mediate_factors_points() {
        let f = fixtures::pd_to_g1_merged();
        let id = Morphism::identity(f.target().clone());
        let e = equalizer(&f, &f).unwrap();
        let u = equalizer_mediate(&f, &equalizer(&id, &id).unwrap()).unwrap();
        assert_eq!(u.outcome_map(), f.outcome_map());
        assert!(e.leg("equalize").unwrap().is_valid());
    }
}
