//! Regression constants frozen from the brute-force oracle in
//! `tests/oracle/derive_constants.py`, plus the closed-form values around them.

use std::collections::BTreeMap;
use std::sync::Arc;

use gamecat::constructions::{
    coequalizer, exponential_fixed, product, product_fixed, pushforward_players, pushout_shared_players, terminal,
    terminal_fixed,
};
use gamecat::equilibria::nash_equilibria;
use gamecat::fixtures::{bos, bos_shifted, g1, g1_merged, prisoners_dilemma};
use gamecat::game::identify_outcomes;
use gamecat::hom::{enumerate_hom, enumerate_hom_fixed, enumerate_hom_naive};
use gamecat::{Game, Morphism, OutcomeClass};

fn arc(g: Game) -> Arc<Game> {
    Arc::new(g)
}

fn labels(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn ne(g: &Game) -> Vec<&str> {
    nash_equilibria(g).iter().map(|&o| g.outcomes()[o].as_str()).collect()
}

#[test]
fn hom_counts() {
    let pd = arc(prisoners_dilemma());
    let g1m = arc(g1_merged());
    let bos = arc(bos());
    assert_eq!(enumerate_hom_fixed(&pd, &pd).unwrap().len(), 5);
    assert_eq!(enumerate_hom(&pd, &pd).unwrap().len(), 18);
    assert_eq!(enumerate_hom_fixed(&pd, &g1m).unwrap().len(), 8);
    assert_eq!(enumerate_hom_fixed(&g1m, &g1m).unwrap().len(), 8);
    assert_eq!(enumerate_hom_fixed(&bos, &bos).unwrap().len(), 6);
}

#[test]
fn pruned_and_naive_enumerations_agree_on_fixtures() {
    let games = [arc(prisoners_dilemma()), arc(g1_merged()), arc(bos())];
    for g in &games {
        for h in &games {
            assert_eq!(enumerate_hom(g, h).unwrap(), enumerate_hom_naive(g, h, 1 << 20).unwrap());
        }
    }
}

#[test]
fn points_of_a_game_are_its_outcomes() {
    let pd = arc(prisoners_dilemma());
    // The player of the terminal game may land on either PD player.
    assert_eq!(enumerate_hom(&arc(terminal()), &pd).unwrap().len(), 8);
    let t = arc(terminal_fixed(pd.players()).unwrap());
    assert_eq!(enumerate_hom_fixed(&t, &pd).unwrap().len(), 4);
}

#[test]
fn equilibria_of_fixtures() {
    assert_eq!(ne(&prisoners_dilemma()), ["DD"]);
    assert_eq!(ne(&bos()), ["AC", "BD"]);
    assert_eq!(ne(&g1()), ["DR"]);
    assert!(ne(&g1_merged()).is_empty());
}

#[test]
fn product_of_pd_with_itself() {
    let pd = arc(prisoners_dilemma());
    let p = product_fixed(&[pd.clone(), pd]).unwrap();
    assert_eq!(p.game.outcomes().len(), 16);
    assert_eq!(ne(&p.game), ["(DD|DD)"]);
}

#[test]
fn product_over_varying_players() {
    let p = product(&[arc(prisoners_dilemma()), arc(bos())]).unwrap();
    assert_eq!(p.game.players().len(), 4);
    assert_eq!(p.game.outcomes().len(), 12);
}

#[test]
fn exponential_of_g1_merged_by_pd() {
    let e = exponential_fixed(&arc(prisoners_dilemma()), &arc(g1_merged())).unwrap();
    assert_eq!(e.game.outcomes().len(), 8);
    assert!(e.game.is_valid());
    assert!(e.eval().is_valid());
}

#[test]
fn collapsing_both_pd_players() {
    let f = labels(&[("1", "m"), ("2", "m")]);
    let g = pushforward_players(&prisoners_dilemma(), &["m".to_string()], &f).unwrap();
    assert_eq!(g.access(0).len(), 12);
    assert_eq!(g.prefs(0).len(), 16);
    assert!(g.prefers_weakly("m", "CC", "DD") && g.prefers_weakly("m", "DD", "CC"));
}

#[test]
fn pushout_of_pd_and_shifted_bos() {
    let p = pushout_shared_players(&arc(prisoners_dilemma()), &arc(bos_shifted())).unwrap();
    assert_eq!(p.game.players(), ["1@0", "3@1", "[2@0]"]);
    assert_eq!(p.game.outcomes().len(), 7);
    let mut got = ne(&p.game);
    got.sort();
    assert_eq!(got, ["AC@1", "BD@1", "DD@0"]);
}

#[test]
fn coequalizer_matches_direct_identification() {
    let g1 = arc(g1());
    let t = arc(terminal_fixed(g1.players()).unwrap());
    let players = labels(&[("1", "1"), ("2", "2")]);
    let pick = |o: &str| Morphism::new(t.clone(), g1.clone(), &players, &labels(&[("*", o)])).unwrap();
    let q = coequalizer(&pick("TL"), &pick("DR")).unwrap();
    let direct = identify_outcomes(&g1, &[
        OutcomeClass::labeled(&["DR", "TL"], "[DR]"),
        OutcomeClass::new(&["DL"]),
        OutcomeClass::new(&["TR"]),
    ])
    .unwrap();
    assert_eq!(*q.game, direct);
}
