//! Small reference games used throughout the tests and examples.
//!
//! Matrix games come from [`from_strategic`]; the quotient games and the
//! weak-equilibrium game are written out edge by edge, listing only the
//! non-implied pairs. Where a drawn figure and its payoff matrix disagree
//! (the diagonal dashed arrow between `DR` and `TR` in the drawing of `G₁`)
//! the matrix wins.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::game::{Closure, Game, GameParts};
use crate::morphism::Morphism;
use crate::strategic::{from_strategic, StrategicGame};

fn parts(
    players: &[&str],
    outcomes: &[&str],
    access: &[(&str, &[(&str, &str)])],
    prefs: &[(&str, &[(&str, &str)])],
) -> GameParts {
    let table = |rows: &[(&str, &[(&str, &str)])]| {
        rows.iter()
            .map(|(p, pairs)| {
                (
                    p.to_string(),
                    pairs
                        .iter()
                        .map(|(a, b)| (a.to_string(), b.to_string()))
                        .collect(),
                )
            })
            .collect()
    };
    GameParts {
        players: players.iter().map(|s| s.to_string()).collect(),
        outcomes: outcomes.iter().map(|s| s.to_string()).collect(),
        access: table(access),
        prefs: table(prefs),
    }
}

fn build(p: GameParts) -> Game {
    Game::from_parts(&p, Closure::Auto).expect("fixture is well formed")
}

/// One player `1`; relations are closed automatically.
pub fn single_player(outcomes: &[&str], access: &[(&str, &str)], prefs: &[(&str, &str)]) -> Game {
    build(parts(&["1"], outcomes, &[("1", access)], &[("1", prefs)]))
}

pub fn pd_strategic() -> StrategicGame {
    StrategicGame::bimatrix(
        &["C", "D"],
        &["C", "D"],
        &[&[(-1, -1), (-3, 0)], &[(0, -3), (-2, -2)]],
    )
}

/// Prisoner's Dilemma; outcomes `CC`, `CD`, `DC`, `DD`.
pub fn prisoners_dilemma() -> Game {
    from_strategic(&pd_strategic()).expect("valid matrix")
}

pub fn g1_strategic() -> StrategicGame {
    StrategicGame::bimatrix(
        &["T", "D"],
        &["L", "R"],
        &[&[(0, 0), (-1, 2)], &[(2, -1), (0, 0)]],
    )
}

/// The coordination-free game whose `TL` and `DR` pay the same.
pub fn g1() -> Game {
    from_strategic(&g1_strategic()).expect("valid matrix")
}

/// `G₁` with `TL` and `DR` drawn as one outcome `o`. Access is not transitive:
/// `DL` and `TR` both touch `o` but not each other.
pub fn g1_merged() -> Game {
    build(parts(
        &["1", "2"],
        &["DL", "TR", "o"],
        &[
            ("1", &[("o", "DL"), ("o", "TR")]),
            ("2", &[("o", "DL"), ("o", "TR")]),
        ],
        &[
            ("1", &[("TR", "o"), ("o", "DL")]),
            ("2", &[("DL", "o"), ("o", "TR")]),
        ],
    ))
}

pub fn bos_strategic() -> StrategicGame {
    StrategicGame::bimatrix(
        &["A", "B"],
        &["C", "D"],
        &[&[(2, 1), (0, 0)], &[(0, 0), (1, 2)]],
    )
}

/// Battle of the Sexes with the two miscoordinated profiles drawn as `o`.
pub fn bos() -> Game {
    build(parts(
        &["1", "2"],
        &["AC", "BD", "o"],
        &[
            ("1", &[("AC", "o"), ("o", "BD")]),
            ("2", &[("AC", "o"), ("o", "BD")]),
        ],
        &[
            ("1", &[("o", "BD"), ("BD", "AC")]),
            ("2", &[("o", "AC"), ("AC", "BD")]),
        ],
    ))
}

/// [`bos`] with players renamed `1 → 2`, `2 → 3`, so that it shares exactly
/// player `2` with the Prisoner's Dilemma.
pub fn bos_shifted() -> Game {
    let rename = BTreeMap::from([
        ("1".to_string(), "2".to_string()),
        ("2".to_string(), "3".to_string()),
    ]);
    bos().rename_players(&rename).expect("injective renaming")
}

/// Three outcomes where `o` is an equilibrium, `p` is only weakly stable
/// (player 2's alternative `q` is incomparable) and `q` is neither.
pub fn weak_ne_example() -> Game {
    build(parts(
        &["1", "2"],
        &["o", "p", "q"],
        &[("1", &[("o", "p"), ("o", "q")]), ("2", &[("p", "q"), ("o", "q")])],
        &[("1", &[("p", "o"), ("o", "p"), ("q", "o")]), ("2", &[("q", "o")])],
    ))
}

/// Two players, outcomes `a`, `b`, every relation the identity.
pub fn counterexample_source() -> Game {
    build(parts(
        &["1", "2"],
        &["a", "b"],
        &[("1", &[]), ("2", &[])],
        &[("1", &[]), ("2", &[])],
    ))
}

/// Same outcomes, full access, opposed strict preferences: no equilibrium.
pub fn counterexample_target() -> Game {
    build(parts(
        &["1", "2"],
        &["a", "b"],
        &[("1", &[("a", "b")]), ("2", &[("a", "b")])],
        &[("1", &[("a", "b")]), ("2", &[("b", "a")])],
    ))
}

/// The identity on outcomes from [`counterexample_source`] to
/// [`counterexample_target`]. A morphism that loses every equilibrium.
pub fn counterexample_morphism() -> Morphism {
    let s = Arc::new(counterexample_source());
    let t = Arc::new(counterexample_target());
    Morphism::new(s, t, &pairs(&[("1", "1"), ("2", "2")]), &pairs(&[("a", "a"), ("b", "b")]))
        .expect("identity is a morphism")
}

/// `CC, DD ↦ o`, `DC ↦ DL`, `CD ↦ TR` into [`g1_merged`].
pub fn pd_to_g1_merged() -> Morphism {
    Morphism::new(
        Arc::new(prisoners_dilemma()),
        Arc::new(g1_merged()),
        &pairs(&[("1", "1"), ("2", "2")]),
        &pairs(&[("CC", "o"), ("DD", "o"), ("DC", "DL"), ("CD", "TR")]),
    )
    .expect("fixture map is a morphism")
}

fn pairs(ps: &[(&str, &str)]) -> BTreeMap<String, String> {
    ps.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}
