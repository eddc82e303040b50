//! From a payoff matrix to a multigraph game and its equilibria.

use gamecat::equilibria::{nash_equilibria, weak_nash_equilibria};
use gamecat::strategic::{from_strategic, StrategicGame};

fn main() -> gamecat::Result<()> {
    let sg = StrategicGame::bimatrix(
        &["C", "D"],
        &["C", "D"],
        &[&[(-1, -1), (-3, 0)], &[(0, -3), (-2, -2)]],
    );
    let g = from_strategic(&sg)?;
    println!("players  {:?}", g.players());
    println!("outcomes {:?}", g.outcomes());
    for (i, p) in g.players().iter().enumerate() {
        // off-diagonal pairs only; both relations are reflexive
        let moves: Vec<_> = g.access(i).labeled_pairs(g.outcomes()).into_iter().filter(|(a, b)| a < b).collect();
        println!("player {p} moves between {moves:?}");
    }
    let label = |o: &usize| g.outcomes()[*o].clone();
    println!("Nash      {:?}", nash_equilibria(&g).iter().map(label).collect::<Vec<_>>());
    println!("weak Nash {:?}", weak_nash_equilibria(&g).iter().map(label).collect::<Vec<_>>());
    Ok(())
}
