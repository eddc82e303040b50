//! Graphviz export.
//!
//! One node per outcome. Access is drawn as solid undirected edges, one per
//! unordered pair (loops once); preferences as dashed arrows `o → p` for
//! `o ≼ p`, skipping the reflexive pairs. Each player gets a color from a
//! fixed cycle and labels its edges.

use std::fmt::Write;

use crate::game::Game;

const COLORS: [&str; 6] = ["blue", "red", "darkgreen", "orange", "purple", "brown"];

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn to_dot(g: &Game) -> String {
    let mut out = String::from("digraph game {\n");
    if g.outcomes().is_empty() {
        out.push_str("}\n");
        return out;
    }
    out.push_str("  node [shape=ellipse];\n");
    for o in g.outcomes() {
        let _ = writeln!(out, "  {};", quote(o));
    }
    let label = |o: usize| quote(&g.outcomes()[o]);
    for (i, player) in g.players().iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for (o, p) in g.access(i).pairs().filter(|(o, p)| o <= p) {
            let _ = writeln!(
                out,
                "  {} -> {} [dir=none, color={color}, label={}];",
                label(o),
                label(p),
                quote(player)
            );
        }
        for (o, p) in g.prefs(i).pairs().filter(|(o, p)| o != p) {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dashed, color={color}, label={}];",
                label(o),
                label(p),
                quote(player)
            );
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pd_edge_counts() {
        let dot = to_dot(&fixtures::prisoners_dilemma());
        let solid: Vec<&str> = dot.lines().filter(|l| l.contains("dir=none")).collect();
        let loops = solid
            .iter()
            .filter(|l| {
                let mut it = l.trim().split(" -> ");
                let a = it.next().unwrap();
                let b = it.next().unwrap().split(' ').next().unwrap();
                a == b
            })
            .count();
        assert_eq!(loops, 8);
        assert_eq!(solid.len() - loops, 4);
        assert_eq!(dot.lines().filter(|l| l.contains("->") && !l.contains("dashed") && !l.contains("dir=none")).count(), 0);
    }

    #[test]
    fn empty_game_is_header_and_footer() {
        assert_eq!(to_dot(&crate::constructions::initial()), "digraph game {\n}\n");
    }

    #[test]
    fn labels_are_escaped() {
        let g = crate::game::outcome_game(&["a\"b"]).unwrap();
        assert!(to_dot(&g).contains("\"a\\\"b\";"));
    }
}
