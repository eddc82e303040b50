//! Graphviz rendering of a game: solid undirected edges for access,
//! dashed arrows for preference, one colour per player.
//!
//! `cargo run --example dot_export | dot -Tsvg > bos.svg`

use gamecat::fixtures::bos;
use gamecat::io::to_dot;

fn main() {
    print!("{}", to_dot(&bos()));
}
