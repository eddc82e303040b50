//! Round-tripping games and morphisms through their JSON documents.

use gamecat::fixtures::{counterexample_morphism, weak_ne_example};
use gamecat::io::{game_to_json, load_game, parse_game, save_game, MorphismDocument};

fn main() -> gamecat::Result<()> {
    let g = weak_ne_example();
    let text = game_to_json(&g);
    print!("{text}");
    assert_eq!(parse_game(&text, std::path::Path::new("inline"))?, g);

    let dir = std::env::temp_dir().join("gamecat-documents-example");
    std::fs::create_dir_all(&dir).map_err(|source| gamecat::Error::Io { path: dir.clone(), source })?;
    let path = dir.join("weak.json");
    save_game(&g, &path)?;
    assert_eq!(load_game(&path)?, g);
    println!("saved and reloaded {}", path.display());

    let doc = MorphismDocument::inline(&counterexample_morphism());
    println!("{}", gamecat::io::canonical_json(&doc));
    Ok(())
}
