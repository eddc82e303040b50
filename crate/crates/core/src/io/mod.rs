//! Reading and writing games, strategic games and morphisms.

mod document;
mod dot;

pub use document::{
    canonical_json, game_to_json, load_game, load_morphism, load_strategic, maps_value, parse_game, save_game,
    write_atomic, GameDocument, GameRef, MorphismDocument, StrategicDocument, FORMAT_VERSION,
};
pub use dot::to_dot;
