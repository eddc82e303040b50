//! JSON documents for games, strategic games and morphisms.
//!
//! Output is canonical: keys sorted, pairs sorted, two-space indentation,
//! trailing newline. Saved games carry their full closed relations and
//! `auto_close: false`, so loading them back is exact.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::game::{Closure, Game, GameParts};
use crate::morphism::Morphism;
use crate::strategic::StrategicGame;

pub const FORMAT_VERSION: &str = "1";

fn default_true() -> bool {
    true
}

fn default_version() -> String {
    FORMAT_VERSION.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    #[serde(default = "default_version")]
    pub format_version: String,
    pub players: Vec<String>,
    pub outcomes: Vec<String>,
    #[serde(default)]
    pub access: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default)]
    pub prefs: BTreeMap<String, Vec<(String, String)>>,
    #[serde(default = "default_true")]
    pub auto_close: bool,
}

impl GameDocument {
    /// Canonical document of a game: closed relations, `auto_close: false`.
    pub fn from_game(g: &Game) -> GameDocument {
        let parts = g.to_parts();
        GameDocument {
            format_version: FORMAT_VERSION.to_string(),
            players: parts.players,
            outcomes: parts.outcomes,
            access: parts.access,
            prefs: parts.prefs,
            auto_close: false,
        }
    }

    pub fn to_parts(&self) -> GameParts {
        GameParts {
            players: self.players.clone(),
            outcomes: self.outcomes.clone(),
            access: self.access.clone(),
            prefs: self.prefs.clone(),
        }
    }

    /// Closes relations if `auto_close`, otherwise requires them closed.
    pub fn to_game(&self) -> Result<Game> {
        let mode = if self.auto_close {
            Closure::Auto
        } else {
            Closure::Strict
        };
        Game::from_parts(&self.to_parts(), mode)
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("documents serialize")
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // routing through Value sorts every object by key
    let v = serde_json::to_value(value).expect("documents serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub fn game_to_json(g: &Game) -> String {
    canonical_json(&GameDocument::from_game(g))
}

fn parse_error(path: &Path, e: serde_json::Error) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a game document; `origin` names the source in errors.
pub fn parse_game(text: &str, origin: &Path) -> Result<Game> {
    let doc: GameDocument = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
    doc.to_game()
}

pub fn load_game(path: &Path) -> Result<Game> {
    parse_game(&read(path)?, path)
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failure never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    use std::io::Write;
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

pub fn save_game(g: &Game, path: &Path) -> Result<()> {
    write_atomic(path, &game_to_json(g))
}

/// A payoff: an integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Payoff {
    Int(i64),
    Text(String),
}

impl Payoff {
    fn to_rational(&self) -> std::result::Result<Rational64, String> {
        match self {
            Payoff::Int(n) => Ok(Rational64::from_integer(*n)),
            Payoff::Text(s) => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let n: i64 = n.parse().map_err(|_| format!("bad payoff `{s}`"))?;
                let d: i64 = d.parse().map_err(|_| format!("bad payoff `{s}`"))?;
                if d == 0 {
                    return Err(format!("payoff `{s}` has a zero denominator"));
                }
                Ok(Rational64::new(n, d))
            }
        }
    }

    fn from_rational(r: &Rational64) -> Payoff {
        if r.is_integer() {
            Payoff::Int(*r.numer())
        } else {
            Payoff::Text(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PayoffEntry {
    profile: Vec<String>,
    values: Vec<Payoff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrategicDocument {
    #[serde(default = "default_version")]
    format_version: String,
    players: Vec<String>,
    actions: BTreeMap<String, Vec<String>>,
    payoffs: Vec<PayoffEntry>,
    #[serde(default)]
    separator: String,
}

impl StrategicDocument {
    pub fn from_strategic(sg: &StrategicGame) -> StrategicDocument {
        StrategicDocument {
            format_version: FORMAT_VERSION.to_string(),
            players: sg.players.clone(),
            actions: sg.actions.clone(),
            payoffs: sg
                .payoffs
                .iter()
                .map(|(p, v)| PayoffEntry {
                    profile: p.clone(),
                    values: v.iter().map(Payoff::from_rational).collect(),
                })
                .collect(),
            separator: sg.separator.clone(),
        }
    }

    pub fn to_strategic(&self) -> Result<StrategicGame> {
        let mut payoffs = BTreeMap::new();
        for e in &self.payoffs {
            let values = e
                .values
                .iter()
                .map(Payoff::to_rational)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(Error::InvalidStrategic)?;
            if payoffs.insert(e.profile.clone(), values).is_some() {
                return Err(Error::InvalidStrategic(format!(
                    "profile {:?} listed twice",
                    e.profile
                )));
            }
        }
        Ok(StrategicGame {
            players: self.players.clone(),
            actions: self.actions.clone(),
            payoffs,
            separator: self.separator.clone(),
        })
    }
}

pub fn load_strategic(path: &Path) -> Result<StrategicGame> {
    let text = read(path)?;
    let doc: StrategicDocument = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    doc.to_strategic()
}

/// A game given by path (relative to the referring document) or inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GameRef {
    Path(PathBuf),
    Inline(GameDocument),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    #[serde(default = "default_version")]
    pub format_version: String,
    pub source: GameRef,
    pub target: GameRef,
    #[serde(default)]
    pub player_map: BTreeMap<String, String>,
    #[serde(default)]
    pub outcome_map: BTreeMap<String, String>,
}

impl MorphismDocument {
    /// Self-contained document with both games inline.
    pub fn inline(m: &Morphism) -> MorphismDocument {
        MorphismDocument {
            format_version: FORMAT_VERSION.to_string(),
            source: GameRef::Inline(GameDocument::from_game(m.source())),
            target: GameRef::Inline(GameDocument::from_game(m.target())),
            player_map: m.labeled_player_map(),
            outcome_map: m.labeled_outcome_map(),
        }
    }
}

fn resolve_game(r: &GameRef, base: &Path) -> Result<Game> {
    match r {
        GameRef::Inline(doc) => doc.to_game(),
        GameRef::Path(p) => load_game(&base.join(p)),
    }
}

/// Loads a morphism document and its games. Only the shape of the maps is
/// checked; preservation is left to the caller.
pub fn load_morphism(path: &Path) -> Result<Morphism> {
    let text = read(path)?;
    let doc: MorphismDocument = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    let base = path.parent().unwrap_or(Path::new("."));
    let s = Arc::new(resolve_game(&doc.source, base)?);
    let t = if doc.target == doc.source {
        s.clone()
    } else {
        Arc::new(resolve_game(&doc.target, base)?)
    };
    Morphism::from_labels(s, t, &doc.player_map, &doc.outcome_map)
}

/// The two maps of a morphism, without its games.
pub fn maps_value(m: &Morphism) -> Value {
    serde_json::json!({
        "player_map": m.labeled_player_map(),
        "outcome_map": m.labeled_outcome_map(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pd_round_trips() {
        let pd = fixtures::prisoners_dilemma();
        let text = game_to_json(&pd);
        let back = parse_game(&text, Path::new("pd.json")).unwrap();
        assert_eq!(back, pd);
        assert_eq!(game_to_json(&back), text);
    }

    #[test]
    fn canonical_form_is_sorted_and_indented() {
        let text = game_to_json(&fixtures::bos());
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(
            keys,
            ["access", "auto_close", "format_version", "outcomes", "players", "prefs"]
        );
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn strict_documents_reject_open_relations() {
        let text = r#"{"players":["1"],"outcomes":["a","b"],
            "access":{"1":[["a","a"],["b","b"],["a","b"]]},
            "prefs":{"1":[["a","a"],["b","b"]]},"auto_close":false}"#;
        assert!(matches!(
            parse_game(text, Path::new("x.json")),
            Err(Error::InvalidGame(_))
        ));
        let open = text.replace("false", "true");
        assert!(parse_game(&open, Path::new("x.json")).is_ok());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_game("{\n  \"players\": [1]\n}", Path::new("bad.json")).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_game("{", Path::new("bad.json")).unwrap_err().exit_code(),
            1
        );
    }

    #[test]
    fn figure_three_document_matches_identification() {
        let text = r#"{
          "players": ["1", "2"],
          "outcomes": ["o", "DL", "TR"],
          "access": {"1": [["o", "DL"], ["o", "TR"]], "2": [["o", "DL"], ["o", "TR"]]},
          "prefs": {"1": [["TR", "o"], ["o", "DL"]], "2": [["DL", "o"], ["o", "TR"]]}
        }"#;
        let loaded = parse_game(text, Path::new("fig3.json")).unwrap();
        let g1 = fixtures::g1();
        let merged = crate::game::identify_outcomes(
            &g1,
            &crate::game::partition_merging(
                &g1,
                &[crate::game::OutcomeClass::labeled(&["TL", "DR"], "o")],
            ),
        )
        .unwrap();
        assert_eq!(loaded, merged);
    }

    #[test]
    fn strategic_documents_accept_fractions() {
        let text = r#"{"players":["1"],"actions":{"1":["x","y"]},
            "payoffs":[{"profile":["x"],"values":["1/2"]},{"profile":["y"],"values":[0]}]}"#;
        let doc: StrategicDocument = serde_json::from_str(text).unwrap();
        let sg = doc.to_strategic().unwrap();
        let g = crate::strategic::from_strategic(&sg).unwrap();
        assert!(g.prefers_weakly("1", "y", "x"));
        assert!(!g.prefers_weakly("1", "x", "y"));
        let again = StrategicDocument::from_strategic(&sg);
        assert_eq!(again.to_strategic().unwrap(), sg);
    }

    #[test]
    fn inline_morphism_documents_round_trip() {
        let m = fixtures::pd_to_g1_merged();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.json");
        write_atomic(&path, &canonical_json(&MorphismDocument::inline(&m))).unwrap();
        assert_eq!(load_morphism(&path).unwrap(), m);
    }
}
