//! Games as multigraphs: players, outcomes, and per-player accessibility and
//! preference relations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::relation::{relation_from_labels, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Access,
    Prefs,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Access => "access",
            RelationKind::Prefs => "prefs",
        })
    }
}

/// One broken invariant of a candidate game.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    DuplicatePlayer(String),
    DuplicateOutcome(String),
    MissingRelation {
        player: String,
        relation: RelationKind,
    },
    UnexpectedRelation {
        player: String,
        relation: RelationKind,
    },
    UnknownOutcome {
        player: String,
        relation: RelationKind,
        outcome: String,
    },
    NotReflexive {
        player: String,
        relation: RelationKind,
        outcome: String,
    },
    NotSymmetric {
        player: String,
        pair: (String, String),
    },
    NotTransitive {
        player: String,
        triple: (String, String, String),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicatePlayer(p) => write!(f, "duplicate player `{p}`"),
            Violation::DuplicateOutcome(o) => write!(f, "duplicate outcome `{o}`"),
            Violation::MissingRelation { player, relation } => {
                write!(f, "player `{player}` has no {relation} relation")
            }
            Violation::UnexpectedRelation { player, relation } => {
                write!(f, "{relation} relation given for unknown player `{player}`")
            }
            Violation::UnknownOutcome {
                player,
                relation,
                outcome,
            } => write!(
                f,
                "{relation} relation of player `{player}` mentions unknown outcome `{outcome}`"
            ),
            Violation::NotReflexive {
                player,
                relation,
                outcome,
            } => write!(
                f,
                "{relation} relation of player `{player}` lacks ({outcome}, {outcome})"
            ),
            Violation::NotSymmetric { player, pair } => write!(
                f,
                "access relation of player `{player}` has ({}, {}) but not ({}, {})",
                pair.0, pair.1, pair.1, pair.0
            ),
            Violation::NotTransitive { player, triple } => write!(
                f,
                "prefs relation of player `{player}` has ({a}, {b}) and ({b}, {c}) but not ({a}, {c})",
                a = triple.0,
                b = triple.1,
                c = triple.2
            ),
        }
    }
}

/// An unchecked game description, as read from a document or assembled by
/// hand. Relations are keyed by player and hold raw identifier pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GameParts {
    pub players: Vec<String>,
    pub outcomes: Vec<String>,
    pub access: BTreeMap<String, Vec<(String, String)>>,
    pub prefs: BTreeMap<String, Vec<(String, String)>>,
}

/// How [`Game::from_parts`] treats relations that are not yet closed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Closure {
    /// Close access reflexively-symmetrically and prefs reflexively-transitively.
    #[default]
    Auto,
    /// Reject any relation that is not already closed.
    Strict,
}

/// Reports every violated invariant of `candidate`. An empty list means the
/// parts describe a valid game exactly as written.
pub fn validate_game(candidate: &GameParts) -> Vec<Violation> {
    let mut out = structural_violations(candidate);
    let outcomes: BTreeSet<&str> = candidate.outcomes.iter().map(String::as_str).collect();
    for player in unique(&candidate.players) {
        for kind in [RelationKind::Access, RelationKind::Prefs] {
            let table = match kind {
                RelationKind::Access => &candidate.access,
                RelationKind::Prefs => &candidate.prefs,
            };
            let Some(pairs) = table.get(player) else {
                continue;
            };
            let set: BTreeSet<(&str, &str)> = pairs
                .iter()
                .map(|(a, b)| (a.as_str(), b.as_str()))
                .filter(|(a, b)| outcomes.contains(a) && outcomes.contains(b))
                .collect();
            for &o in &outcomes {
                if !set.contains(&(o, o)) {
                    out.push(Violation::NotReflexive {
                        player: player.clone(),
                        relation: kind,
                        outcome: o.to_string(),
                    });
                }
            }
            match kind {
                RelationKind::Access => {
                    for &(a, b) in &set {
                        if !set.contains(&(b, a)) {
                            out.push(Violation::NotSymmetric {
                                player: player.clone(),
                                pair: (a.to_string(), b.to_string()),
                            });
                        }
                    }
                }
                RelationKind::Prefs => {
                    for &(a, b) in &set {
                        for &(b2, c) in set.range((b, "")..) {
                            if b2 != b {
                                break;
                            }
                            if !set.contains(&(a, c)) {
                                out.push(Violation::NotTransitive {
                                    player: player.clone(),
                                    triple: (a.to_string(), b.to_string(), c.to_string()),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn unique(ids: &[String]) -> Vec<&String> {
    let mut seen = BTreeSet::new();
    ids.iter().filter(|id| seen.insert(id.as_str())).collect()
}

/// Duplicates, key mismatches and unknown identifiers. These block
/// construction even when closure is automatic.
fn structural_violations(c: &GameParts) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for p in &c.players {
        if !seen.insert(p.as_str()) {
            out.push(Violation::DuplicatePlayer(p.clone()));
        }
    }
    let players = seen;
    let mut outcomes = BTreeSet::new();
    for o in &c.outcomes {
        if !outcomes.insert(o.as_str()) {
            out.push(Violation::DuplicateOutcome(o.clone()));
        }
    }
    for (kind, table) in [
        (RelationKind::Access, &c.access),
        (RelationKind::Prefs, &c.prefs),
    ] {
        for &p in &players {
            if !table.contains_key(p) {
                out.push(Violation::MissingRelation {
                    player: p.to_string(),
                    relation: kind,
                });
            }
        }
        for (p, pairs) in table {
            if !players.contains(p.as_str()) {
                out.push(Violation::UnexpectedRelation {
                    player: p.clone(),
                    relation: kind,
                });
                continue;
            }
            let mut unknown = BTreeSet::new();
            for (a, b) in pairs {
                for x in [a, b] {
                    if !outcomes.contains(x.as_str()) && unknown.insert(x.as_str()) {
                        out.push(Violation::UnknownOutcome {
                            player: p.clone(),
                            relation: kind,
                            outcome: x.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// A validated game. Players and outcomes are kept sorted and unique;
/// relations are indexed by player position and range over outcome indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Game {
    players: Vec<String>,
    outcomes: Vec<String>,
    access: Vec<Relation>,
    prefs: Vec<Relation>,
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Game");
        s.field("players", &self.players)
            .field("outcomes", &self.outcomes);
        let access: BTreeMap<_, _> = self
            .players
            .iter()
            .zip(&self.access)
            .map(|(p, r)| (p, r.labeled_pairs(&self.outcomes)))
            .collect();
        let prefs: BTreeMap<_, _> = self
            .players
            .iter()
            .zip(&self.prefs)
            .map(|(p, r)| (p, r.labeled_pairs(&self.outcomes)))
            .collect();
        s.field("access", &access).field("prefs", &prefs).finish()
    }
}

impl Game {
    pub fn from_parts(parts: &GameParts, closure: Closure) -> Result<Game> {
        let structural = structural_violations(parts);
        if !structural.is_empty() {
            return Err(Error::InvalidGame(structural));
        }
        if closure == Closure::Strict {
            let v = validate_game(parts);
            if !v.is_empty() {
                return Err(Error::InvalidGame(v));
            }
        }
        let mut outcomes = parts.outcomes.clone();
        outcomes.sort();
        let mut players = parts.players.clone();
        players.sort();
        let mut access = Vec::with_capacity(players.len());
        let mut prefs = Vec::with_capacity(players.len());
        for p in &players {
            let a = relation_from_labels(&parts.access[p], &outcomes)?;
            let r = relation_from_labels(&parts.prefs[p], &outcomes)?;
            access.push(a.reflexive_symmetric_closure());
            prefs.push(r.reflexive_transitive_closure());
        }
        Ok(Game {
            players,
            outcomes,
            access,
            prefs,
        })
    }

    /// Builds a game from labelled carriers and index-based relations in any
    /// order, sorting both carriers. Relations are taken as given; callers
    /// that need a valid result check [`Game::violations`].
    pub(crate) fn assemble(
        players: Vec<String>,
        outcomes: Vec<String>,
        access: Vec<Relation>,
        prefs: Vec<Relation>,
    ) -> Result<Game> {
        let operm = sorted_permutation(&outcomes, "outcome")?;
        let pperm = sorted_permutation(&players, "player")?;
        let n = outcomes.len();
        // new position of old outcome index k
        let mut pos = vec![0; n];
        for (new, &old) in operm.iter().enumerate() {
            pos[old] = new;
        }
        let remap = |r: &Relation| r.image(&pos, n);
        Ok(Game {
            players: pperm.iter().map(|&k| players[k].clone()).collect(),
            outcomes: operm.iter().map(|&k| outcomes[k].clone()).collect(),
            access: pperm.iter().map(|&k| remap(&access[k])).collect(),
            prefs: pperm.iter().map(|&k| remap(&prefs[k])).collect(),
        })
    }

    /// Empty-relation game with the given carriers; used by the player and
    /// outcome games.
    fn bare(players: Vec<String>, outcomes: Vec<String>) -> Result<Game> {
        let n = outcomes.len();
        let k = players.len();
        Game::assemble(
            players,
            outcomes,
            vec![Relation::identity(n); k],
            vec![Relation::identity(n); k],
        )
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn access(&self, player: usize) -> &Relation {
        &self.access[player]
    }

    pub fn prefs(&self, player: usize) -> &Relation {
        &self.prefs[player]
    }

    pub fn relation(&self, player: usize, kind: RelationKind) -> &Relation {
        match kind {
            RelationKind::Access => &self.access[player],
            RelationKind::Prefs => &self.prefs[player],
        }
    }

    pub fn player_index(&self, id: &str) -> Option<usize> {
        self.players.binary_search_by(|p| p.as_str().cmp(id)).ok()
    }

    pub fn outcome_index(&self, id: &str) -> Option<usize> {
        self.outcomes.binary_search_by(|o| o.as_str().cmp(id)).ok()
    }

    pub fn require_player(&self, id: &str) -> Result<usize> {
        self.player_index(id).ok_or_else(|| Error::UnknownIdentifier {
            kind: "player",
            id: id.to_string(),
        })
    }

    pub fn require_outcome(&self, id: &str) -> Result<usize> {
        self.outcome_index(id).ok_or_else(|| Error::UnknownIdentifier {
            kind: "outcome",
            id: id.to_string(),
        })
    }

    /// `a R_i b` by labels; unknown labels read as unrelated.
    pub fn accesses(&self, player: &str, a: &str, b: &str) -> bool {
        self.related(RelationKind::Access, player, a, b)
    }

    /// `a ≼_i b` by labels; unknown labels read as unrelated.
    pub fn prefers_weakly(&self, player: &str, a: &str, b: &str) -> bool {
        self.related(RelationKind::Prefs, player, a, b)
    }

    fn related(&self, kind: RelationKind, player: &str, a: &str, b: &str) -> bool {
        match (
            self.player_index(player),
            self.outcome_index(a),
            self.outcome_index(b),
        ) {
            (Some(i), Some(x), Some(y)) => self.relation(i, kind).contains(x, y),
            _ => false,
        }
    }

    /// The raw-parts view of this game with full (closed) relations.
    pub fn to_parts(&self) -> GameParts {
        let table = |rels: &[Relation]| {
            self.players
                .iter()
                .zip(rels)
                .map(|(p, r)| (p.clone(), r.labeled_pairs(&self.outcomes)))
                .collect()
        };
        GameParts {
            players: self.players.clone(),
            outcomes: self.outcomes.clone(),
            access: table(&self.access),
            prefs: table(&self.prefs),
        }
    }

    /// Invariant check on an already-built game.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, p) in self.players.iter().enumerate() {
            for kind in [RelationKind::Access, RelationKind::Prefs] {
                let r = self.relation(i, kind);
                for a in 0..self.outcomes.len() {
                    if !r.contains(a, a) {
                        out.push(Violation::NotReflexive {
                            player: p.clone(),
                            relation: kind,
                            outcome: self.outcomes[a].clone(),
                        });
                    }
                }
            }
            for (a, b) in self.access[i].pairs() {
                if !self.access[i].contains(b, a) {
                    out.push(Violation::NotSymmetric {
                        player: p.clone(),
                        pair: (self.outcomes[a].clone(), self.outcomes[b].clone()),
                    });
                }
            }
            if let Some((a, b, c)) = self.prefs[i].first_intransitive_triple() {
                out.push(Violation::NotTransitive {
                    player: p.clone(),
                    triple: (
                        self.outcomes[a].clone(),
                        self.outcomes[b].clone(),
                        self.outcomes[c].clone(),
                    ),
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Same carriers with player ids renamed; `rename` must be injective.
    pub fn rename_players(&self, rename: &BTreeMap<String, String>) -> Result<Game> {
        let players = self
            .players
            .iter()
            .map(|p| rename.get(p).cloned().unwrap_or_else(|| p.clone()))
            .collect();
        Game::assemble(
            players,
            self.outcomes.clone(),
            self.access.clone(),
            self.prefs.clone(),
        )
    }
}

fn sorted_permutation(ids: &[String], kind: &'static str) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..ids.len()).collect();
    perm.sort_by(|&a, &b| ids[a].cmp(&ids[b]));
    for w in perm.windows(2) {
        if ids[w[0]] == ids[w[1]] {
            return Err(Error::DuplicateIdentifier {
                kind,
                id: ids[w[0]].clone(),
            });
        }
    }
    Ok(perm)
}

/// `G_p(S)`: the given players, no outcomes.
pub fn player_game<S: AsRef<str>>(ids: &[S]) -> Result<Game> {
    Game::bare(ids.iter().map(|s| s.as_ref().to_string()).collect(), vec![])
}

/// `G_O(T)`: the given outcomes, no players.
pub fn outcome_game<S: AsRef<str>>(ids: &[S]) -> Result<Game> {
    Game::bare(vec![], ids.iter().map(|s| s.as_ref().to_string()).collect())
}

/// One block of an outcome partition, with an optional display label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutcomeClass {
    pub members: Vec<String>,
    pub label: Option<String>,
}

impl OutcomeClass {
    pub fn new<S: AsRef<str>>(members: &[S]) -> Self {
        OutcomeClass {
            members: members.iter().map(|s| s.as_ref().to_string()).collect(),
            label: None,
        }
    }

    pub fn labeled<S: AsRef<str>>(members: &[S], label: &str) -> Self {
        OutcomeClass {
            label: Some(label.to_string()),
            ..OutcomeClass::new(members)
        }
    }

    fn display_label(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => self.members.iter().min().cloned().unwrap_or_default(),
        }
    }
}

/// Completes `merges` with singleton classes for every outcome they leave out.
pub fn partition_merging(g: &Game, merges: &[OutcomeClass]) -> Vec<OutcomeClass> {
    let covered: BTreeSet<&str> = merges
        .iter()
        .flat_map(|c| c.members.iter().map(String::as_str))
        .collect();
    let mut classes = merges.to_vec();
    classes.extend(
        g.outcomes()
            .iter()
            .filter(|o| !covered.contains(o.as_str()))
            .map(|o| OutcomeClass::new(&[o])),
    );
    classes
}

/// Collapses each class of a partition of `g`'s outcomes to one outcome.
/// Access relations are the reflexive-symmetric closure of their image (no
/// transitive closure); preferences are the preorder generated by theirs.
/// Returns the quotient game and the class index of every original outcome.
pub fn identify_outcomes_indexed(
    g: &Game,
    classes: &[OutcomeClass],
) -> Result<(Game, Vec<usize>)> {
    let mut class_of: Vec<Option<usize>> = vec![None; g.outcomes().len()];
    for (c, class) in classes.iter().enumerate() {
        if class.members.is_empty() {
            return Err(Error::NotAPartition(format!("class {c} is empty")));
        }
        for m in &class.members {
            let k = g
                .outcome_index(m)
                .ok_or_else(|| Error::NotAPartition(format!("`{m}` is not an outcome")))?;
            if class_of[k].replace(c).is_some() {
                return Err(Error::NotAPartition(format!("`{m}` appears twice")));
            }
        }
    }
    if let Some(k) = class_of.iter().position(Option::is_none) {
        return Err(Error::NotAPartition(format!(
            "`{}` is not covered",
            g.outcomes()[k]
        )));
    }
    let class_of: Vec<usize> = class_of.into_iter().flatten().collect();
    let m = classes.len();
    let labels = classes.iter().map(OutcomeClass::display_label).collect();
    let access = g
        .access
        .iter()
        .map(|r| r.image(&class_of, m).reflexive_symmetric_closure())
        .collect();
    let prefs = g
        .prefs
        .iter()
        .map(|r| r.image(&class_of, m).reflexive_transitive_closure())
        .collect();
    let q = Game::assemble(g.players.clone(), labels, access, prefs)?;
    // class index -> sorted position
    let pos: HashMap<&str, usize> = q
        .outcomes()
        .iter()
        .enumerate()
        .map(|(k, o)| (o.as_str(), k))
        .collect();
    let class_pos: Vec<usize> = classes
        .iter()
        .map(|c| pos[c.display_label().as_str()])
        .collect();
    let map = class_of.iter().map(|&c| class_pos[c]).collect();
    Ok((q, map))
}

/// Quotient of `g` by a partition of its outcomes.
pub fn identify_outcomes(g: &Game, classes: &[OutcomeClass]) -> Result<Game> {
    identify_outcomes_indexed(g, classes).map(|(q, _)| q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn parts(players: &[&str], outcomes: &[&str]) -> GameParts {
        GameParts {
            players: players.iter().map(|s| s.to_string()).collect(),
            outcomes: outcomes.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    fn pairs(ps: &[(&str, &str)]) -> Vec<(String, String)> {
        ps.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn pd_fixture_is_valid() {
        let pd = fixtures::prisoners_dilemma();
        assert!(validate_game(&pd.to_parts()).is_empty());
        assert!(pd.violations().is_empty());
    }

    #[test]
    fn missing_loop_is_one_reflexivity_violation() {
        let mut p = parts(&["1"], &["a"]);
        p.access.insert("1".into(), vec![]);
        p.prefs.insert("1".into(), pairs(&[("a", "a")]));
        let v = validate_game(&p);
        assert_eq!(
            v,
            vec![Violation::NotReflexive {
                player: "1".into(),
                relation: RelationKind::Access,
                outcome: "a".into()
            }]
        );
    }

    #[test]
    fn intransitive_prefs_are_reported_once() {
        let mut p = parts(&["1"], &["a", "b", "c"]);
        p.access
            .insert("1".into(), pairs(&[("a", "a"), ("b", "b"), ("c", "c")]));
        p.prefs.insert(
            "1".into(),
            pairs(&[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]),
        );
        let v = validate_game(&p);
        assert_eq!(
            v,
            vec![Violation::NotTransitive {
                player: "1".into(),
                triple: ("a".into(), "b".into(), "c".into())
            }]
        );
    }

    #[test]
    fn asymmetric_access_and_key_mismatch() {
        let mut p = parts(&["1"], &["a", "b"]);
        p.access.insert(
            "1".into(),
            pairs(&[("a", "a"), ("b", "b"), ("a", "b")]),
        );
        p.prefs.insert("2".into(), vec![]);
        let v = validate_game(&p);
        assert!(v.contains(&Violation::NotSymmetric {
            player: "1".into(),
            pair: ("a".into(), "b".into())
        }));
        assert!(v.contains(&Violation::MissingRelation {
            player: "1".into(),
            relation: RelationKind::Prefs
        }));
        assert!(v.contains(&Violation::UnexpectedRelation {
            player: "2".into(),
            relation: RelationKind::Prefs
        }));
    }

    #[test]
    fn strict_mode_rejects_open_relations_auto_mode_closes() {
        let mut p = parts(&["1"], &["a", "b"]);
        p.access.insert("1".into(), pairs(&[("a", "b")]));
        p.prefs.insert("1".into(), vec![]);
        assert!(matches!(
            Game::from_parts(&p, Closure::Strict),
            Err(Error::InvalidGame(_))
        ));
        let g = Game::from_parts(&p, Closure::Auto).unwrap();
        assert!(g.accesses("1", "b", "a"));
        assert!(g.prefers_weakly("1", "b", "b"));
        assert!(g.is_valid());
    }

    #[test]
    fn unknown_outcome_blocks_even_auto_mode() {
        let mut p = parts(&["1"], &["a"]);
        p.access.insert("1".into(), pairs(&[("a", "x")]));
        p.prefs.insert("1".into(), vec![]);
        let err = Game::from_parts(&p, Closure::Auto).unwrap_err();
        assert!(err.to_string().contains("`x`"), "{err}");
    }

    #[test]
    fn player_and_outcome_games() {
        let empty_p = player_game::<&str>(&[]).unwrap();
        let empty_o = outcome_game::<&str>(&[]).unwrap();
        assert_eq!(empty_p, empty_o);
        assert!(empty_p.players().is_empty() && empty_p.outcomes().is_empty());
        let gp = player_game(&["2", "1"]).unwrap();
        assert_eq!(gp.players(), ["1", "2"]);
        assert!(gp.outcomes().is_empty());
        let go = outcome_game(&["x"]).unwrap();
        assert!(go.players().is_empty());
        assert_eq!(go.outcomes(), ["x"]);
    }

    #[test]
    fn merged_g1_access_is_not_transitive() {
        let g1 = fixtures::g1();
        let merged =
            identify_outcomes(&g1, &partition_merging(&g1, &[OutcomeClass::labeled(&["TL", "DR"], "o")]))
                .unwrap();
        assert_eq!(merged.outcomes(), ["DL", "TR", "o"]);
        for p in ["1", "2"] {
            assert!(merged.accesses(p, "o", "DL"));
            assert!(merged.accesses(p, "o", "TR"));
            assert!(!merged.accesses(p, "DL", "TR"));
        }
        assert!(merged.is_valid());
        assert_eq!(merged, fixtures::g1_merged());
    }

    #[test]
    fn bos_identification_gives_figure_fixture() {
        let raw = fixtures::bos_strategic();
        let g = crate::strategic::from_strategic(&raw).unwrap();
        let q = identify_outcomes(
            &g,
            &partition_merging(&g, &[OutcomeClass::labeled(&["AD", "BC"], "o")]),
        )
        .unwrap();
        assert_eq!(q, fixtures::bos());
    }

    #[test]
    fn singleton_partition_is_identity() {
        let pd = fixtures::prisoners_dilemma();
        let q = identify_outcomes(&pd, &partition_merging(&pd, &[])).unwrap();
        assert_eq!(q, pd);
    }

    #[test]
    fn bad_partitions_are_rejected() {
        let pd = fixtures::prisoners_dilemma();
        let overlap = [
            OutcomeClass::new(&["CC", "CD"]),
            OutcomeClass::new(&["CD", "DC", "DD"]),
        ];
        assert!(matches!(
            identify_outcomes(&pd, &overlap),
            Err(Error::NotAPartition(_))
        ));
        let short = [OutcomeClass::new(&["CC", "CD"])];
        assert!(matches!(
            identify_outcomes(&pd, &short),
            Err(Error::NotAPartition(_))
        ));
        let stranger = [OutcomeClass::new(&["CC", "CD", "DC", "DD", "XX"])];
        assert!(matches!(
            identify_outcomes(&pd, &stranger),
            Err(Error::NotAPartition(_))
        ));
    }
}
