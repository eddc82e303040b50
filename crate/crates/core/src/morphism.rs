//! Morphisms of games: a player map and an outcome map preserving every
//! accessibility and preference relation along the player map.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::{Game, RelationKind};

/// A related pair whose image is not related in the target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MorphismViolation {
    pub player: String,
    pub target_player: String,
    pub relation: RelationKind,
    pub pair: (String, String),
    pub image: (String, String),
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "player `{}`: ({}, {}) in {} but ({}, {}) not in {} of `{}`",
            self.player,
            self.pair.0,
            self.pair.1,
            self.relation,
            self.image.0,
            self.image.1,
            self.relation,
            self.target_player
        )
    }
}

/// A pair of total maps between the carriers of two games, stored by index.
/// Equality is pointwise on both maps together with the endpoint games.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Arc<Game>,
    target: Arc<Game>,
    player_map: Vec<usize>,
    outcome_map: Vec<usize>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism")
            .field("player_map", &self.labeled_player_map())
            .field("outcome_map", &self.labeled_outcome_map())
            .finish()
    }
}

impl Morphism {
    /// Builds a morphism from index maps without checking preservation.
    /// Indices must be in range.
    pub(crate) fn from_indices_unchecked(
        source: Arc<Game>,
        target: Arc<Game>,
        player_map: Vec<usize>,
        outcome_map: Vec<usize>,
    ) -> Morphism {
        debug_assert_eq!(player_map.len(), source.players().len());
        debug_assert_eq!(outcome_map.len(), source.outcomes().len());
        debug_assert!(player_map.iter().all(|&j| j < target.players().len()));
        debug_assert!(outcome_map.iter().all(|&o| o < target.outcomes().len()));
        Morphism {
            source,
            target,
            player_map,
            outcome_map,
        }
    }

    /// Builds a candidate from index maps. Only shape is checked; see
    /// [`Morphism::violations`] for preservation.
    pub fn from_indices(
        source: Arc<Game>,
        target: Arc<Game>,
        player_map: Vec<usize>,
        outcome_map: Vec<usize>,
    ) -> Result<Morphism> {
        if player_map.len() != source.players().len() {
            return Err(Error::MalformedMorphism(format!(
                "player map has {} entries for {} players",
                player_map.len(),
                source.players().len()
            )));
        }
        if outcome_map.len() != source.outcomes().len() {
            return Err(Error::MalformedMorphism(format!(
                "outcome map has {} entries for {} outcomes",
                outcome_map.len(),
                source.outcomes().len()
            )));
        }
        if let Some(&j) = player_map.iter().find(|&&j| j >= target.players().len()) {
            return Err(Error::MalformedMorphism(format!(
                "player index {j} out of range"
            )));
        }
        if let Some(&o) = outcome_map.iter().find(|&&o| o >= target.outcomes().len()) {
            return Err(Error::MalformedMorphism(format!(
                "outcome index {o} out of range"
            )));
        }
        Ok(Morphism::from_indices_unchecked(
            source,
            target,
            player_map,
            outcome_map,
        ))
    }

    /// Builds a candidate from label maps, which must be total on the source
    /// carriers and land in the target carriers.
    pub fn from_labels(
        source: Arc<Game>,
        target: Arc<Game>,
        player_map: &BTreeMap<String, String>,
        outcome_map: &BTreeMap<String, String>,
    ) -> Result<Morphism> {
        let pm = resolve_map(
            "player",
            source.players(),
            player_map,
            |id| target.player_index(id),
        )?;
        let om = resolve_map(
            "outcome",
            source.outcomes(),
            outcome_map,
            |id| target.outcome_index(id),
        )?;
        Ok(Morphism::from_indices_unchecked(source, target, pm, om))
    }

    /// `from_labels` followed by the preservation check.
    pub fn new(
        source: Arc<Game>,
        target: Arc<Game>,
        player_map: &BTreeMap<String, String>,
        outcome_map: &BTreeMap<String, String>,
    ) -> Result<Morphism> {
        Morphism::from_labels(source, target, player_map, outcome_map)?.validated()
    }

    pub fn identity(g: Arc<Game>) -> Morphism {
        let p = (0..g.players().len()).collect();
        let o = (0..g.outcomes().len()).collect();
        Morphism::from_indices_unchecked(g.clone(), g, p, o)
    }

    /// Fails with every violation if the maps do not preserve the structure.
    pub fn validated(self) -> Result<Morphism> {
        let v = self.violations();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::InvalidMorphism(v))
        }
    }

    pub fn source(&self) -> &Arc<Game> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Game> {
        &self.target
    }

    pub fn player_map(&self) -> &[usize] {
        &self.player_map
    }

    pub fn outcome_map(&self) -> &[usize] {
        &self.outcome_map
    }

    pub fn map_player(&self, i: usize) -> usize {
        self.player_map[i]
    }

    pub fn map_outcome(&self, o: usize) -> usize {
        self.outcome_map[o]
    }

    /// Image of a source player by label.
    pub fn player_image(&self, id: &str) -> Result<&str> {
        let i = self.source.require_player(id)?;
        Ok(&self.target.players()[self.player_map[i]])
    }

    /// Image of a source outcome by label.
    pub fn outcome_image(&self, id: &str) -> Result<&str> {
        let o = self.source.require_outcome(id)?;
        Ok(&self.target.outcomes()[self.outcome_map[o]])
    }

    pub fn labeled_player_map(&self) -> BTreeMap<String, String> {
        label_map(self.source.players(), self.target.players(), &self.player_map)
    }

    pub fn labeled_outcome_map(&self) -> BTreeMap<String, String> {
        label_map(
            self.source.outcomes(),
            self.target.outcomes(),
            &self.outcome_map,
        )
    }

    /// Every related pair of the source whose image is unrelated, in
    /// player, relation and pair order.
    pub fn violations(&self) -> Vec<MorphismViolation> {
        let (s, t) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for (i, &j) in self.player_map.iter().enumerate() {
            for kind in [RelationKind::Access, RelationKind::Prefs] {
                let target_rel = t.relation(j, kind);
                for (a, b) in s.relation(i, kind).pairs() {
                    let (fa, fb) = (self.outcome_map[a], self.outcome_map[b]);
                    if !target_rel.contains(fa, fb) {
                        out.push(MorphismViolation {
                            player: s.players()[i].clone(),
                            target_player: t.players()[j].clone(),
                            relation: kind,
                            pair: (s.outcomes()[a].clone(), s.outcomes()[b].clone()),
                            image: (t.outcomes()[fa].clone(), t.outcomes()[fb].clone()),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        let (s, t) = (&*self.source, &*self.target);
        self.player_map.iter().enumerate().all(|(i, &j)| {
            [RelationKind::Access, RelationKind::Prefs]
                .into_iter()
                .all(|kind| {
                    let tr = t.relation(j, kind);
                    s.relation(i, kind)
                        .pairs()
                        .all(|(a, b)| tr.contains(self.outcome_map[a], self.outcome_map[b]))
                })
        })
    }

    /// Both endpoints share one player list and the player map is the identity.
    pub fn is_fixed_players(&self) -> bool {
        self.source.players() == self.target.players()
            && self.player_map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_injective_on_outcomes(&self) -> bool {
        is_injective(&self.outcome_map, self.target.outcomes().len())
    }

    pub fn is_surjective_on_outcomes(&self) -> bool {
        is_surjective(&self.outcome_map, self.target.outcomes().len())
    }

    pub fn is_injective_on_players(&self) -> bool {
        is_injective(&self.player_map, self.target.players().len())
    }

    pub fn is_surjective_on_players(&self) -> bool {
        is_surjective(&self.player_map, self.target.players().len())
    }
}

fn resolve_map(
    kind: &'static str,
    domain: &[String],
    map: &BTreeMap<String, String>,
    lookup: impl Fn(&str) -> Option<usize>,
) -> Result<Vec<usize>> {
    if let Some(stray) = map.keys().find(|k| domain.binary_search(k).is_err()) {
        return Err(Error::MalformedMorphism(format!(
            "{kind} map has key `{stray}` outside the source"
        )));
    }
    domain
        .iter()
        .map(|x| {
            let y = map.get(x).ok_or_else(|| {
                Error::MalformedMorphism(format!("{kind} map is undefined on `{x}`"))
            })?;
            lookup(y).ok_or_else(|| {
                Error::MalformedMorphism(format!(
                    "{kind} map sends `{x}` to `{y}`, which is not in the target"
                ))
            })
        })
        .collect()
}

fn label_map(dom: &[String], cod: &[String], map: &[usize]) -> BTreeMap<String, String> {
    dom.iter()
        .zip(map)
        .map(|(x, &y)| (x.clone(), cod[y].clone()))
        .collect()
}

fn is_injective(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
}

fn is_surjective(map: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in map {
        hit[y] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Violations of the preservation conditions; empty iff `m` is a morphism.
pub fn check_morphism(m: &Morphism) -> Vec<MorphismViolation> {
    m.violations()
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if !Arc::ptr_eq(&f.target, &g.source) && *f.target != *g.source {
        return Err(Error::CompositionMismatch);
    }
    Ok(Morphism::from_indices_unchecked(
        f.source.clone(),
        g.target.clone(),
        f.player_map.iter().map(|&i| g.player_map[i]).collect(),
        f.outcome_map.iter().map(|&o| g.outcome_map[o]).collect(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub monic: bool,
    pub epic: bool,
    pub iso: bool,
}

/// Monic, epic and iso for a morphism with a fixed player set. Iso also
/// requires the inverse outcome map to be a morphism.
pub fn classify_morphism(m: &Morphism) -> Result<Classification> {
    if !m.is_fixed_players() {
        return Err(Error::Unsupported(
            "classification is only defined for morphisms with an identity player map".into(),
        ));
    }
    if !m.is_valid() {
        return Err(Error::InvalidMorphism(m.violations()));
    }
    let monic = m.is_injective_on_outcomes();
    let epic = m.is_surjective_on_outcomes();
    let iso = monic && epic && {
        let mut inv = vec![0; m.outcome_map.len()];
        for (o, &p) in m.outcome_map.iter().enumerate() {
            inv[p] = o;
        }
        Morphism::from_indices_unchecked(
            m.target.clone(),
            m.source.clone(),
            m.player_map.clone(),
            inv,
        )
        .is_valid()
    };
    Ok(Classification { monic, epic, iso })
}

/// The category of games over one fixed player list. Morphisms are outcome
/// maps; the player component is always the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GamI {
    players: Vec<String>,
}

impl GamI {
    pub fn new<S: AsRef<str>>(players: &[S]) -> Result<GamI> {
        let mut players: Vec<String> = players.iter().map(|s| s.as_ref().to_string()).collect();
        players.sort();
        if let Some(w) = players.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateIdentifier {
                kind: "player",
                id: w[0].clone(),
            });
        }
        Ok(GamI { players })
    }

    /// The category whose player list is shared by every game in `gs`.
    pub fn common(gs: &[&Game]) -> Result<GamI> {
        let Some(first) = gs.first() else {
            return Err(Error::MismatchedPlayers(
                "an empty family does not determine a player set".into(),
            ));
        };
        let cat = GamI {
            players: first.players().to_vec(),
        };
        for g in &gs[1..] {
            cat.admit(g)?;
        }
        Ok(cat)
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    /// Fails unless `g` has exactly this player list.
    pub fn admit(&self, g: &Game) -> Result<()> {
        if g.players() == self.players.as_slice() {
            Ok(())
        } else {
            Err(Error::MismatchedPlayers(format!(
                "expected players {:?}, found {:?}",
                self.players,
                g.players()
            )))
        }
    }

    /// A validated outcome map between two games of this category.
    pub fn morphism(
        &self,
        source: Arc<Game>,
        target: Arc<Game>,
        outcome_map: &BTreeMap<String, String>,
    ) -> Result<Morphism> {
        self.admit(&source)?;
        self.admit(&target)?;
        let ids: BTreeMap<String, String> = self
            .players
            .iter()
            .map(|p| (p.clone(), p.clone()))
            .collect();
        Morphism::new(source, target, &ids, outcome_map)
    }
}
