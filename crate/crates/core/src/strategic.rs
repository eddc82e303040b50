//! Strategic-form games and their translation into multigraph games.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::game::Game;
use crate::relation::Relation;

/// Finite action sets and an exact payoff tensor. Profiles list one action
/// per player in player order; payoff vectors list one value per player in
/// the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategicGame {
    pub players: Vec<String>,
    pub actions: BTreeMap<String, Vec<String>>,
    pub payoffs: BTreeMap<Vec<String>, Vec<Rational64>>,
    /// Joins action labels into outcome labels.
    pub separator: String,
}

impl StrategicGame {
    /// Two players `1` and `2` with integer payoffs given as a row-major
    /// matrix of `(row payoff, column payoff)`.
    pub fn bimatrix(rows: &[&str], cols: &[&str], payoffs: &[&[(i64, i64)]]) -> StrategicGame {
        let mut table = BTreeMap::new();
        for (r, row) in rows.iter().zip(payoffs) {
            for (c, &(a, b)) in cols.iter().zip(row.iter()) {
                table.insert(
                    vec![r.to_string(), c.to_string()],
                    vec![Rational64::from_integer(a), Rational64::from_integer(b)],
                );
            }
        }
        StrategicGame {
            players: vec!["1".into(), "2".into()],
            actions: BTreeMap::from([
                ("1".into(), rows.iter().map(|s| s.to_string()).collect()),
                ("2".into(), cols.iter().map(|s| s.to_string()).collect()),
            ]),
            payoffs: table,
            separator: String::new(),
        }
    }

    fn action_lists(&self) -> Result<Vec<&[String]>> {
        self.players
            .iter()
            .map(|p| {
                self.actions.get(p).map(Vec::as_slice).ok_or_else(|| {
                    Error::InvalidStrategic(format!("player `{p}` has no action list"))
                })
            })
            .collect()
    }

    /// Every profile of the action cartesian product, first player slowest.
    pub fn profiles(&self) -> Result<Vec<Vec<String>>> {
        let lists = self.action_lists()?;
        let mut out: Vec<Vec<String>> = vec![vec![]];
        for list in lists {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    list.iter().map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a.clone());
                        p
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidStrategic(m));
        let mut seen = BTreeSet::new();
        for p in &self.players {
            if !seen.insert(p) {
                return bad(format!("duplicate player `{p}`"));
            }
        }
        if let Some(k) = self.actions.keys().find(|k| !seen.contains(k)) {
            return bad(format!("actions given for unknown player `{k}`"));
        }
        for (p, list) in self.actions.iter() {
            let mut acts = BTreeSet::new();
            if let Some(a) = list.iter().find(|a| !acts.insert(*a)) {
                return bad(format!("player `{p}` lists action `{a}` twice"));
            }
        }
        let profiles = self.profiles()?;
        for profile in &profiles {
            match self.payoffs.get(profile) {
                None => return bad(format!("no payoff for profile {profile:?}")),
                Some(v) if v.len() != self.players.len() => {
                    return bad(format!(
                        "payoff for {profile:?} has {} values for {} players",
                        v.len(),
                        self.players.len()
                    ))
                }
                Some(_) => {}
            }
        }
        if self.payoffs.len() != profiles.len() {
            let known: BTreeSet<&Vec<String>> = profiles.iter().collect();
            let extra = self.payoffs.keys().find(|k| !known.contains(k));
            return bad(format!("payoff given for impossible profile {extra:?}"));
        }
        Ok(())
    }
}

/// Multigraph form of a strategic game: outcomes are profiles, a player
/// accesses every profile reachable by changing only their own action, and
/// prefers by their payoff.
pub fn from_strategic(sg: &StrategicGame) -> Result<Game> {
    sg.validate()?;
    let profiles = sg.profiles()?;
    let labels: Vec<String> = profiles.iter().map(|p| p.join(&sg.separator)).collect();
    let mut distinct = BTreeSet::new();
    if let Some(l) = labels.iter().find(|l| !distinct.insert(*l)) {
        return Err(Error::InvalidStrategic(format!(
            "profile label `{l}` is ambiguous; choose a separator"
        )));
    }
    let n = profiles.len();
    let pay: Vec<&Vec<Rational64>> = profiles.iter().map(|p| &sg.payoffs[p]).collect();
    let mut access = Vec::with_capacity(sg.players.len());
    let mut prefs = Vec::with_capacity(sg.players.len());
    for i in 0..sg.players.len() {
        let mut r = Relation::empty(n);
        let mut q = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                let others_agree = (0..sg.players.len())
                    .all(|k| k == i || profiles[a][k] == profiles[b][k]);
                if others_agree {
                    r.insert(a, b);
                }
                if pay[a][i] <= pay[b][i] {
                    q.insert(a, b);
                }
            }
        }
        access.push(r);
        prefs.push(q);
    }
    Game::assemble(sg.players.clone(), labels, access, prefs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::validate_game;
    use proptest::prelude::*;

    #[test]
    fn pd_relations_match_the_matrix() {
        let pd = from_strategic(&fixtures::pd_strategic()).unwrap();
        assert_eq!(pd.outcomes(), ["CC", "CD", "DC", "DD"]);
        let acc1: Vec<_> = pd.access(0).labeled_pairs(pd.outcomes());
        let non_loops: Vec<_> = acc1.iter().filter(|(a, b)| a != b).cloned().collect();
        assert_eq!(
            non_loops,
            [("CC", "DC"), ("CD", "DD"), ("DC", "CC"), ("DD", "CD")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );
        assert!(pd.accesses("2", "CC", "CD") && pd.accesses("2", "DC", "DD"));
        assert!(!pd.accesses("2", "CC", "DC"));
        let chain = ["CD", "DD", "CC", "DC"];
        for w in chain.windows(2) {
            assert!(pd.prefers_weakly("1", w[0], w[1]));
            assert!(!pd.prefers_weakly("1", w[1], w[0]));
        }
        assert!(validate_game(&pd.to_parts()).is_empty());
    }

    #[test]
    fn g1_ties_tl_and_dr() {
        let g1 = from_strategic(&fixtures::g1_strategic()).unwrap();
        for p in ["1", "2"] {
            assert!(g1.prefers_weakly(p, "TL", "DR"));
            assert!(g1.prefers_weakly(p, "DR", "TL"));
        }
    }

    #[test]
    fn one_player_one_action() {
        let sg = StrategicGame {
            players: vec!["1".into()],
            actions: BTreeMap::from([("1".into(), vec!["x".into()])]),
            payoffs: BTreeMap::from([(vec!["x".into()], vec![Rational64::from_integer(0)])]),
            separator: String::new(),
        };
        let g = from_strategic(&sg).unwrap();
        assert_eq!(g.outcomes(), ["x"]);
        assert_eq!(g.access(0).len(), 1);
        assert_eq!(g.prefs(0).len(), 1);
    }

    #[test]
    fn invalid_payoff_tables_are_rejected() {
        let mut sg = fixtures::pd_strategic();
        sg.payoffs.remove(&vec!["C".to_string(), "C".to_string()]);
        assert!(matches!(from_strategic(&sg), Err(Error::InvalidStrategic(_))));

        let mut sg = fixtures::pd_strategic();
        sg.payoffs
            .insert(vec!["C".into(), "C".into()], vec![Rational64::from_integer(1)]);
        assert!(matches!(from_strategic(&sg), Err(Error::InvalidStrategic(_))));
    }

    #[test]
    fn ambiguous_labels_need_a_separator() {
        let mut sg = StrategicGame::bimatrix(&["a", "ab"], &["bc", "c"], &[&[(0, 0), (0, 0)], &[(0, 0), (0, 0)]]);
        assert!(from_strategic(&sg).is_err());
        sg.separator = ",".into();
        let g = from_strategic(&sg).unwrap();
        assert!(g.outcome_index("a,bc").is_some());
    }

    fn arb_strategic() -> impl Strategy<Value = StrategicGame> {
        proptest::collection::vec(1usize..=3, 0..=3).prop_flat_map(|sizes| {
            let cells: usize = sizes.iter().product();
            let k = sizes.len();
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, k), cells).prop_map(
                move |pays| {
                    let players: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
                    let actions: BTreeMap<String, Vec<String>> = players
                        .iter()
                        .zip(&sizes)
                        .map(|(p, &n)| {
                            (p.clone(), (0..n).map(|a| format!("{p}{a}")).collect())
                        })
                        .collect();
                    let mut sg = StrategicGame {
                        players,
                        actions,
                        payoffs: BTreeMap::new(),
                        separator: ".".into(),
                    };
                    let profiles = sg.profiles().unwrap();
                    for (prof, v) in profiles.into_iter().zip(&pays) {
                        sg.payoffs.insert(
                            prof,
                            v.iter().map(|&x| Rational64::new(x, 2)).collect(),
                        );
                    }
                    sg
                },
            )
        })
    }

    proptest! {
        #[test]
        fn conversion_always_validates(sg in arb_strategic()) {
            let g = from_strategic(&sg).unwrap();
            prop_assert!(validate_game(&g.to_parts()).is_empty());
            for i in 0..g.players().len() {
                let q = g.prefs(i);
                for a in 0..g.outcomes().len() {
                    for b in 0..g.outcomes().len() {
                        prop_assert!(q.contains(a, b) || q.contains(b, a));
                    }
                }
            }
        }
    }
}
