//! Exhaustive enumeration of morphisms between two finite games.
//!
//! Candidates are visited in lexicographic order of `(player map, outcome
//! map)`, both read as index tuples over the sorted carriers. The outcome map
//! is built by backtracking: outcome `k` is assigned only once every related
//! pair among outcomes `0..=k` maps to a related pair.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::game::{Game, RelationKind};
use crate::morphism::{GamI, Morphism};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Candidate budget: `HOM_BUDGET` if set to a positive integer, otherwise
/// [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var("HOM_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(DEFAULT_BUDGET)
}

/// `base^exp`, saturating at `u128::MAX`. `0^0 = 1`.
fn power(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Number of total map pairs from `g` to `h`.
pub fn candidate_count(g: &Game, h: &Game) -> u128 {
    power(h.players().len(), g.players().len())
        .saturating_mul(power(h.outcomes().len(), g.outcomes().len()))
}

/// Number of total outcome maps from `g` to `h`.
pub fn outcome_candidate_count(g: &Game, h: &Game) -> u128 {
    power(h.outcomes().len(), g.outcomes().len())
}

fn within(candidates: u128, budget: u64) -> Result<()> {
    if candidates > budget as u128 {
        Err(Error::BudgetExceeded { candidates, budget })
    } else {
        Ok(())
    }
}

/// Related source pairs `(player, kind, a, b)` grouped by `max(a, b)`.
struct Constraints {
    by_outcome: Vec<Vec<(usize, RelationKind, usize, usize)>>,
}

impl Constraints {
    fn of(g: &Game) -> Constraints {
        let mut by_outcome = vec![Vec::new(); g.outcomes().len()];
        for i in 0..g.players().len() {
            for kind in [RelationKind::Access, RelationKind::Prefs] {
                for (a, b) in g.relation(i, kind).pairs() {
                    by_outcome[a.max(b)].push((i, kind, a, b));
                }
            }
        }
        Constraints { by_outcome }
    }
}

/// All outcome maps valid under `player_map`, lexicographically ordered.
fn outcome_maps(g: &Game, h: &Game, player_map: &[usize], cons: &Constraints) -> Vec<Vec<usize>> {
    let n = g.outcomes().len();
    let m = h.outcomes().len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    if m == 0 {
        return out;
    }
    let ok = |rho: &[usize], k: usize| {
        cons.by_outcome[k].iter().all(|&(i, kind, a, b)| {
            h.relation(player_map[i], kind).contains(rho[a], rho[b])
        })
    };
    let mut rho = vec![0usize; n];
    let mut k = 0usize;
    // depth-first odometer: rho[..k] is consistent, rho[k] is the next try
    loop {
        if rho[k] < m && ok(&rho, k) {
            if k + 1 == n {
                out.push(rho.clone());
                rho[k] += 1;
            } else {
                k += 1;
                rho[k] = 0;
            }
            continue;
        }
        if rho[k] < m {
            rho[k] += 1;
            continue;
        }
        if k == 0 {
            break;
        }
        k -= 1;
        rho[k] += 1;
    }
    out
}

/// Every total map `0..len → 0..base`, lexicographically.
fn all_maps(len: usize, base: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > 0 && base == 0 {
        return out;
    }
    let mut cur = vec![0usize; len];
    loop {
        out.push(cur.clone());
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < base {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// All morphisms `g → h` in the category of games with varying players.
pub fn enumerate_hom(g: &Arc<Game>, h: &Arc<Game>) -> Result<Vec<Morphism>> {
    enumerate_hom_with_budget(g, h, default_budget())
}

pub fn enumerate_hom_with_budget(g: &Arc<Game>, h: &Arc<Game>, budget: u64) -> Result<Vec<Morphism>> {
    within(candidate_count(g, h), budget)?;
    let cons = Constraints::of(g);
    let mut out = Vec::new();
    for pm in all_maps(g.players().len(), h.players().len()) {
        for om in outcome_maps(g, h, &pm, &cons) {
            out.push(Morphism::from_indices_unchecked(g.clone(), h.clone(), pm.clone(), om));
        }
    }
    Ok(out)
}

/// All morphisms `g → h` whose player component is `player_map`.
pub fn enumerate_hom_over(
    g: &Arc<Game>,
    h: &Arc<Game>,
    player_map: &[usize],
    budget: u64,
) -> Result<Vec<Morphism>> {
    if player_map.len() != g.players().len() || player_map.iter().any(|&j| j >= h.players().len()) {
        return Err(Error::MalformedMorphism("player map does not fit the games".into()));
    }
    within(outcome_candidate_count(g, h), budget)?;
    let cons = Constraints::of(g);
    Ok(outcome_maps(g, h, player_map, &cons)
        .into_iter()
        .map(|om| Morphism::from_indices_unchecked(g.clone(), h.clone(), player_map.to_vec(), om))
        .collect())
}

/// All morphisms `g → h` between games over one shared player list.
pub fn enumerate_hom_fixed(g: &Arc<Game>, h: &Arc<Game>) -> Result<Vec<Morphism>> {
    enumerate_hom_fixed_with_budget(g, h, default_budget())
}

pub fn enumerate_hom_fixed_with_budget(g: &Arc<Game>, h: &Arc<Game>, budget: u64) -> Result<Vec<Morphism>> {
    let cat = GamI::common(&[&**g, &**h])?;
    let ids: Vec<usize> = (0..cat.players().len()).collect();
    enumerate_hom_over(g, h, &ids, budget)
}

/// Reference enumeration: every candidate pair, filtered by the full
/// preservation check, with no pruning.
pub fn enumerate_hom_naive(g: &Arc<Game>, h: &Arc<Game>, budget: u64) -> Result<Vec<Morphism>> {
    within(candidate_count(g, h), budget)?;
    let mut out = Vec::new();
    for pm in all_maps(g.players().len(), h.players().len()) {
        for om in all_maps(g.outcomes().len(), h.outcomes().len()) {
            let m = Morphism::from_indices_unchecked(g.clone(), h.clone(), pm.clone(), om);
            if m.is_valid() {
                out.push(m);
            }
        }
    }
    Ok(out)
}
