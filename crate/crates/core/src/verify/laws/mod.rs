//! The law catalog. Each law draws its inputs from a seeded generator and
//! compares an implementation against a brute-force oracle or a stated
//! property, returning a verdict for one trial.

mod constructions;
mod game_core;
mod equilibria;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

use super::generate::{draw_game, GenParams, Shape};
use super::rng::SplitMix64;
use crate::error::Result;
use crate::game::Game;
use crate::hom::{default_budget, enumerate_hom_fixed_with_budget, enumerate_hom_with_budget};
use crate::io::GameDocument;
use crate::morphism::Morphism;

/// Outcome of one trial. Errors other than a budget overrun become
/// failures in the report.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail { observed: Value, expected: Value },
}

pub(crate) fn fail(observed: impl Serialize, expected: impl Serialize) -> Result<Verdict> {
    Ok(Verdict::Fail {
        observed: serde_json::to_value(observed).expect("verdict values serialize"),
        expected: serde_json::to_value(expected).expect("verdict values serialize"),
    })
}

/// Per-trial state: the generator and the inputs recorded so far, which a
/// failure reports for replay.
pub struct Ctx<'a> {
    pub rng: SplitMix64,
    pub params: &'a GenParams,
    pub trial: u64,
    inputs: BTreeMap<String, Value>,
}

impl<'a> Ctx<'a> {
    pub fn new(params: &'a GenParams, trial: u64) -> Ctx<'a> {
        Ctx {
            rng: SplitMix64::new(params.seed.wrapping_add(trial)),
            params,
            trial,
            inputs: BTreeMap::new(),
        }
    }

    pub fn into_inputs(self) -> Value {
        Value::Object(self.inputs.into_iter().collect())
    }

    pub(crate) fn record(&mut self, name: &str, value: Value) {
        self.inputs.insert(name.to_string(), value);
    }

    pub(crate) fn record_game(&mut self, name: &str, g: &Game) {
        self.record(name, GameDocument::from_game(g).to_value());
    }

    /// Records the maps of `m` together with the names of its recorded
    /// endpoints.
    pub(crate) fn record_morphism(&mut self, name: &str, m: &Morphism, source: &str, target: &str) {
        let mut v = crate::io::maps_value(m);
        v["source"] = source.into();
        v["target"] = target.into();
        self.record(name, v);
    }

    /// Draws a game and records it as `name`.
    pub(crate) fn game(&mut self, name: &str, shape: Shape) -> Arc<Game> {
        let g = draw_game(&mut self.rng, self.params, shape);
        self.record_game(name, &g);
        Arc::new(g)
    }

    /// A player count for games that must share their players.
    pub(crate) fn shared_players(&mut self, min: usize) -> usize {
        let max = self.params.max_players.max(min);
        min + self.rng.below(max - min + 1)
    }

    pub(crate) fn pick<'b, T>(&mut self, items: &'b [T]) -> Option<&'b T> {
        self.rng.pick(items)
    }
}

pub(crate) fn hom(g: &Arc<Game>, h: &Arc<Game>) -> Result<Vec<Morphism>> {
    enumerate_hom_with_budget(g, h, default_budget())
}

pub(crate) fn hom_fixed(g: &Arc<Game>, h: &Arc<Game>) -> Result<Vec<Morphism>> {
    enumerate_hom_fixed_with_budget(g, h, default_budget())
}

/// Index maps of a morphism, for cheap comparison when the endpoints are
/// known to agree.
pub(crate) fn maps(m: &Morphism) -> (Vec<usize>, Vec<usize>) {
    (m.player_map().to_vec(), m.outcome_map().to_vec())
}

type Run = fn(&mut Ctx) -> Result<Verdict>;

pub struct Law {
    pub name: &'static str,
    /// `game_core`, `constructions` or `equilibria`.
    pub module: &'static str,
    pub statement: &'static str,
    run: Run,
}

impl Law {
    pub fn run(&self, ctx: &mut Ctx) -> Result<Verdict> {
        (self.run)(ctx)
    }
}

macro_rules! law {
    ($module:literal, $name:ident, $statement:literal) => {
        Law {
            name: stringify!($name),
            module: $module,
            statement: $statement,
            run: $name,
        }
    };
}

use self::constructions::*;
use self::game_core::*;
use self::equilibria::*;

pub static CATALOG: &[Law] = &[
    law!("game_core", closure_idempotence, "closures are idempotent, extensive and least"),
    law!("game_core", from_strategic_valid, "multigraph forms of strategic games are valid with total preferences"),
    law!("game_core", hom_membership, "pruned Hom enumeration equals the naive filter and agrees with check_morphism"),
    law!("game_core", composition_closure, "composites of morphisms are morphisms and identities are units"),
    law!("game_core", monic_epic_oracle, "monic, epic and iso agree with cancellation against probe games"),
    law!("game_core", identify_singleton_iso, "identifying singleton classes is an isomorphism"),
    law!("constructions", constructions_valid, "every construction yields a valid game with valid legs"),
    law!("constructions", exponential_eval_valid, "eval out of the varying-player exponential is a morphism"),
    law!("constructions", exponential_eval_valid_fixed, "eval out of the fixed-player exponential is a morphism"),
    law!("constructions", product_universal, "each pair of legs factors uniquely through the product"),
    law!("constructions", product_universal_fixed, "each pair of legs factors uniquely through the fixed-player product"),
    law!("constructions", coproduct_universal, "each pair of legs factors uniquely through the coproduct"),
    law!("constructions", coproduct_universal_fixed, "each pair of legs factors uniquely through the fixed-player coproduct"),
    law!("constructions", equalizer_universal, "each equalizing morphism factors uniquely through the equalizer"),
    law!("constructions", equalizer_universal_fixed, "each equalizing fixed-player morphism factors uniquely"),
    law!("constructions", coequalizer_universal, "each coequalizing morphism factors uniquely through the coequalizer"),
    law!("constructions", coequalizer_universal_fixed, "each coequalizing fixed-player morphism factors uniquely"),
    law!("constructions", coequalizer_commutes, "the quotient coequalizes the pair"),
    law!("constructions", pushout_commutes, "the pushout square along the shared players commutes"),
    law!("constructions", pushout_universal, "each pair agreeing on shared players factors uniquely through the pushout"),
    law!("constructions", exponential_relations, "exponential access is reflexive and symmetric and preferences are preorders"),
    law!("constructions", exponential_curry_bijection, "curry and uncurry are inverse bijections with varying players"),
    law!("constructions", exponential_curry_bijection_fixed, "curry and uncurry are inverse bijections over fixed players"),
    law!("constructions", constant_embedding_valid, "the constant embedding into a power with a nonempty exponent is a morphism"),
    law!("equilibria", nash_implies_weak, "every Nash equilibrium is a weak Nash equilibrium"),
    law!("equilibria", phi_ne_fixed_point, "the Nash subgame consists of equilibria only and is fixed by another pass"),
    law!("equilibria", product_ne, "product outcomes are equilibria iff both components are"),
    law!("equilibria", product_ne_fixed, "fixed-player product outcomes are equilibria iff both components are"),
    law!("equilibria", coproduct_ne, "injections preserve and reflect equilibria"),
    law!("equilibria", coproduct_ne_fixed, "fixed-player injections preserve and reflect equilibria"),
    law!("equilibria", exponential_ne, "a constant map is an equilibrium iff its value is"),
    law!("equilibria", exponential_ne_fixed, "a constant map is an equilibrium iff its value is, over fixed players"),
    law!("equilibria", pushout_ne, "pushout injections preserve and reflect equilibria"),
    law!("equilibria", lemma_nash_soundness, "surjective morphisms reflecting access preserve equilibria"),
    law!("equilibria", gam_ne_composition, "composites of equilibrium-preserving morphisms preserve equilibria"),
    law!("equilibria", product_wne, "product outcomes are weak equilibria iff both components are"),
    law!("equilibria", coproduct_wne, "injections preserve and reflect weak equilibria"),
    law!("equilibria", exponential_wne, "a constant map is a weak equilibrium iff its value is"),
    law!("equilibria", pushout_wne, "pushout injections preserve and reflect weak equilibria"),
    law!("equilibria", morphisms_preserve_ne, "every morphism preserves equilibria (false; trial 0 is a counterexample)"),
];

pub fn find_law(name: &str) -> Option<&'static Law> {
    CATALOG.iter().find(|l| l.name == name)
}
