//! Seeded property checking of every law against brute-force oracles.
//!
//! Trial `k` of a run seeded with `s` draws from `SplitMix64(s + k)`, so any
//! failure replays from its recorded seed. Trials run in parallel and are
//! reported in trial order; reports carry no timing and are byte-identical
//! across runs.

pub mod generate;
mod laws;
pub mod rng;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

pub use generate::{draw_game, random_game, GenParams, Shape};
pub use laws::{find_law, Ctx, Law, Verdict, CATALOG};
pub use rng::SplitMix64;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub seed: u64,
    /// Every input drawn before the failure, as replayable documents.
    pub inputs: Value,
    pub observed: Value,
    pub expected: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub params: GenParams,
    pub trials: u64,
    /// Trials abandoned because a Hom enumeration exceeded its budget.
    pub skipped: u64,
    pub passed: u64,
    pub failures: Vec<Failure>,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        crate::io::canonical_json(self)
    }
}

enum Outcome {
    Passed,
    Skipped,
    Failed(Failure),
}

fn run_one(law: &Law, params: &GenParams, trial: u64) -> Outcome {
    let mut ctx = Ctx::new(params, trial);
    let verdict = law.run(&mut ctx);
    let seed = params.seed.wrapping_add(trial);
    let failure = |ctx: Ctx, observed: Value, expected: Value| Failure {
        trial,
        seed,
        inputs: ctx.into_inputs(),
        observed,
        expected,
    };
    match verdict {
        Ok(Verdict::Pass) => Outcome::Passed,
        Ok(Verdict::Fail { observed, expected }) => Outcome::Failed(failure(ctx, observed, expected)),
        Err(Error::BudgetExceeded { .. }) => Outcome::Skipped,
        Err(e) => Outcome::Failed(failure(
            ctx,
            serde_json::json!({ "error": e.to_string() }),
            Value::String("no error".into()),
        )),
    }
}

/// Runs `trials` trials of the named law.
pub fn check_law(name: &str, params: &GenParams, trials: u64) -> Result<LawReport> {
    let law = find_law(name).ok_or_else(|| Error::UnknownLaw(name.to_string()))?;
    let outcomes: Vec<Outcome> = (0..trials)
        .into_par_iter()
        .map(|k| run_one(law, params, k))
        .collect();
    let mut report = LawReport {
        law: name.to_string(),
        params: params.clone(),
        trials,
        skipped: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Passed => report.passed += 1,
            Outcome::Skipped => report.skipped += 1,
            Outcome::Failed(f) => report.failures.push(f),
        }
    }
    Ok(report)
}

/// Replays a single trial, for inspecting a reported failure.
pub fn replay(name: &str, params: &GenParams, trial: u64) -> Result<Option<Failure>> {
    let law = find_law(name).ok_or_else(|| Error::UnknownLaw(name.to_string()))?;
    Ok(match run_one(law, params, trial) {
        Outcome::Failed(f) => Some(f),
        Outcome::Passed | Outcome::Skipped => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(seed: u64) -> GenParams {
        GenParams {
            seed,
            ..GenParams::default()
        }
    }

    #[test]
    fn law_names_are_unique() {
        let mut names: Vec<&str> = CATALOG.iter().map(|l| l.name).collect();
        names.sort();
        let n = names.len();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn unknown_law_is_an_error() {
        assert!(matches!(check_law("nope", &params(0), 1), Err(Error::UnknownLaw(_))));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = check_law("product_ne", &params(3), 10).unwrap();
        let b = check_law("product_ne", &params(3), 10).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.passed + a.skipped + a.failures.len() as u64, 10);
    }

    #[test]
    fn counterexample_is_trial_zero() {
        let r = check_law("morphisms_preserve_ne", &params(0), 3).unwrap();
        let first = &r.failures[0];
        assert_eq!(first.trial, 0);
        let g: crate::io::GameDocument = serde_json::from_value(first.inputs["g"].clone()).unwrap();
        assert_eq!(g.to_game().unwrap(), crate::fixtures::counterexample_source());
    }

    #[test]
    fn failures_replay() {
        let r = check_law("morphisms_preserve_ne", &params(21), 20).unwrap();
        for f in &r.failures {
            assert_eq!(replay("morphisms_preserve_ne", &params(21), f.trial).unwrap().as_ref(), Some(f));
        }
    }
}
