use std::sync::Arc;

use serde_json::json;

use super::{fail, hom, hom_fixed, maps, Ctx, Verdict};
use crate::constructions::terminal_fixed;
use crate::error::Result;
use crate::game::{identify_outcomes_indexed, Game, OutcomeClass};
use crate::hom::{default_budget, enumerate_hom_naive};
use crate::io::StrategicDocument;
use crate::morphism::{classify_morphism, compose, Morphism};
use crate::relation::Relation;
use crate::strategic::from_strategic;
use crate::verify::generate::{draw_strategic, outcome_label, Shape};

/// Closure by repeated saturation, independent of the library's closures.
fn saturate(r: &Relation, symmetric: bool, transitive: bool) -> Relation {
    let n = r.carrier_len();
    let mut out = r.clone();
    for a in 0..n {
        out.insert(a, a);
    }
    loop {
        let mut grown = out.clone();
        for (a, b) in out.pairs() {
            if symmetric {
                grown.insert(b, a);
            }
            if transitive {
                for c in 0..n {
                    if out.contains(b, c) {
                        grown.insert(a, c);
                    }
                }
            }
        }
        if grown == out {
            return out;
        }
        out = grown;
    }
}

pub(super) fn closure_idempotence(ctx: &mut Ctx) -> Result<Verdict> {
    let n = ctx.rng.below(ctx.params.max_outcomes + 1);
    let mut raw = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if ctx.rng.chance(ctx.params.access_density) {
                raw.insert(a, b);
            }
        }
    }
    let outcomes: Vec<String> = (0..n).map(outcome_label).collect();
    ctx.record("outcomes", json!(outcomes));
    ctx.record("pairs", json!(raw.labeled_pairs(&outcomes)));

    let access = raw.reflexive_symmetric_closure();
    let prefs = raw.reflexive_transitive_closure();
    let checks = [
        ("access closure is idempotent", access.reflexive_symmetric_closure() == access),
        ("access closure is least", access == saturate(&raw, true, false)),
        ("preference closure is idempotent", prefs.reflexive_transitive_closure() == prefs),
        ("preference closure is least", prefs == saturate(&raw, false, true)),
        ("access closure is extensive", raw.is_subset(&access)),
        ("preference closure is extensive", raw.is_subset(&prefs)),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        Some((what, _)) => fail(format!("not: {what}"), what),
        None => Ok(Verdict::Pass),
    }
}

pub(super) fn from_strategic_valid(ctx: &mut Ctx) -> Result<Verdict> {
    let sg = draw_strategic(&mut ctx.rng, ctx.params);
    ctx.record(
        "strategic",
        serde_json::to_value(StrategicDocument::from_strategic(&sg)).expect("documents serialize"),
    );
    let g = from_strategic(&sg)?;
    let v = g.violations();
    if !v.is_empty() {
        return fail(v.iter().map(ToString::to_string).collect::<Vec<_>>(), "no violations");
    }
    let n = g.outcomes().len();
    for i in 0..g.players().len() {
        let total = (0..n).all(|a| (0..n).all(|b| g.prefs(i).contains(a, b) || g.prefs(i).contains(b, a)));
        if !total {
            return fail(format!("preferences of `{}` are not total", g.players()[i]), "total preferences");
        }
    }
    Ok(Verdict::Pass)
}

/// Membership by the pruned enumerator against the naive filter, in both
/// categories, plus one random candidate.
pub(super) fn hom_membership(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let h = ctx.game("h", Shape::ANY);
    let pruned = hom(&g, &h)?;
    let naive = enumerate_hom_naive(&g, &h, default_budget())?;
    if pruned != naive {
        return fail(
            json!({"pruned": pruned.len(), "naive": naive.len()}),
            "identical sequences",
        );
    }
    if let Some(m) = pruned.iter().find(|m| !m.is_valid()) {
        return fail(crate::io::maps_value(m), "every enumerated map passes check_morphism");
    }
    let drawable = (g.outcomes().is_empty() || !h.outcomes().is_empty())
        && (g.players().is_empty() || !h.players().is_empty());
    if drawable {
        let pm: Vec<usize> = (0..g.players().len()).map(|_| ctx.rng.below(h.players().len())).collect();
        let om: Vec<usize> = (0..g.outcomes().len()).map(|_| ctx.rng.below(h.outcomes().len())).collect();
        let c = Morphism::from_indices(g.clone(), h.clone(), pm, om)?;
        ctx.record_morphism("candidate", &c, "g", "h");
        let member = pruned.contains(&c);
        if member != c.is_valid() {
            return fail(json!({"in_hom": member}), json!({"in_hom": c.is_valid()}));
        }
    }

    let n = ctx.shared_players(0);
    let gi = ctx.game("g_fixed", Shape::with_players(n));
    let hi = ctx.game("h_fixed", Shape::with_players(n));
    let fixed = hom_fixed(&gi, &hi)?;
    let filtered: Vec<Morphism> = enumerate_hom_naive(&gi, &hi, default_budget())?
        .into_iter()
        .filter(Morphism::is_fixed_players)
        .collect();
    if fixed != filtered {
        return fail(
            json!({"fixed": fixed.len(), "naive_fixed": filtered.len()}),
            "identical sequences",
        );
    }
    Ok(Verdict::Pass)
}

pub(super) fn composition_closure(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let h = ctx.game("h", Shape::ANY);
    let k = ctx.game("k", Shape::ANY);
    let gh = hom(&g, &h)?;
    let hk = hom(&h, &k)?;
    for f in &gh {
        let left = compose(&Morphism::identity(g.clone()), f)?;
        let right = compose(f, &Morphism::identity(h.clone()))?;
        if maps(&left) != maps(f) || maps(&right) != maps(f) {
            ctx.record_morphism("f", f, "g", "h");
            return fail("identity is not a unit", "f ∘ id = id ∘ f = f");
        }
        for f2 in &hk {
            let c = compose(f, f2)?;
            if !c.is_valid() {
                ctx.record_morphism("f", f, "g", "h");
                ctx.record_morphism("f2", f2, "h", "k");
                return fail(
                    c.violations().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "composite passes check_morphism",
                );
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Two outcomes, every relation full: any outcome map into it is a
/// morphism, so it separates distinct maps.
fn probe(players: &[String]) -> Game {
    let n = players.len();
    Game::assemble(
        players.to_vec(),
        vec!["0".into(), "1".into()],
        vec![Relation::full(2); n],
        vec![Relation::full(2); n],
    )
    .expect("probe labels are distinct")
}

fn cancels_left(tests: &[Morphism], m: &Morphism) -> Result<bool> {
    // x ∘ m = y ∘ m forces x = y
    let images = tests.iter().map(|x| compose(m, x).map(|c| maps(&c))).collect::<Result<Vec<_>>>()?;
    Ok(distinct(&images))
}

fn cancels_right(tests: &[Morphism], m: &Morphism) -> Result<bool> {
    // m ∘ x = m ∘ y forces x = y
    let images = tests.iter().map(|x| compose(x, m).map(|c| maps(&c))).collect::<Result<Vec<_>>>()?;
    Ok(distinct(&images))
}

fn distinct<T: Ord + Clone>(items: &[T]) -> bool {
    let mut sorted = items.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

pub(super) fn monic_epic_oracle(ctx: &mut Ctx) -> Result<Verdict> {
    let n = ctx.shared_players(0);
    let g = ctx.game("g", Shape::with_players(n));
    let h = ctx.game("h", Shape::with_players(n));
    let point = Arc::new(terminal_fixed(g.players())?);
    let points = hom_fixed(&point, &g)?;
    let p = Arc::new(probe(h.players()));
    let probes = hom_fixed(&h, &p)?;
    let back = hom_fixed(&h, &g)?;
    for m in hom_fixed(&g, &h)? {
        let c = classify_morphism(&m)?;
        let monic = cancels_right(&points, &m)?;
        let epic = cancels_left(&probes, &m)?;
        let mut iso = false;
        for inv in &back {
            let there = compose(&m, inv)?;
            let back_again = compose(inv, &m)?;
            if maps(&there) == maps(&Morphism::identity(g.clone()))
                && maps(&back_again) == maps(&Morphism::identity(h.clone()))
            {
                iso = true;
                break;
            }
        }
        if (c.monic, c.epic, c.iso) != (monic, epic, iso) {
            ctx.record_morphism("m", &m, "g", "h");
            return fail(c, json!({"monic": monic, "epic": epic, "iso": iso}));
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn identify_singleton_iso(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let classes: Vec<OutcomeClass> = g.outcomes().iter().map(|o| OutcomeClass::new(&[o])).collect();
    let (q, map) = identify_outcomes_indexed(&g, &classes)?;
    if q != *g {
        return fail("quotient differs from the game", "the same game");
    }
    let ids = (0..g.players().len()).collect();
    let m = Morphism::from_indices(g.clone(), Arc::new(q), ids, map)?;
    let c = classify_morphism(&m)?;
    if !c.iso {
        return fail(c, json!({"monic": true, "epic": true, "iso": true}));
    }
    Ok(Verdict::Pass)
}
