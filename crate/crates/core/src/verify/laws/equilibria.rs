use std::sync::Arc;

use serde_json::json;

use super::{fail, hom, Ctx, Verdict};
use crate::constructions::{coproduct, coproduct_fixed, exponential, exponential_fixed, product, product_fixed, pushout_shared_players};
use crate::equilibria::{
    is_nash_at, is_ne_object, is_weak_nash_at, lemma_nash_check, nash_equilibria, phi_ne, preserves_ne_unchecked,
    weak_nash_equilibria,
};
use crate::error::Result;
use crate::fixtures;
use crate::game::Game;
use crate::morphism::{compose, Morphism};
use crate::verify::generate::Shape;

/// Nash or weak Nash, chosen per law.
type Solution = fn(&Game, usize) -> bool;

const NONEMPTY_PLAYERS: Shape = Shape {
    min_players: 1,
    min_outcomes: 0,
    players: None,
};

pub(super) fn nash_implies_weak(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let weak = weak_nash_equilibria(&g);
    match nash_equilibria(&g).into_iter().find(|o| !weak.contains(o)) {
        Some(o) => fail(
            json!({"outcome": g.outcomes()[o], "weak": false}),
            json!({"outcome": g.outcomes()[o], "weak": true}),
        ),
        None => Ok(Verdict::Pass),
    }
}

pub(super) fn phi_ne_fixed_point(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let sub = phi_ne(&g);
    if !is_ne_object(&sub.game) {
        return fail("the Nash subgame has a non-equilibrium outcome", "only equilibria");
    }
    let again = phi_ne(&Arc::new(sub.game.clone()));
    if again.selected.len() != sub.game.outcomes().len() {
        return fail(
            json!({"selected": again.selected_labels()}),
            json!({"selected": sub.game.outcomes()}),
        );
    }
    Ok(Verdict::Pass)
}

/// `solution` holds at an outcome of `leg`'s source iff it holds at its
/// image.
fn reflects_and_preserves(leg: &Morphism, solution: Solution, what: &str) -> Result<Verdict> {
    let (s, t) = (leg.source(), leg.target());
    for o in 0..s.outcomes().len() {
        let (before, after) = (solution(s, o), solution(t, leg.map_outcome(o)));
        if before != after {
            return fail(
                json!({"side": what, "outcome": s.outcomes()[o], "in_image": after}),
                json!({"side": what, "outcome": s.outcomes()[o], "in_image": before}),
            );
        }
    }
    Ok(Verdict::Pass)
}

fn both_legs(c: &crate::constructions::ConstructedGame, solution: Solution) -> Result<Verdict> {
    match reflects_and_preserves(c.leg("inj0")?, solution, "g")? {
        Verdict::Pass => reflects_and_preserves(c.leg("inj1")?, solution, "h"),
        failed => Ok(failed),
    }
}

/// Product players need a partner on the other side to project a
/// deviation, so both factors have at least one player.
fn product_solution(ctx: &mut Ctx, fixed: bool, solution: Solution) -> Result<Verdict> {
    let (g, h, prod) = if fixed {
        let n = ctx.shared_players(1);
        let g = ctx.game("g", Shape::with_players(n));
        let h = ctx.game("h", Shape::with_players(n));
        let p = product_fixed(&[g.clone(), h.clone()])?;
        (g, h, p)
    } else {
        let g = ctx.game("g", NONEMPTY_PLAYERS);
        let h = ctx.game("h", NONEMPTY_PLAYERS);
        let p = product(&[g.clone(), h.clone()])?;
        (g, h, p)
    };
    let (p0, p1) = (prod.leg("proj0")?, prod.leg("proj1")?);
    for k in 0..prod.game.outcomes().len() {
        let (a, b) = (p0.map_outcome(k), p1.map_outcome(k));
        let expected = solution(&g, a) && solution(&h, b);
        if solution(&prod.game, k) != expected {
            return fail(
                json!({"outcome": prod.game.outcomes()[k], "in_product": !expected}),
                json!({"outcome": prod.game.outcomes()[k], "in_product": expected}),
            );
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn product_ne(ctx: &mut Ctx) -> Result<Verdict> {
    product_solution(ctx, false, is_nash_at)
}

pub(super) fn product_ne_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    product_solution(ctx, true, is_nash_at)
}

pub(super) fn product_wne(ctx: &mut Ctx) -> Result<Verdict> {
    product_solution(ctx, false, is_weak_nash_at)
}

fn coproduct_solution(ctx: &mut Ctx, fixed: bool, solution: Solution) -> Result<Verdict> {
    let co = if fixed {
        let n = ctx.shared_players(0);
        let g = ctx.game("g", Shape::with_players(n));
        let h = ctx.game("h", Shape::with_players(n));
        coproduct_fixed(&[g, h])?
    } else {
        let g = ctx.game("g", Shape::ANY);
        let h = ctx.game("h", Shape::ANY);
        coproduct(&[g, h])?
    };
    both_legs(&co, solution)
}

pub(super) fn coproduct_ne(ctx: &mut Ctx) -> Result<Verdict> {
    coproduct_solution(ctx, false, is_nash_at)
}

pub(super) fn coproduct_ne_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    coproduct_solution(ctx, true, is_nash_at)
}

pub(super) fn coproduct_wne(ctx: &mut Ctx) -> Result<Verdict> {
    coproduct_solution(ctx, false, is_weak_nash_at)
}

/// The exponent has an outcome, so constant maps are told apart by their
/// value. With varying players the exponent also has a player and the base
/// has one, so some constant player map exists.
fn exponential_solution(ctx: &mut Ctx, fixed: bool, solution: Solution) -> Result<Verdict> {
    let (h, e) = if fixed {
        let n = ctx.shared_players(0);
        let g = ctx.game("g", Shape { min_outcomes: 1, players: Some(n), ..Shape::ANY });
        let h = ctx.game("h", Shape::with_players(n));
        let e = exponential_fixed(&g, &h)?;
        (h, e)
    } else {
        let g = ctx.game("g", Shape { min_players: 1, min_outcomes: 1, players: None });
        let h = ctx.game("h", NONEMPTY_PLAYERS);
        let e = exponential(&g, &h)?;
        (h, e)
    };
    for o in 0..h.outcomes().len() {
        let Some(c) = e.constant_outcome(o) else {
            return fail(
                json!({"value": h.outcomes()[o], "constant": null}),
                "the constant map is an outcome of the power",
            );
        };
        let (before, after) = (solution(&h, o), solution(&e.game, c));
        if before != after {
            return fail(
                json!({"value": h.outcomes()[o], "constant_is_solution": after}),
                json!({"value": h.outcomes()[o], "constant_is_solution": before}),
            );
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn exponential_ne(ctx: &mut Ctx) -> Result<Verdict> {
    exponential_solution(ctx, false, is_nash_at)
}

pub(super) fn exponential_ne_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    exponential_solution(ctx, true, is_nash_at)
}

pub(super) fn exponential_wne(ctx: &mut Ctx) -> Result<Verdict> {
    exponential_solution(ctx, false, is_weak_nash_at)
}

fn pushout_solution(ctx: &mut Ctx, solution: Solution) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let h = ctx.game("h", Shape::ANY);
    both_legs(&pushout_shared_players(&g, &h)?, solution)
}

pub(super) fn pushout_ne(ctx: &mut Ctx) -> Result<Verdict> {
    pushout_solution(ctx, is_nash_at)
}

pub(super) fn pushout_wne(ctx: &mut Ctx) -> Result<Verdict> {
    pushout_solution(ctx, is_weak_nash_at)
}

/// Morphisms `g → h` and the endomorphisms of `g`, which include the
/// identity and so always give the hypotheses a chance to hold.
pub(super) fn lemma_nash_soundness(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let h = ctx.game("h", Shape::ANY);
    for (target, ms) in [("h", hom(&g, &h)?), ("g", hom(&g, &g)?)] {
        for m in ms {
            if lemma_nash_check(&m).applies && !preserves_ne_unchecked(&m) {
                ctx.record_morphism("m", &m, "g", target);
                return fail(json!({"preserves_ne": false}), json!({"preserves_ne": true}));
            }
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn gam_ne_composition(ctx: &mut Ctx) -> Result<Verdict> {
    let g = ctx.game("g", Shape::ANY);
    let h = ctx.game("h", Shape::ANY);
    let k = ctx.game("k", Shape::ANY);
    let gh: Vec<Morphism> = hom(&g, &h)?.into_iter().filter(preserves_ne_unchecked).collect();
    let hk: Vec<Morphism> = hom(&h, &k)?.into_iter().filter(preserves_ne_unchecked).collect();
    for f in &gh {
        for f2 in &hk {
            let c = compose(f, f2)?;
            if !preserves_ne_unchecked(&c) {
                ctx.record_morphism("f", f, "g", "h");
                ctx.record_morphism("f2", f2, "h", "k");
                return fail(json!({"preserves_ne": false}), json!({"preserves_ne": true}));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// A negative control: trial 0 checks the known counterexample, later
/// trials every morphism between random games.
pub(super) fn morphisms_preserve_ne(ctx: &mut Ctx) -> Result<Verdict> {
    let ms = if ctx.trial == 0 {
        let m = fixtures::counterexample_morphism();
        ctx.record_game("g", m.source());
        ctx.record_game("h", m.target());
        vec![m]
    } else {
        let g = ctx.game("g", Shape::ANY);
        let h = ctx.game("h", Shape::ANY);
        hom(&g, &h)?
    };
    for m in ms {
        if !preserves_ne_unchecked(&m) {
            let lost: Vec<&String> = nash_equilibria(m.source())
                .into_iter()
                .filter(|&o| !is_nash_at(m.target(), m.map_outcome(o)))
                .map(|o| &m.source().outcomes()[o])
                .collect();
            ctx.record_morphism("m", &m, "g", "h");
            return fail(json!({"lost_equilibria": lost}), json!({"lost_equilibria": []}));
        }
    }
    Ok(Verdict::Pass)
}
