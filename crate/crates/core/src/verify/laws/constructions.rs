use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde_json::json;

use super::{fail, hom, hom_fixed, maps, Ctx, Verdict};
use crate::constructions::{
    coequalizer, coequalizer_mediate, copair_mediate, coproduct, coproduct_fixed, equalizer, equalizer_mediate,
    exponential, exponential_fixed, pair_mediate, product, product_fixed, pushforward_players, pushforward_unit,
    pushout_shared_players, ConstructedGame, Exponential,
};
use crate::error::Result;
use crate::game::{player_game, Game};
use crate::morphism::{compose, Morphism};
use crate::verify::generate::{player_label, Shape};

type Maps = (Vec<usize>, Vec<usize>);

/// Two games, sharing players when `fixed`.
fn pair(ctx: &mut Ctx, a: &str, b: &str, fixed: bool) -> (Arc<Game>, Arc<Game>) {
    if fixed {
        let n = ctx.shared_players(0);
        (ctx.game(a, Shape::with_players(n)), ctx.game(b, Shape::with_players(n)))
    } else {
        (ctx.game(a, Shape::ANY), ctx.game(b, Shape::ANY))
    }
}

fn triple(ctx: &mut Ctx, names: [&str; 3], fixed: bool) -> [Arc<Game>; 3] {
    let shape = if fixed {
        Shape::with_players(ctx.shared_players(0))
    } else {
        Shape::ANY
    };
    names.map(|n| ctx.game(n, shape))
}

fn homs(g: &Arc<Game>, h: &Arc<Game>, fixed: bool) -> Result<Vec<Morphism>> {
    if fixed {
        hom_fixed(g, h)
    } else {
        hom(g, h)
    }
}

/// First problem with a construction: its game or one of its legs.
fn construction_problem(what: &str, c: &ConstructedGame) -> Option<String> {
    if let Some(v) = c.game.violations().first() {
        return Some(format!("{what}: {v}"));
    }
    c.legs.iter().find_map(|(name, leg)| {
        leg.violations()
            .first()
            .map(|v| format!("{what}: leg {name}: {v}"))
    })
}

pub(super) fn constructions_valid(ctx: &mut Ctx) -> Result<Verdict> {
    let (g, h) = pair(ctx, "g", "h", false);
    let (gi, hi) = pair(ctx, "g_fixed", "h_fixed", true);
    let mut built = vec![
        ("product", product(&[g.clone(), h.clone()])?),
        ("coproduct", coproduct(&[g.clone(), h.clone()])?),
        ("pushout", pushout_shared_players(&g, &h)?),
        ("product_fixed", product_fixed(&[gi.clone(), hi.clone()])?),
        ("coproduct_fixed", coproduct_fixed(&[gi.clone(), hi.clone()])?),
        ("exponential_fixed", exponential_fixed(&gi, &hi)?.constructed()),
    ];
    let e = exponential(&g, &h)?;
    built.push((
        "exponential",
        ConstructedGame {
            game: e.game.clone(),
            legs: BTreeMap::new(),
        },
    ));
    let gh = hom(&g, &h)?;
    if let (Some(f), Some(f2)) = (ctx.pick(&gh).cloned(), ctx.pick(&gh).cloned()) {
        ctx.record_morphism("f", &f, "g", "h");
        ctx.record_morphism("f2", &f2, "g", "h");
        built.push(("equalizer", equalizer(&f, &f2)?));
        built.push(("coequalizer", coequalizer(&f, &f2)?));
    }
    if let Some(problem) = built.iter().find_map(|(what, c)| construction_problem(what, c)) {
        return fail(problem, "valid games and legs");
    }

    // reindex g along a random player map
    let targets: Vec<String> = (0..ctx.shared_players(usize::from(!g.players().is_empty())))
        .map(|k| format!("t{}", player_label(k)))
        .collect();
    let f: BTreeMap<String, String> = g
        .players()
        .iter()
        .map(|i| (i.clone(), targets[ctx.rng.below(targets.len())].clone()))
        .collect();
    ctx.record("reindex", json!({"targets": targets, "map": f}));
    if let Some(v) = pushforward_players(&g, &targets, &f)?.violations().first() {
        return fail(format!("reindexed game: {v}"), "valid game");
    }
    if let Some(v) = pushforward_unit(&g, &targets, &f)?.violations().first() {
        return fail(format!("reindexing unit: {v}"), "valid morphism");
    }
    Ok(Verdict::Pass)
}

fn eval_valid(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let (g, h) = pair(ctx, "g", "h", fixed);
    let e = if fixed { exponential_fixed(&g, &h)? } else { exponential(&g, &h)? };
    match e.eval().violations().first() {
        Some(v) => fail(v.to_string(), "eval passes check_morphism"),
        None => Ok(Verdict::Pass),
    }
}

pub(super) fn exponential_eval_valid(ctx: &mut Ctx) -> Result<Verdict> {
    eval_valid(ctx, false)
}

pub(super) fn exponential_eval_valid_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    eval_valid(ctx, true)
}

/// Every key must be hit by exactly one mediator, and that one must be the
/// constructed one.
fn unique_factorization(
    keyed: &HashMap<(Maps, Maps), Vec<usize>>,
    key: (Maps, Maps),
    candidates: &[Morphism],
    built: &Morphism,
) -> Option<(serde_json::Value, &'static str)> {
    let hits = keyed.get(&key).map_or(&[][..], Vec::as_slice);
    if hits.len() != 1 {
        return Some((json!({"factorizations": hits.len()}), "exactly one factorization"));
    }
    if maps(&candidates[hits[0]]) != maps(built) {
        return Some((crate::io::maps_value(built), "the mediator equals the unique factorization"));
    }
    None
}

fn product_universal_in(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let [x, g, h] = triple(ctx, ["x", "g", "h"], fixed);
    let prod = if fixed {
        product_fixed(&[g.clone(), h.clone()])?
    } else {
        product(&[g.clone(), h.clone()])?
    };
    let (p0, p1) = (prod.leg("proj0")?, prod.leg("proj1")?);
    let into = homs(&x, &prod.game, fixed)?;
    let mut keyed: HashMap<(Maps, Maps), Vec<usize>> = HashMap::new();
    for (k, u) in into.iter().enumerate() {
        keyed
            .entry((maps(&compose(u, p0)?), maps(&compose(u, p1)?)))
            .or_default()
            .push(k);
    }
    let xg = homs(&x, &g, fixed)?;
    let xh = homs(&x, &h, fixed)?;
    for f in &xg {
        for f2 in &xh {
            let built = pair_mediate(&x, &[f.clone(), f2.clone()], &prod)?;
            if let Some((observed, expected)) = unique_factorization(&keyed, (maps(f), maps(f2)), &into, &built) {
                ctx.record_morphism("f", f, "x", "g");
                ctx.record_morphism("f2", f2, "x", "h");
                return fail(observed, expected);
            }
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn product_universal(ctx: &mut Ctx) -> Result<Verdict> {
    product_universal_in(ctx, false)
}

pub(super) fn product_universal_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    product_universal_in(ctx, true)
}

fn coproduct_universal_in(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let [g, h, y] = triple(ctx, ["g", "h", "y"], fixed);
    let co = if fixed {
        coproduct_fixed(&[g.clone(), h.clone()])?
    } else {
        coproduct(&[g.clone(), h.clone()])?
    };
    let (i0, i1) = (co.leg("inj0")?, co.leg("inj1")?);
    let out = homs(&co.game, &y, fixed)?;
    let mut keyed: HashMap<(Maps, Maps), Vec<usize>> = HashMap::new();
    for (k, u) in out.iter().enumerate() {
        keyed
            .entry((maps(&compose(i0, u)?), maps(&compose(i1, u)?)))
            .or_default()
            .push(k);
    }
    for f in &homs(&g, &y, fixed)? {
        for f2 in &homs(&h, &y, fixed)? {
            let built = copair_mediate(&y, &[f.clone(), f2.clone()], &co)?;
            if let Some((observed, expected)) = unique_factorization(&keyed, (maps(f), maps(f2)), &out, &built) {
                ctx.record_morphism("f", f, "g", "y");
                ctx.record_morphism("f2", f2, "h", "y");
                return fail(observed, expected);
            }
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn coproduct_universal(ctx: &mut Ctx) -> Result<Verdict> {
    coproduct_universal_in(ctx, false)
}

pub(super) fn coproduct_universal_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    coproduct_universal_in(ctx, true)
}

/// A random parallel pair `g ⇉ h`, recorded as `f` and `f2`.
fn parallel_pair(ctx: &mut Ctx, g: &Arc<Game>, h: &Arc<Game>, fixed: bool) -> Result<Option<(Morphism, Morphism)>> {
    let gh = homs(g, h, fixed)?;
    let (Some(f), Some(f2)) = (ctx.pick(&gh).cloned(), ctx.pick(&gh).cloned()) else {
        return Ok(None);
    };
    ctx.record_morphism("f", &f, "g", "h");
    ctx.record_morphism("f2", &f2, "g", "h");
    Ok(Some((f, f2)))
}

fn equalizer_universal_in(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let [g, h, x] = triple(ctx, ["g", "h", "x"], fixed);
    // no parallel pair: nothing to check
    let Some((f, f2)) = parallel_pair(ctx, &g, &h, fixed)? else {
        return Ok(Verdict::Pass);
    };
    let eq = equalizer(&f, &f2)?;
    let e = eq.leg("equalize")?;
    let into = homs(&x, &eq.game, fixed)?;
    let mut keyed: HashMap<Maps, Vec<usize>> = HashMap::new();
    for (k, u) in into.iter().enumerate() {
        keyed.entry(maps(&compose(u, e)?)).or_default().push(k);
    }
    for k in &homs(&x, &g, fixed)? {
        if maps(&compose(k, &f)?) != maps(&compose(k, &f2)?) {
            continue;
        }
        let hits = keyed.get(&maps(k)).map_or(0, Vec::len);
        let built = equalizer_mediate(k, &eq)?;
        if hits != 1 || maps(&compose(&built, e)?) != maps(k) || !built.is_valid() {
            ctx.record_morphism("k", k, "x", "g");
            return fail(json!({"factorizations": hits}), "exactly one factorization, the mediator");
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn equalizer_universal(ctx: &mut Ctx) -> Result<Verdict> {
    equalizer_universal_in(ctx, false)
}

pub(super) fn equalizer_universal_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    equalizer_universal_in(ctx, true)
}

fn coequalizer_universal_in(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let [g, h, y] = triple(ctx, ["g", "h", "y"], fixed);
    let Some((f, f2)) = parallel_pair(ctx, &g, &h, fixed)? else {
        return Ok(Verdict::Pass);
    };
    let co = coequalizer(&f, &f2)?;
    let q = co.leg("quotient")?;
    let out = homs(&co.game, &y, fixed)?;
    let mut keyed: HashMap<Maps, Vec<usize>> = HashMap::new();
    for (k, u) in out.iter().enumerate() {
        keyed.entry(maps(&compose(q, u)?)).or_default().push(k);
    }
    for k in &homs(&h, &y, fixed)? {
        if maps(&compose(&f, k)?) != maps(&compose(&f2, k)?) {
            continue;
        }
        let hits = keyed.get(&maps(k)).map_or(0, Vec::len);
        let built = coequalizer_mediate(k, &co)?;
        if hits != 1 || maps(&compose(q, &built)?) != maps(k) || !built.is_valid() {
            ctx.record_morphism("k", k, "h", "y");
            return fail(json!({"factorizations": hits}), "exactly one factorization, the mediator");
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn coequalizer_universal(ctx: &mut Ctx) -> Result<Verdict> {
    coequalizer_universal_in(ctx, false)
}

pub(super) fn coequalizer_universal_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    coequalizer_universal_in(ctx, true)
}

pub(super) fn coequalizer_commutes(ctx: &mut Ctx) -> Result<Verdict> {
    let (g, h) = pair(ctx, "g", "h", false);
    let Some((f, f2)) = parallel_pair(ctx, &g, &h, false)? else {
        return Ok(Verdict::Pass);
    };
    let co = coequalizer(&f, &f2)?;
    let q = co.leg("quotient")?;
    let (a, b) = (compose(&f, q)?, compose(&f2, q)?);
    if maps(&a) != maps(&b) {
        return fail(
            json!({"q∘f": crate::io::maps_value(&a), "q∘f2": crate::io::maps_value(&b)}),
            "q∘f = q∘f2",
        );
    }
    Ok(Verdict::Pass)
}

/// Inclusion of the shared players of `g` and `h` into `side`.
fn shared_inclusion(g: &Game, h: &Game, side: &Arc<Game>) -> Result<Morphism> {
    let shared: Vec<&String> = g.players().iter().filter(|p| h.player_index(p).is_some()).collect();
    let gp = Arc::new(player_game(&shared)?);
    let pm = shared
        .iter()
        .map(|p| side.require_player(p))
        .collect::<Result<Vec<_>>>()?;
    Morphism::from_indices(gp, side.clone(), pm, vec![])
}

pub(super) fn pushout_commutes(ctx: &mut Ctx) -> Result<Verdict> {
    let (g, h) = pair(ctx, "g", "h", false);
    let po = pushout_shared_players(&g, &h)?;
    let a = compose(&shared_inclusion(&g, &h, &g)?, po.leg("inj0")?)?;
    let b = compose(&shared_inclusion(&g, &h, &h)?, po.leg("inj1")?)?;
    if maps(&a) != maps(&b) {
        return fail(
            json!({"via_g": crate::io::maps_value(&a), "via_h": crate::io::maps_value(&b)}),
            "both routes agree",
        );
    }
    Ok(Verdict::Pass)
}

pub(super) fn pushout_universal(ctx: &mut Ctx) -> Result<Verdict> {
    let [g, h, y] = triple(ctx, ["g", "h", "y"], false);
    let po = pushout_shared_players(&g, &h)?;
    let (i0, i1) = (po.leg("inj0")?, po.leg("inj1")?);
    let (s0, s1) = (shared_inclusion(&g, &h, &g)?, shared_inclusion(&g, &h, &h)?);
    let out = hom(&po.game, &y)?;
    let mut keyed: HashMap<(Maps, Maps), usize> = HashMap::new();
    for u in &out {
        *keyed.entry((maps(&compose(i0, u)?), maps(&compose(i1, u)?))).or_default() += 1;
    }
    for a in &hom(&g, &y)? {
        for b in &hom(&h, &y)? {
            if maps(&compose(&s0, a)?) != maps(&compose(&s1, b)?) {
                continue;
            }
            let hits = keyed.get(&(maps(a), maps(b))).copied().unwrap_or(0);
            if hits != 1 {
                ctx.record_morphism("a", a, "g", "y");
                ctx.record_morphism("b", b, "h", "y");
                return fail(json!({"factorizations": hits}), "exactly one factorization");
            }
        }
    }
    Ok(Verdict::Pass)
}

fn relation_problem(e: &Exponential, what: &str) -> Option<String> {
    let g = &e.game;
    (0..g.players().len()).find_map(|i| {
        let who = &g.players()[i];
        let (r, q) = (g.access(i), g.prefs(i));
        if !r.is_reflexive() || !r.is_symmetric() {
            Some(format!("{what}: access of `{who}` is not reflexive and symmetric"))
        } else if !q.is_reflexive() || !q.is_transitive() {
            Some(format!("{what}: preferences of `{who}` are not a preorder"))
        } else {
            None
        }
    })
}

/// The fixed-player relations are also recomputed from their definition.
pub(super) fn exponential_relations(ctx: &mut Ctx) -> Result<Verdict> {
    let (g, h) = pair(ctx, "g", "h", true);
    let e = exponential_fixed(&g, &h)?;
    if let Some(p) = relation_problem(&e, "fixed") {
        return fail(p, "valid relations");
    }
    let n = e.game.outcomes().len();
    for i in 0..g.players().len() {
        for x in 0..n {
            for y in 0..n {
                let (f, f2) = (e.outcome_map_of(x), e.outcome_map_of(y));
                let access = g.access(i).pairs().all(|(o, p)| h.access(i).contains(f[o], f2[p]));
                let below = (0..g.outcomes().len()).all(|o| h.prefs(i).contains(f[o], f2[o]));
                if access != e.game.access(i).contains(x, y) || below != e.game.prefs(i).contains(x, y) {
                    return fail(
                        json!({"player": g.players()[i], "pair": [e.game.outcomes()[x], e.game.outcomes()[y]]}),
                        "relations as defined pointwise",
                    );
                }
            }
        }
    }
    let (g2, h2) = pair(ctx, "g_varying", "h_varying", false);
    let e = exponential(&g2, &h2)?;
    match relation_problem(&e, "varying") {
        Some(p) => fail(p, "valid relations"),
        None => Ok(Verdict::Pass),
    }
}

fn curry_bijection(ctx: &mut Ctx, fixed: bool) -> Result<Verdict> {
    let [x, g, h] = triple(ctx, ["x", "g", "h"], fixed);
    let (e, xg) = if fixed {
        (exponential_fixed(&g, &h)?, product_fixed(&[x.clone(), g.clone()])?)
    } else {
        (exponential(&g, &h)?, product(&[x.clone(), g.clone()])?)
    };
    let from_product = homs(&xg.game, &h, fixed)?;
    let into_power = homs(&x, &e.game, fixed)?;
    for m in &from_product {
        let curried = match e.curry(m, &xg) {
            Ok(c) => c,
            Err(err) => {
                ctx.record_morphism("m", m, "x×g", "h");
                return fail(format!("curry failed: {err}"), "curry(m) exists");
            }
        };
        if let Some(v) = curried.violations().first() {
            ctx.record_morphism("m", m, "x×g", "h");
            return fail(format!("curry(m) is not a morphism: {v}"), "curry(m) passes check_morphism");
        }
        if maps(&e.uncurry(&curried, &xg)?) != maps(m) {
            ctx.record_morphism("m", m, "x×g", "h");
            return fail("uncurry(curry(m)) differs from m", "uncurry(curry(m)) = m");
        }
    }
    for u in &into_power {
        let back = e.uncurry(u, &xg)?;
        if let Some(v) = back.violations().first() {
            ctx.record_morphism("u", u, "x", "h^g");
            return fail(format!("uncurry(u) is not a morphism: {v}"), "uncurry(u) passes check_morphism");
        }
        let again = e.curry(&back, &xg)?;
        if maps(&again) != maps(u) {
            ctx.record_morphism("u", u, "x", "h^g");
            return fail("curry(uncurry(u)) differs from u", "curry(uncurry(u)) = u");
        }
    }
    if from_product.len() != into_power.len() {
        return fail(
            json!({"hom(x×g, h)": from_product.len(), "hom(x, h^g)": into_power.len()}),
            "equal sizes",
        );
    }
    Ok(Verdict::Pass)
}

pub(super) fn exponential_curry_bijection(ctx: &mut Ctx) -> Result<Verdict> {
    curry_bijection(ctx, false)
}

pub(super) fn exponential_curry_bijection_fixed(ctx: &mut Ctx) -> Result<Verdict> {
    curry_bijection(ctx, true)
}

/// Both variants, with an exponent that has at least one outcome.
pub(super) fn constant_embedding_valid(ctx: &mut Ctx) -> Result<Verdict> {
    let n = ctx.shared_players(0);
    let with_outcome = |players| Shape {
        min_outcomes: 1,
        players,
        ..Shape::ANY
    };
    let gi = ctx.game("g_fixed", with_outcome(Some(n)));
    let hi = ctx.game("h_fixed", Shape::with_players(n));
    let g = ctx.game("g", with_outcome(None));
    let h = ctx.game("h", Shape::ANY);
    for (what, e) in [("fixed", exponential_fixed(&gi, &hi)?), ("varying", exponential(&g, &h)?)] {
        match e.constant_embedding() {
            Err(err) => return fail(format!("{what}: {err}"), "the constant embedding exists"),
            Ok(psi) => {
                if let Some(v) = psi.violations().first() {
                    return fail(format!("{what}: {v}"), "the constant embedding passes check_morphism");
                }
            }
        }
    }
    Ok(Verdict::Pass)
}
