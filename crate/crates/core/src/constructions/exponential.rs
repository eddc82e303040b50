//! Exponential games `h^g` whose outcomes are morphisms `g → h`.
//!
//! Over a fixed player list the construction is a genuine exponential:
//! `curry` and `uncurry` are mutually inverse on every instance.
//!
//! With varying players, players are the player maps `κ` and outcomes the
//! outcome maps `ρ` that occur in `Hom(g, h)`, and `R_κ` is the lifted
//! access relation together with the identity on all outcome maps. That
//! identity can relate a map `ρ` to itself under a `κ` it never pairs with
//! in `Hom(g, h)`, and then `eval` fails to preserve access; `curry` in turn
//! has no valid target when a map pair out of `x × g` is not in
//! `Hom(g, h)`. Both are reported, never patched: [`Exponential::eval`] is
//! built as stated and may be an invalid morphism, and
//! [`Exponential::curry`] returns an error.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use super::{positions, product, product_fixed, product_map, ConstructedGame};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::hom::{default_budget, enumerate_hom_fixed_with_budget, enumerate_hom_with_budget};
use crate::morphism::{GamI, Morphism};
use crate::relation::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Shared player list; players of `h^g` are those of `g` and `h`.
    Fixed,
    /// Players of `h^g` are player maps.
    Varying,
}

/// `a↦x;b↦y` over the sorted domain; `∅` for the empty map.
pub fn map_label(dom: &[String], cod: &[String], map: &[usize]) -> String {
    if map.is_empty() {
        return "∅".to_string();
    }
    dom.iter()
        .zip(map)
        .map(|(a, &b)| format!("{a}↦{}", cod[b]))
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Clone, Debug)]
pub struct Exponential {
    pub variant: Variant,
    /// `h`.
    pub base: Arc<Game>,
    /// `g`.
    pub exponent: Arc<Game>,
    /// `h^g`.
    pub game: Arc<Game>,
    // built on first use; equilibrium checks never need them
    product: OnceLock<ConstructedGame>,
    eval: OnceLock<Morphism>,
    player_maps: Vec<Vec<usize>>,
    outcome_maps: Vec<Vec<usize>>,
}

/// `h^g` over a shared player list: `f R″_i f′` iff every `o R_i p` maps to
/// `f(o) R′_i f′(p)`, and `f ≼″_i f′` iff `f(o) ≼′_i f′(o)` for every `o`.
pub fn exponential_fixed(g: &Arc<Game>, h: &Arc<Game>) -> Result<Exponential> {
    exponential_fixed_with_budget(g, h, default_budget())
}

pub fn exponential_fixed_with_budget(g: &Arc<Game>, h: &Arc<Game>, budget: u64) -> Result<Exponential> {
    let cat = GamI::common(&[&**g, &**h])?;
    let hom = enumerate_hom_fixed_with_budget(g, h, budget)?;
    let maps: Vec<Vec<usize>> = hom.iter().map(|m| m.outcome_map().to_vec()).collect();
    let n = maps.len();
    let k = cat.players().len();
    let mut access = Vec::with_capacity(k);
    let mut prefs = Vec::with_capacity(k);
    for i in 0..k {
        let (r, r2) = (g.access(i), h.access(i));
        let q2 = h.prefs(i);
        let mut a = Relation::empty(n);
        let mut p = Relation::empty(n);
        for (x, f) in maps.iter().enumerate() {
            for (y, f2) in maps.iter().enumerate() {
                if r.pairs().all(|(o, q)| r2.contains(f[o], f2[q])) {
                    a.insert(x, y);
                }
                if (0..g.outcomes().len()).all(|o| q2.contains(f[o], f2[o])) {
                    p.insert(x, y);
                }
            }
        }
        access.push(a);
        prefs.push(p);
    }
    let labels: Vec<String> = maps.iter().map(|f| map_label(g.outcomes(), h.outcomes(), f)).collect();
    let game = Arc::new(Game::assemble(cat.players().to_vec(), labels.clone(), access, prefs)?);
    let outcome_maps = reorder(&maps, &positions(&labels, game.outcomes()));
    let player_maps = (0..k).map(|i| vec![i]).collect();
    Ok(Exponential::finish(Variant::Fixed, h, g, game, player_maps, outcome_maps))
}

/// `h^g` with varying players, built from the full `Hom(g, h)`.
pub fn exponential(g: &Arc<Game>, h: &Arc<Game>) -> Result<Exponential> {
    exponential_with_budget(g, h, default_budget())
}

pub fn exponential_with_budget(g: &Arc<Game>, h: &Arc<Game>, budget: u64) -> Result<Exponential> {
    let hom = enumerate_hom_with_budget(g, h, budget)?;
    let kappas: Vec<Vec<usize>> = hom
        .iter()
        .map(|m| m.player_map().to_vec())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rhos: Vec<Vec<usize>> = hom
        .iter()
        .map(|m| m.outcome_map().to_vec())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rho_index: HashMap<&[usize], usize> = rhos.iter().enumerate().map(|(x, r)| (r.as_slice(), x)).collect();
    let n = rhos.len();
    let mut access = Vec::with_capacity(kappas.len());
    let mut prefs = Vec::with_capacity(kappas.len());
    for kappa in &kappas {
        // outcome maps that pair with this κ in Hom(g, h)
        let paired: Vec<usize> = hom
            .iter()
            .filter(|m| m.player_map() == kappa.as_slice())
            .map(|m| rho_index[m.outcome_map()])
            .collect();
        let mut a = Relation::identity(n);
        for &x in &paired {
            for &y in &paired {
                let (r1, r2) = (&rhos[x], &rhos[y]);
                let lifted = (0..g.players().len()).all(|i| {
                    let target = h.access(kappa[i]);
                    g.access(i).pairs().all(|(o, p)| target.contains(r1[o], r2[p]))
                });
                if lifted {
                    a.insert(x, y);
                }
            }
        }
        let mut p = Relation::empty(n);
        for (x, r1) in rhos.iter().enumerate() {
            for (y, r2) in rhos.iter().enumerate() {
                let below = (0..g.outcomes().len())
                    .all(|o| kappa.iter().all(|&j| h.prefs(j).contains(r1[o], r2[o])));
                if below {
                    p.insert(x, y);
                }
            }
        }
        access.push(a);
        prefs.push(p);
    }
    let plabels: Vec<String> = kappas.iter().map(|k| map_label(g.players(), h.players(), k)).collect();
    let olabels: Vec<String> = rhos.iter().map(|r| map_label(g.outcomes(), h.outcomes(), r)).collect();
    let game = Arc::new(Game::assemble(plabels.clone(), olabels.clone(), access, prefs)?);
    let player_maps = reorder(&kappas, &positions(&plabels, game.players()));
    let outcome_maps = reorder(&rhos, &positions(&olabels, game.outcomes()));
    Ok(Exponential::finish(Variant::Varying, h, g, game, player_maps, outcome_maps))
}

fn reorder(items: &[Vec<usize>], pos: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); items.len()];
    for (t, &k) in pos.iter().enumerate() {
        out[k] = items[t].clone();
    }
    out
}

impl Exponential {
    fn finish(
        variant: Variant,
        base: &Arc<Game>,
        exponent: &Arc<Game>,
        game: Arc<Game>,
        player_maps: Vec<Vec<usize>>,
        outcome_maps: Vec<Vec<usize>>,
    ) -> Exponential {
        Exponential {
            variant,
            base: base.clone(),
            exponent: exponent.clone(),
            game,
            product: OnceLock::new(),
            eval: OnceLock::new(),
            player_maps,
            outcome_maps,
        }
    }

    /// `h^g × g`, the domain of `eval`.
    pub fn product(&self) -> &ConstructedGame {
        self.product.get_or_init(|| {
            let factors = [self.game.clone(), self.exponent.clone()];
            match self.variant {
                Variant::Fixed => product_fixed(&factors),
                Variant::Varying => product(&factors),
            }
            .expect("both factors share the player list when it is fixed")
        })
    }

    /// `eval: h^g × g → h`, `(ρ, o) ↦ ρ(o)` and, with varying players,
    /// `(κ, i) ↦ κ(i)`. Always a morphism over a fixed player list; see the
    /// module notes for the varying case.
    pub fn eval(&self) -> &Morphism {
        self.eval.get_or_init(|| {
            let product = self.product();
            let p0 = product.leg("proj0").expect("products carry proj0");
            let p1 = product.leg("proj1").expect("products carry proj1");
            let pm = (0..product.game.players().len())
                .map(|k| match self.variant {
                    Variant::Fixed => p1.map_player(k),
                    Variant::Varying => self.player_maps[p0.map_player(k)][p1.map_player(k)],
                })
                .collect();
            let om = (0..product.game.outcomes().len())
                .map(|k| self.outcome_maps[p0.map_outcome(k)][p1.map_outcome(k)])
                .collect();
            Morphism::from_indices_unchecked(product.game.clone(), self.base.clone(), pm, om)
        })
    }

    /// The game with its single leg `eval`.
    pub fn constructed(&self) -> ConstructedGame {
        ConstructedGame {
            game: self.game.clone(),
            legs: [("eval".to_string(), self.eval().clone())].into(),
        }
    }

    /// Outcome map named by outcome `x` of `h^g`.
    pub fn outcome_map_of(&self, x: usize) -> &[usize] {
        &self.outcome_maps[x]
    }

    /// Player map named by player `k` of `h^g` (the identity slot in the
    /// fixed variant).
    pub fn player_map_of(&self, k: usize) -> &[usize] {
        &self.player_maps[k]
    }

    pub fn outcome_for_map(&self, map: &[usize]) -> Option<usize> {
        self.outcome_maps.iter().position(|m| m == map)
    }

    pub fn player_for_map(&self, map: &[usize]) -> Option<usize> {
        match self.variant {
            Variant::Fixed => None,
            Variant::Varying => self.player_maps.iter().position(|m| m == map),
        }
    }

    /// The outcome of `h^g` that is the constant map at `o` of `h`.
    pub fn constant_outcome(&self, o: usize) -> Option<usize> {
        self.outcome_for_map(&vec![o; self.exponent.outcomes().len()])
    }

    /// `Ψ: x → h^g` from `m: x × g → h`, with `Ψ(l)(i) = m(l, i)` on players
    /// and `Ψ(x)(o) = m(x, o)` on outcomes. `x_times_g` must be the product
    /// that `m` starts from, with `proj1` landing in the exponent.
    pub fn curry(&self, m: &Morphism, x_times_g: &ConstructedGame) -> Result<Morphism> {
        let p0 = x_times_g.leg("proj0")?;
        let p1 = x_times_g.leg("proj1")?;
        if m.source() != &x_times_g.game || p1.target() != &self.exponent || m.target() != &self.base {
            return Err(Error::MalformedMorphism(
                "morphism must run from the given product with the exponent to the base".into(),
            ));
        }
        let x = p0.target();
        let g = &self.exponent;
        let cell = |n0: usize, n1: usize, f0: &dyn Fn(usize) -> usize, f1: &dyn Fn(usize) -> usize, n: usize| {
            let mut table = vec![vec![usize::MAX; n1]; n0];
            for k in 0..n {
                table[f0(k)][f1(k)] = k;
            }
            table
        };
        let otable = cell(
            x.outcomes().len(),
            g.outcomes().len(),
            &|k| p0.map_outcome(k),
            &|k| p1.map_outcome(k),
            x_times_g.game.outcomes().len(),
        );
        let om = otable
            .iter()
            .map(|row| {
                let rho: Vec<usize> = row.iter().map(|&k| m.map_outcome(k)).collect();
                self.outcome_for_map(&rho).ok_or_else(|| {
                    Error::Unsupported(format!(
                        "curried outcome map {} is not an outcome of the exponential",
                        map_label(g.outcomes(), self.base.outcomes(), &rho)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pm = match self.variant {
            Variant::Fixed => (0..x.players().len()).collect(),
            Variant::Varying => {
                let ptable = cell(
                    x.players().len(),
                    g.players().len(),
                    &|k| p0.map_player(k),
                    &|k| p1.map_player(k),
                    x_times_g.game.players().len(),
                );
                ptable
                    .iter()
                    .map(|row| {
                        let kappa: Vec<usize> = row.iter().map(|&k| m.map_player(k)).collect();
                        self.player_for_map(&kappa).ok_or_else(|| {
                            Error::Unsupported(format!(
                                "curried player map {} is not a player of the exponential",
                                map_label(g.players(), self.base.players(), &kappa)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Morphism::from_indices_unchecked(x.clone(), self.game.clone(), pm, om))
    }

    /// `eval ∘ (u × id_g)` for `u: x → h^g`.
    pub fn uncurry(&self, u: &Morphism, x_times_g: &ConstructedGame) -> Result<Morphism> {
        let id = Morphism::identity(self.exponent.clone());
        let ux = product_map(&[u.clone(), id], x_times_g, self.product())?;
        crate::morphism::compose(&ux, self.eval())
    }

    /// `ψ: h → h^g` sending each outcome (and, with varying players, each
    /// player) to the constant map at it. Needs `g` to have an outcome.
    pub fn constant_embedding(&self) -> Result<Morphism> {
        if self.exponent.outcomes().is_empty() {
            return Err(Error::Precondition(
                "the exponent has no outcomes, so constant maps do not separate outcomes".into(),
            ));
        }
        let om = (0..self.base.outcomes().len())
            .map(|o| {
                self.constant_outcome(o).ok_or_else(|| {
                    Error::Precondition(format!("constant map at `{}` is missing", self.base.outcomes()[o]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pm = match self.variant {
            Variant::Fixed => (0..self.base.players().len()).collect(),
            Variant::Varying => (0..self.base.players().len())
                .map(|j| {
                    self.player_for_map(&vec![j; self.exponent.players().len()])
                        .ok_or_else(|| {
                            Error::Precondition(format!(
                                "constant player map at `{}` is missing",
                                self.base.players()[j]
                            ))
                        })
                })
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(Morphism::from_indices_unchecked(self.base.clone(), self.game.clone(), pm, om))
    }
}
