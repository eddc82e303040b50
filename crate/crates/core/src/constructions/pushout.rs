use std::collections::BTreeMap;
use std::sync::Arc;

use super::{coequalizer, coproduct, ConstructedGame};
use crate::error::Result;
use crate::game::{player_game, Game};
use crate::morphism::{compose, Morphism};

/// The two inclusions `G_p(S) → g + h` of the shared players `S`, tagged
/// into each summand of `coprod`.
pub fn shared_player_legs(g: &Game, h: &Game, coprod: &ConstructedGame) -> Result<(Morphism, Morphism)> {
    let shared: Vec<&String> = g
        .players()
        .iter()
        .filter(|p| h.player_index(p).is_some())
        .collect();
    let gp = Arc::new(player_game(&shared)?);
    let inj0 = coprod.leg("inj0")?;
    let inj1 = coprod.leg("inj1")?;
    let via = |inj: &Morphism, side: &Game| -> Result<Morphism> {
        let pm = shared
            .iter()
            .map(|p| side.require_player(p).map(|i| inj.map_player(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism::from_indices_unchecked(gp.clone(), coprod.game.clone(), pm, vec![]))
    };
    Ok((via(inj0, g)?, via(inj1, h)?))
}

/// Amalgamation of `g` and `h` along their common players: the coproduct,
/// then the quotient identifying `k@0` with `k@1` for every shared `k`.
/// Outcomes stay apart. Legs `inj0`, `inj1` are the injections followed by
/// the quotient.
pub fn pushout_shared_players(g: &Arc<Game>, h: &Arc<Game>) -> Result<ConstructedGame> {
    let sum = coproduct(&[g.clone(), h.clone()])?;
    let (f0, f1) = shared_player_legs(g, h, &sum)?;
    let coeq = coequalizer(&f0, &f1)?;
    let q = coeq.leg("quotient")?;
    let legs = BTreeMap::from([
        ("inj0".to_string(), compose(sum.leg("inj0")?, q)?),
        ("inj1".to_string(), compose(sum.leg("inj1")?, q)?),
    ]);
    Ok(ConstructedGame {
        game: coeq.game,
        legs,
    })
}
