//! Strategic games as multigraphs.
//!
//! A [`Game`] has players, outcomes, and for each player an accessibility
//! relation (which outcomes the player can move between unilaterally) and a
//! preference preorder. Games and their structure-preserving [`Morphism`]s
//! form categories with products, coproducts, equalizers, coequalizers,
//! pushouts along shared players and exponentials, all in
//! [`constructions`]. [`equilibria`] computes Nash and weak Nash equilibria
//! and checks whether morphisms preserve them, and [`verify`] tests every
//! law on seeded random games against brute-force oracles.
//!
//! ```
//! use gamecat::equilibria::nash_equilibria;
//! use gamecat::strategic::{from_strategic, StrategicGame};
//!
//! let pd = StrategicGame::bimatrix(
//!     &["C", "D"],
//!     &["C", "D"],
//!     &[&[(-1, -1), (-3, 0)], &[(0, -3), (-2, -2)]],
//! );
//! let g = from_strategic(&pd)?;
//! let ne: Vec<&str> = nash_equilibria(&g).iter().map(|&o| g.outcomes()[o].as_str()).collect();
//! assert_eq!(ne, ["DD"]);
//! # Ok::<(), gamecat::Error>(())
//! ```

pub mod cli;
pub mod constructions;
pub mod equilibria;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod hom;
pub mod io;
pub mod morphism;
pub mod relation;
pub mod strategic;
pub mod verify;

pub use error::{Error, Result};
pub use game::{Closure, Game, GameParts, OutcomeClass};
pub use morphism::{Morphism, GamI};
pub use relation::Relation;
pub use strategic::StrategicGame;
