use std::path::PathBuf;

use thiserror::Error;

use crate::game::Violation;
use crate::morphism::MorphismViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown {kind} identifier `{id}`")]
    UnknownIdentifier { kind: &'static str, id: String },

    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateIdentifier { kind: &'static str, id: String },

    #[error("invalid game: {}", summarize(.0))]
    InvalidGame(Vec<Violation>),

    #[error("invalid strategic game: {0}")]
    InvalidStrategic(String),

    #[error("not a partition of the outcomes: {0}")]
    NotAPartition(String),

    /// Partial or ill-typed maps; raised before any relation is inspected.
    #[error("malformed morphism: {0}")]
    MalformedMorphism(String),

    #[error("morphism does not preserve the game structure: {}", summarize(.0))]
    InvalidMorphism(Vec<MorphismViolation>),

    #[error("cannot compose: target of the first morphism differs from the source of the second")]
    CompositionMismatch,

    #[error("games do not share a player set: {0}")]
    MismatchedPlayers(String),

    #[error("morphisms are not parallel")]
    NotParallel,

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hom enumeration needs {candidates} candidates, budget is {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },

    #[error("unknown law `{0}`")]
    UnknownLaw(String),

    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn summarize<T: std::fmt::Display>(items: &[T]) -> String {
    match items {
        [] => "no violations".to_string(),
        [only] => only.to_string(),
        [first, rest @ ..] => format!("{first} (and {} more)", rest.len()),
    }
}

impl Error {
    /// Process exit code for the command-line surface.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io { .. } | Error::UnknownLaw(_) => 1,
            Error::BudgetExceeded { .. } => 4,
            _ => 2,
        }
    }
}
