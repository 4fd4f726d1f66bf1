use thiserror::Error;

/// Errors produced by game construction, index computation, and the
/// reduction pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weight list must not be empty")]
    EmptyWeights,

    #[error("weight of player {player} is negative")]
    NegativeWeight { player: usize },

    #[error("quota is negative")]
    NegativeQuota,

    #[error("player index {index} out of range for a {players}-player game (players are 1-based)")]
    PlayerOutOfRange { index: usize, players: usize },

    #[error("{0}")]
    Capacity(String),

    #[error("malformed X3C instance: {0}")]
    MalformedX3c(String),

    #[error("degenerate instance: {0}")]
    Degenerate(String),

    #[error("game has {players} players but the operation needs at least {required}")]
    TooFewPlayers { players: usize, required: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
