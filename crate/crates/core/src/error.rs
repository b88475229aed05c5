use thiserror::Error;

use crate::game::Game;

#[derive(Debug, Clone, Error)]
pub enum GameError {
    #[error("{0} is not a guaranteed game")]
    NotGuaranteed(Game),
    #[error("adjoint parameters must be nonnegative")]
    NegativeAdjointParameter,
    #[error("enumeration of {requested} candidate games exceeds the cap of {cap}")]
    EnumerationCap { requested: u128, cap: u128 },
    #[error("no waiting index up to {limit} makes {game} at least the number {score} minus waiting moves")]
    WaitingIndexNotFound {
        game: Game,
        score: crate::score::Score,
        limit: usize,
    },
    #[error("engine invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;

pub(crate) fn require_guaranteed(g: &Game) -> Result<()> {
    if g.is_guaranteed() {
        Ok(())
    } else {
        Err(GameError::NotGuaranteed(g.clone()))
    }
}
