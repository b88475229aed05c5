//! Exact arithmetic and canonical forms for guaranteed scoring games.

pub mod canonical;
pub mod cli;
pub mod error;
pub mod game;
pub mod order;
pub mod pickends;
pub mod score;
pub mod stops;

pub use canonical::{canonical_form, invertible, is_reduced};
pub use error::{GameError, Result};
pub use game::{Game, Player, Side};
pub use order::{compare, ge, le, OrderResult};
pub use score::Score;
