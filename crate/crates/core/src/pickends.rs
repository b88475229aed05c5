//! PickEnds: a row of rational-valued pieces. On a turn the mover takes the
//! piece at either end; Left adds its value to the running score, Right
//! subtracts it. Play ends when the row is empty.
//!
//! Both players can move in every non-terminal position, so every value this
//! ruleset produces is a dicot and therefore guaranteed.

use rustc_hash::FxHashMap;

use crate::error::{GameError, Result};
use crate::game::{Game, Player, Side};
use crate::score::Score;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PickEndsPosition {
    pub pieces: Vec<Score>,
    pub accumulated: Score,
}

impl PickEndsPosition {
    pub fn new(pieces: Vec<Score>, accumulated: Score) -> PickEndsPosition {
        PickEndsPosition { pieces, accumulated }
    }

    /// A fresh row with score 0.
    pub fn start(pieces: Vec<Score>) -> PickEndsPosition {
        PickEndsPosition::new(pieces, Score::zero())
    }

    fn take(&self, from_front: bool, player: Player) -> PickEndsPosition {
        let mut pieces = self.pieces.clone();
        let v = if from_front { pieces.remove(0) } else { pieces.pop().unwrap() };
        let accumulated = match player {
            Player::Left => &self.accumulated + &v,
            Player::Right => &self.accumulated - &v,
        };
        PickEndsPosition { pieces, accumulated }
    }

    /// Successors after `player` moves: first piece taken, then last piece.
    pub fn moves(&self, player: Player) -> Vec<PickEndsPosition> {
        match self.pieces.len() {
            0 => Vec::new(),
            1 => vec![self.take(true, player)],
            _ => vec![self.take(true, player), self.take(false, player)],
        }
    }

    /// The game value of this position.
    pub fn to_game(&self) -> Result<Game> {
        let g = to_game_memo(self, &mut FxHashMap::default());
        if g.is_guaranteed() {
            Ok(g)
        } else {
            Err(GameError::Invariant(format!("PickEnds produced non-guaranteed {g}")))
        }
    }
}

fn to_game_memo(p: &PickEndsPosition, memo: &mut FxHashMap<PickEndsPosition, Game>) -> Game {
    if p.pieces.is_empty() {
        return Game::number(p.accumulated.clone());
    }
    if let Some(g) = memo.get(p) {
        return g.clone();
    }
    let mut side = |player| {
        Side::Options(p.moves(player).iter().map(|q| to_game_memo(q, memo)).collect())
    };
    let left = side(Player::Left);
    let right = side(Player::Right);
    let g = Game::new(left, right);
    memo.insert(p.clone(), g.clone());
    g
}
