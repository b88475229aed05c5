//! Left/Right stops and the four pass-allowed stops.
//!
//! A pass-allowed stop gives one player an unlimited supply of waiting
//! moves in a side component. For a guaranteed game `G` a supply of `b(G)`
//! suffices when the opponent starts, and `b(G) + 1` when the passer starts
//! (the opening pass costs one), so each pass-allowed stop is a single stop
//! of `G ± n̂`.

use std::sync::{LazyLock, Mutex};

use rustc_hash::FxHashMap;

use crate::error::{require_guaranteed, Result};
use crate::game::{Game, Player};
use crate::score::Score;

/// Which player may pass while a stop is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Passer {
    None,
    LeftPasses,
    RightPasses,
}

/// A stop: which player moves first, and which (if any) may pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StopKind {
    pub side: Player,
    pub passer: Passer,
}

impl StopKind {
    pub const LS: StopKind = StopKind { side: Player::Left, passer: Passer::None };
    pub const RS: StopKind = StopKind { side: Player::Right, passer: Passer::None };
    /// Left starts, Right may pass (the lower Left-stop).
    pub const LS_RIGHT_PASSES: StopKind = StopKind { side: Player::Left, passer: Passer::RightPasses };
    /// Right starts, Left may pass (the upper Right-stop).
    pub const RS_LEFT_PASSES: StopKind = StopKind { side: Player::Right, passer: Passer::LeftPasses };
    /// Left starts and may pass herself (the upper Left-stop).
    pub const LS_LEFT_PASSES: StopKind = StopKind { side: Player::Left, passer: Passer::LeftPasses };
    /// Right starts and may pass himself (the lower Right-stop).
    pub const RS_RIGHT_PASSES: StopKind = StopKind { side: Player::Right, passer: Passer::RightPasses };
}

static PASS_STOPS: LazyLock<Mutex<FxHashMap<(u64, StopKind), Score>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));

/// Left-stop.
pub fn ls(g: &Game) -> Score {
    g.ls().clone()
}

/// Right-stop.
pub fn rs(g: &Game) -> Score {
    g.rs().clone()
}

/// Evaluates the given stop of a guaranteed game.
pub fn pass_stop(g: &Game, kind: StopKind) -> Result<Score> {
    require_guaranteed(g)?;
    Ok(pass_stop_unchecked(g, kind))
}

pub(crate) fn pass_stop_unchecked(g: &Game, kind: StopKind) -> Score {
    let self_pass = matches!(
        (kind.side, kind.passer),
        (Player::Left, Passer::LeftPasses) | (Player::Right, Passer::RightPasses)
    );
    // A player who may open with a pass needs one waiting move more.
    let n = g.birthday() + usize::from(self_pass);
    let waiting = match kind.passer {
        _ if n == 0 || kind.passer == Passer::None => {
            return match kind.side {
                Player::Left => g.ls().clone(),
                Player::Right => g.rs().clone(),
            }
        }
        Passer::LeftPasses => Game::hat(n),
        Passer::RightPasses => Game::hat(n).conjugate(),
        Passer::None => unreachable!(),
    };
    let key = (g.id(), kind);
    if let Some(s) = PASS_STOPS.lock().unwrap().get(&key) {
        return s.clone();
    }
    let total = g.sum(&waiting);
    let value = match kind.side {
        Player::Left => total.ls().clone(),
        Player::Right => total.rs().clone(),
    };
    PASS_STOPS.lock().unwrap().insert(key, value.clone());
    value
}

/// Left-stop when Right may pass.
pub fn ls_right_passes(g: &Game) -> Result<Score> {
    pass_stop(g, StopKind::LS_RIGHT_PASSES)
}

/// Right-stop when Left may pass.
pub fn rs_left_passes(g: &Game) -> Result<Score> {
    pass_stop(g, StopKind::RS_LEFT_PASSES)
}

/// Left-stop when Left may pass.
pub fn ls_left_passes(g: &Game) -> Result<Score> {
    pass_stop(g, StopKind::LS_LEFT_PASSES)
}

/// Right-stop when Right may pass.
pub fn rs_right_passes(g: &Game) -> Result<Score> {
    pass_stop(g, StopKind::RS_RIGHT_PASSES)
}

/// All six stops of a guaranteed game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stops {
    pub ls: Score,
    pub rs: Score,
    pub ls_right_passes: Score,
    pub rs_left_passes: Score,
    pub ls_left_passes: Score,
    pub rs_right_passes: Score,
}

pub fn all_stops(g: &Game) -> Result<Stops> {
    require_guaranteed(g)?;
    Ok(Stops {
        ls: g.ls().clone(),
        rs: g.rs().clone(),
        ls_right_passes: pass_stop_unchecked(g, StopKind::LS_RIGHT_PASSES),
        rs_left_passes: pass_stop_unchecked(g, StopKind::RS_LEFT_PASSES),
        ls_left_passes: pass_stop_unchecked(g, StopKind::LS_LEFT_PASSES),
        rs_right_passes: pass_stop_unchecked(g, StopKind::RS_RIGHT_PASSES),
    })
}
