//! The partial order on guaranteed games.
//!
//! `G ≽ H` means that for every guaranteed `X` both stops of `G + X` are at
//! least those of `H + X`. That quantifier is not decidable as written;
//! [`ge`] instead uses the finite recursive characterization:
//!
//! 1. the lower Left-stop and upper Right-stop of `G` are at least those of
//!    `H`;
//! 2. every `H^L` is answered by some `G^L ≽ H^L` or some `H^LR ≼ G`;
//! 3. every `G^R` is answered by some `H^R ≼ G^R` or some `G^RL ≽ H`.
//!
//! Each recursive call lowers `b(G) + b(H)`, and results are cached on the
//! interned id pair.
//!
//! [`oracle_ge`] searches the defining quantifier over a bounded family of
//! distinguishing games; it shares nothing with [`ge`] beyond sums and plain
//! stops and serves as an independent refuter.

use std::fmt;
use std::sync::{LazyLock, Mutex};

use rustc_hash::FxHashMap;

use crate::error::{require_guaranteed, GameError, Result};
use crate::game::{Game, Side};
use crate::score::Score;
use crate::stops::{pass_stop_unchecked, StopKind};

/// The outcome of comparing two games in both directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderResult {
    /// `G ≽ H` and not `H ≽ G`.
    GreaterEq,
    /// `H ≽ G` and not `G ≽ H`.
    LessEq,
    Equivalent,
    Incomparable,
}

impl OrderResult {
    pub fn from_directions(ge: bool, le: bool) -> OrderResult {
        match (ge, le) {
            (true, true) => OrderResult::Equivalent,
            (true, false) => OrderResult::GreaterEq,
            (false, true) => OrderResult::LessEq,
            (false, false) => OrderResult::Incomparable,
        }
    }

    /// Whether `G ≽ H` held.
    pub fn ge(self) -> bool {
        matches!(self, OrderResult::GreaterEq | OrderResult::Equivalent)
    }

    /// Whether `H ≽ G` held.
    pub fn le(self) -> bool {
        matches!(self, OrderResult::LessEq | OrderResult::Equivalent)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            OrderResult::GreaterEq => ">=",
            OrderResult::LessEq => "<=",
            OrderResult::Equivalent => "==",
            OrderResult::Incomparable => "||",
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Final `ge` answers keyed on `(id(G), id(H))`.
static GE_CACHE: LazyLock<Mutex<FxHashMap<(u64, u64), bool>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));

/// Decides `G ≽ H` for guaranteed games.
pub fn ge(g: &Game, h: &Game) -> Result<bool> {
    require_guaranteed(g)?;
    require_guaranteed(h)?;
    Ok(ge_unchecked(g, h))
}

pub(crate) fn ge_unchecked(g: &Game, h: &Game) -> bool {
    if g == h {
        return true;
    }
    let key = (g.id(), h.id());
    if let Some(&answer) = GE_CACHE.lock().unwrap().get(&key) {
        return answer;
    }
    let answer = stop_condition(g, h) && left_condition(g, h) && right_condition(g, h);
    GE_CACHE.lock().unwrap().insert(key, answer);
    answer
}

fn stop_condition(g: &Game, h: &Game) -> bool {
    pass_stop_unchecked(g, StopKind::LS_RIGHT_PASSES) >= pass_stop_unchecked(h, StopKind::LS_RIGHT_PASSES)
        && pass_stop_unchecked(g, StopKind::RS_LEFT_PASSES)
            >= pass_stop_unchecked(h, StopKind::RS_LEFT_PASSES)
}

fn left_condition(g: &Game, h: &Game) -> bool {
    h.left_options().iter().all(|hl| {
        g.left_options().iter().any(|gl| ge_unchecked(gl, hl))
            || hl.right_options().iter().any(|hlr| ge_unchecked(g, hlr))
    })
}

fn right_condition(g: &Game, h: &Game) -> bool {
    g.right_options().iter().all(|gr| {
        h.right_options().iter().any(|hr| ge_unchecked(gr, hr))
            || gr.left_options().iter().any(|grl| ge_unchecked(grl, h))
    })
}

/// `H ≽ G`.
pub fn le(g: &Game, h: &Game) -> Result<bool> {
    ge(h, g)
}

pub fn compare(g: &Game, h: &Game) -> Result<OrderResult> {
    require_guaranteed(g)?;
    require_guaranteed(h)?;
    Ok(compare_unchecked(g, h))
}

pub(crate) fn compare_unchecked(g: &Game, h: &Game) -> OrderResult {
    OrderResult::from_directions(ge_unchecked(g, h), ge_unchecked(h, g))
}

pub fn equivalent(g: &Game, h: &Game) -> Result<bool> {
    Ok(compare(g, h)? == OrderResult::Equivalent)
}

/// Whether `G` is linked to `H`, i.e. some `T` gives
/// `Ls(G + T) < 0 < Rs(H + T)`. Decided by: no `G^L ≽ H` and no `H^R ≼ G`.
pub fn linked(g: &Game, h: &Game) -> Result<bool> {
    require_guaranteed(g)?;
    require_guaranteed(h)?;
    Ok(!g.left_options().iter().any(|gl| ge_unchecked(gl, h))
        && !h.right_options().iter().any(|hr| ge_unchecked(g, hr)))
}

/// The `(r, s)`-adjoint: `conj(G) + ⟨∅^(-m-r-1) | ∅^(m+s+1)⟩` where `m` is
/// the largest absolute atom of `G`. Adding it to `G` pushes the Left-stop
/// below `-r` and the Right-stop above `s`.
pub fn adjoint(g: &Game, r: &Score, s: &Score) -> Result<Game> {
    require_guaranteed(g)?;
    if r.is_negative() || s.is_negative() {
        return Err(GameError::NegativeAdjointParameter);
    }
    let m = g.max_abs_atom();
    let one = Score::from(1);
    let low = -(&(&m + r) + &one);
    let high = &(&m + s) + &one;
    Ok(g.conjugate().sum(&Game::atomic(low, high)))
}

/// Left-`s`-protection: the lower Left-stop is at least `s`, and either
/// `G` is right-atomic or every `G^R` has a left-`s`-protected `G^RL`.
/// A left-atomic `G^R` therefore fails.
pub fn left_s_protected(g: &Game, s: &Score) -> Result<bool> {
    require_guaranteed(g)?;
    fn go(g: &Game, s: &Score, memo: &mut FxHashMap<u64, bool>) -> bool {
        if let Some(&v) = memo.get(&g.id()) {
            return v;
        }
        let v = pass_stop_unchecked(g, StopKind::LS_RIGHT_PASSES) >= *s
            && g.right_options()
                .iter()
                .all(|gr| gr.left_options().iter().any(|grl| go(grl, s, memo)));
        memo.insert(g.id(), v);
        v
    }
    Ok(go(g, s, &mut FxHashMap::default()))
}

/// Right-`s`-protection, the mirror image of [`left_s_protected`].
pub fn right_s_protected(g: &Game, s: &Score) -> Result<bool> {
    left_s_protected(&g.conjugate(), &-s)
}

/// Bounds for the brute-force enumeration behind [`oracle_ge`].
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest birthday of an enumerated distinguishing game.
    pub max_birthday: usize,
    /// Scores allowed as atoms.
    pub scores: Vec<Score>,
    /// Largest number of options on one side.
    pub max_width: usize,
    /// Refuse levels whose raw candidate count exceeds this.
    pub cap: u128,
}

impl OracleConfig {
    pub fn new(max_birthday: usize, scores: impl IntoIterator<Item = Score>) -> OracleConfig {
        OracleConfig {
            max_birthday,
            scores: scores.into_iter().collect(),
            max_width: 1,
            cap: 2_000_000,
        }
    }

    pub fn with_max_width(mut self, max_width: usize) -> OracleConfig {
        self.max_width = max_width;
        self
    }

    pub fn with_cap(mut self, cap: u128) -> OracleConfig {
        self.cap = cap;
        self
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Every guaranteed game within the configured bounds, ordered by birthday
/// and then by the canonical structural order.
pub fn enumerate_guaranteed(config: &OracleConfig) -> Result<Vec<Game>> {
    let mut scores = config.scores.clone();
    scores.sort();
    scores.dedup();

    let mut levels: Vec<Vec<Game>> = Vec::new();
    let mut pool: Vec<Game> = Vec::new();
    for birthday in 0..=config.max_birthday {
        let mut sides: Vec<Side> = scores.iter().cloned().map(Side::Atom).collect();
        if birthday > 0 {
            let n = pool.len() as u128;
            let side_count = scores.len() as u128
                + (1..=config.max_width.min(pool.len()) as u128)
                    .map(|k| binomial(n, k))
                    .fold(0u128, u128::saturating_add);
            let requested = side_count.saturating_mul(side_count);
            if requested > config.cap {
                return Err(GameError::EnumerationCap { requested, cap: config.cap });
            }
            for width in 1..=config.max_width.min(pool.len()) {
                for subset in subsets(&pool, width) {
                    sides.push(Side::Options(subset));
                }
            }
        }
        let mut level = Vec::new();
        for left in &sides {
            for right in &sides {
                if birthday > 0 && left.is_atom() && right.is_atom() {
                    continue;
                }
                let g = Game::new(left.clone(), right.clone());
                if g.birthday() == birthday && g.is_guaranteed() {
                    level.push(g);
                }
            }
        }
        level.sort();
        level.dedup();
        pool.extend(level.iter().cloned());
        levels.push(level);
    }
    Ok(levels.into_iter().flatten().collect())
}

fn subsets(pool: &[Game], size: usize) -> Vec<Vec<Game>> {
    fn go(pool: &[Game], size: usize, start: usize, cur: &mut Vec<Game>, out: &mut Vec<Vec<Game>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i].clone());
            go(pool, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, size, 0, &mut Vec::new(), &mut out);
    out
}

/// The first `X` among `candidates` with `Ls(G+X) < Ls(H+X)` or
/// `Rs(G+X) < Rs(H+X)`, if any.
pub fn refute_ge(g: &Game, h: &Game, candidates: &[Game]) -> Result<Option<Game>> {
    require_guaranteed(g)?;
    require_guaranteed(h)?;
    Ok(candidates
        .iter()
        .find(|x| {
            let gx = g.sum(x);
            let hx = h.sum(x);
            gx.ls() < hx.ls() || gx.rs() < hx.rs()
        })
        .cloned())
}

/// Brute-force check of `G ≽ H` against every enumerated distinguishing
/// game. A returned witness proves `G ⋡ H`; `None` only says that no small
/// witness exists.
pub fn oracle_ge(g: &Game, h: &Game, config: &OracleConfig) -> Result<Option<Game>> {
    require_guaranteed(g)?;
    require_guaranteed(h)?;
    refute_ge(g, h, &enumerate_guaranteed(config)?)
}
