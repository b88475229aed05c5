//! Game values: hash-consed game trees whose sides are either an atom
//! (a score reached when the player to move has no option) or a nonempty
//! set of options.
//!
//! Every [`Game`] is interned, so two handles compare equal exactly when the
//! trees are identical (same shape, same atoms in the same places). Per-node
//! summaries (birthday, atom range, membership in the guaranteed universe,
//! stops) are computed once at construction from the already-interned
//! children.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Add;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, LazyLock, Mutex};

use rustc_hash::{FxHashMap, FxHashSet};

use crate::score::Score;

/// The two players. Left maximizes the score, Right minimizes it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

/// One side of a game: an atom `∅^s`, or a nonempty set of options.
///
/// `Options` may be built from any vector; [`Game::new`] sorts it into the
/// canonical order and removes duplicates. An empty option list is not a
/// valid side.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Side {
    Atom(Score),
    Options(Vec<Game>),
}

impl Side {
    pub fn atom(s: impl Into<Score>) -> Side {
        Side::Atom(s.into())
    }

    pub fn options(options: impl IntoIterator<Item = Game>) -> Side {
        Side::Options(options.into_iter().collect())
    }

    pub fn as_atom(&self) -> Option<&Score> {
        match self {
            Side::Atom(s) => Some(s),
            Side::Options(_) => None,
        }
    }

    /// The options on this side; empty for an atom.
    pub fn games(&self) -> &[Game] {
        match self {
            Side::Atom(_) => &[],
            Side::Options(opts) => opts,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Side::Atom(_))
    }

    fn normalize(self) -> Side {
        match self {
            Side::Atom(s) => Side::Atom(s),
            Side::Options(mut opts) => {
                assert!(
                    !opts.is_empty(),
                    "an empty option set must be written as an atom"
                );
                opts.sort();
                opts.dedup();
                Side::Options(opts)
            }
        }
    }

    fn min_atom(&self) -> Score {
        match self {
            Side::Atom(s) => s.clone(),
            Side::Options(opts) => opts.iter().map(|g| g.min_atom()).min().unwrap().clone(),
        }
    }

    fn max_atom(&self) -> Score {
        match self {
            Side::Atom(s) => s.clone(),
            Side::Options(opts) => opts.iter().map(|g| g.max_atom()).max().unwrap().clone(),
        }
    }
}

/// Total structural order: atoms before option sets, atoms by score, option
/// sets lexicographically (a proper prefix sorts first).
impl Ord for Side {
    fn cmp(&self, other: &Side) -> Ordering {
        match (self, other) {
            (Side::Atom(a), Side::Atom(b)) => a.cmp(b),
            (Side::Atom(_), Side::Options(_)) => Ordering::Less,
            (Side::Options(_), Side::Atom(_)) => Ordering::Greater,
            (Side::Options(a), Side::Options(b)) => a.iter().cmp(b.iter()),
        }
    }
}

impl PartialOrd for Side {
    fn partial_cmp(&self, other: &Side) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct GameNode {
    id: u64,
    left: Side,
    right: Side,
    birthday: usize,
    min_atom: Score,
    max_atom: Score,
    /// Local condition holds here and at every follower.
    guaranteed: bool,
    left_stop: Score,
    right_stop: Score,
}

/// An interned game value. Cloning is cheap; equality and hashing use the
/// interning id, which coincides with structural identity.
#[derive(Clone)]
pub struct Game(Arc<GameNode>);

static NEXT_ID: AtomicU64 = AtomicU64::new(0);
static INTERNER: LazyLock<Mutex<FxHashMap<(Side, Side), Game>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));
static CONJUGATES: LazyLock<Mutex<FxHashMap<u64, Game>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));
static SUMS: LazyLock<Mutex<FxHashMap<(u64, u64), Game>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));

fn local_condition(left: &Side, right: &Side) -> bool {
    match (left, right) {
        (Side::Atom(l), r) => *l <= r.min_atom(),
        (l, Side::Atom(r)) => l.max_atom() <= *r,
        _ => true,
    }
}

impl Game {
    /// Builds (or looks up) the game `⟨left | right⟩`.
    pub fn new(left: Side, right: Side) -> Game {
        let left = left.normalize();
        let right = right.normalize();
        let key = (left, right);
        if let Some(g) = INTERNER.lock().unwrap().get(&key) {
            return g.clone();
        }
        let (left, right) = key;

        let birthday = left
            .games()
            .iter()
            .chain(right.games())
            .map(|g| g.birthday() + 1)
            .max()
            .unwrap_or(0);
        let min_atom = left.min_atom().min(right.min_atom());
        let max_atom = left.max_atom().max(right.max_atom());
        let guaranteed = local_condition(&left, &right)
            && left.games().iter().chain(right.games()).all(|g| g.is_guaranteed());
        let left_stop = match &left {
            Side::Atom(s) => s.clone(),
            Side::Options(opts) => opts.iter().map(|g| g.rs()).max().unwrap().clone(),
        };
        let right_stop = match &right {
            Side::Atom(s) => s.clone(),
            Side::Options(opts) => opts.iter().map(|g| g.ls()).min().unwrap().clone(),
        };

        let mut interner = INTERNER.lock().unwrap();
        // Another thread may have inserted the same key in the meantime.
        let key = (left, right);
        if let Some(g) = interner.get(&key) {
            return g.clone();
        }
        let (left, right) = key;
        let game = Game(Arc::new(GameNode {
            id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
            left: left.clone(),
            right: right.clone(),
            birthday,
            min_atom,
            max_atom,
            guaranteed,
            left_stop,
            right_stop,
        }));
        interner.insert((left, right), game.clone());
        game
    }

    /// The purely atomic game `⟨∅^left | ∅^right⟩`.
    pub fn atomic(left: impl Into<Score>, right: impl Into<Score>) -> Game {
        Game::new(Side::Atom(left.into()), Side::Atom(right.into()))
    }

    /// The number `s = ⟨∅^s | ∅^s⟩`.
    pub fn number(s: impl Into<Score>) -> Game {
        let s = s.into();
        Game::atomic(s.clone(), s)
    }

    pub fn zero() -> Game {
        Game::number(Score::zero())
    }

    /// The waiting move `n̂`: `0̂ = 0` and `n̂ = ⟨(n-1)̂ | ∅^0⟩`.
    pub fn hat(n: usize) -> Game {
        let mut g = Game::zero();
        for _ in 0..n {
            g = Game::new(Side::Options(vec![g]), Side::Atom(Score::zero()));
        }
        g
    }

    /// `s - n̂`, the game where Right holds `n` waiting moves on top of the
    /// number `s`.
    pub fn number_minus_hat(s: impl Into<Score>, n: usize) -> Game {
        Game::number(s).sum(&Game::hat(n).conjugate())
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn left(&self) -> &Side {
        &self.0.left
    }

    pub fn right(&self) -> &Side {
        &self.0.right
    }

    pub fn side(&self, player: Player) -> &Side {
        match player {
            Player::Left => &self.0.left,
            Player::Right => &self.0.right,
        }
    }

    pub fn options(&self, player: Player) -> &[Game] {
        self.side(player).games()
    }

    pub fn left_options(&self) -> &[Game] {
        self.0.left.games()
    }

    pub fn right_options(&self) -> &[Game] {
        self.0.right.games()
    }

    pub fn left_atom(&self) -> Option<&Score> {
        self.0.left.as_atom()
    }

    pub fn right_atom(&self) -> Option<&Score> {
        self.0.right.as_atom()
    }

    pub fn is_left_atomic(&self) -> bool {
        self.0.left.is_atom()
    }

    pub fn is_right_atomic(&self) -> bool {
        self.0.right.is_atom()
    }

    pub fn is_purely_atomic(&self) -> bool {
        self.is_left_atomic() && self.is_right_atomic()
    }

    /// The score `s` if this game is the number `s`.
    pub fn as_number(&self) -> Option<&Score> {
        match (self.left_atom(), self.right_atom()) {
            (Some(l), Some(r)) if l == r => Some(l),
            _ => None,
        }
    }

    /// Depth of the game tree; 0 for purely atomic games.
    pub fn birthday(&self) -> usize {
        self.0.birthday
    }

    /// Smallest atom anywhere in the game.
    pub fn min_atom(&self) -> &Score {
        &self.0.min_atom
    }

    /// Largest atom anywhere in the game.
    pub fn max_atom(&self) -> &Score {
        &self.0.max_atom
    }

    /// Largest absolute value of an atom in the game.
    pub fn max_abs_atom(&self) -> Score {
        self.0.min_atom.abs().max(self.0.max_atom.abs())
    }

    /// Membership in the guaranteed universe: at every atomic follower every
    /// atom under the Left side is at most every atom under the Right side.
    pub fn is_guaranteed(&self) -> bool {
        self.0.guaranteed
    }

    /// The first follower (in pre-order, options in canonical order) that
    /// breaks the guaranteed condition locally.
    pub fn guarantee_violation(&self) -> Option<Game> {
        fn walk(g: &Game, seen: &mut FxHashSet<u64>) -> Option<Game> {
            if g.is_guaranteed() || !seen.insert(g.id()) {
                return None;
            }
            if !local_condition(g.left(), g.right()) {
                return Some(g.clone());
            }
            g.left_options()
                .iter()
                .chain(g.right_options())
                .find_map(|o| walk(o, seen))
        }
        walk(self, &mut FxHashSet::default())
    }

    /// Left-stop: optimal alternating-play score with Left to move.
    pub fn ls(&self) -> &Score {
        &self.0.left_stop
    }

    /// Right-stop: optimal alternating-play score with Right to move.
    pub fn rs(&self) -> &Score {
        &self.0.right_stop
    }

    /// Swaps the players: sides exchange, options are conjugated, atoms are
    /// negated.
    pub fn conjugate(&self) -> Game {
        if let Some(g) = CONJUGATES.lock().unwrap().get(&self.id()) {
            return g.clone();
        }
        let flip = |side: &Side| match side {
            Side::Atom(s) => Side::Atom(-s),
            Side::Options(opts) => Side::Options(opts.iter().map(Game::conjugate).collect()),
        };
        let conj = Game::new(flip(self.right()), flip(self.left()));
        let mut cache = CONJUGATES.lock().unwrap();
        cache.insert(self.id(), conj.clone());
        cache.insert(conj.id(), self.clone());
        conj
    }

    /// Disjunctive sum. A side of the sum is an atom (the sum of the atoms)
    /// exactly when both summands are atomic on that side; otherwise it
    /// collects every move in either component.
    pub fn sum(&self, other: &Game) -> Game {
        if other.as_number().is_some_and(Score::is_zero) {
            return self.clone();
        }
        if self.as_number().is_some_and(Score::is_zero) {
            return other.clone();
        }
        let key = if self.id() <= other.id() {
            (self.id(), other.id())
        } else {
            (other.id(), self.id())
        };
        if let Some(g) = SUMS.lock().unwrap().get(&key) {
            return g.clone();
        }
        let side = |a: &Side, b: &Side| match (a, b) {
            (Side::Atom(x), Side::Atom(y)) => Side::Atom(x + y),
            _ => Side::Options(
                a.games()
                    .iter()
                    .map(|ao| ao.sum(other))
                    .chain(b.games().iter().map(|bo| self.sum(bo)))
                    .collect(),
            ),
        };
        let result = Game::new(side(self.left(), other.left()), side(self.right(), other.right()));
        SUMS.lock().unwrap().insert(key, result.clone());
        result
    }

    /// Sum of a sequence of games; the empty sum is `0`.
    pub fn sum_all<'a>(games: impl IntoIterator<Item = &'a Game>) -> Game {
        games.into_iter().fold(Game::zero(), |acc, g| acc.sum(g))
    }

    /// Every follower, including the game itself, each listed once.
    pub fn followers(&self) -> Vec<Game> {
        let mut seen = FxHashSet::default();
        let mut out = Vec::new();
        let mut stack = vec![self.clone()];
        while let Some(g) = stack.pop() {
            if !seen.insert(g.id()) {
                continue;
            }
            stack.extend(g.left_options().iter().cloned());
            stack.extend(g.right_options().iter().cloned());
            out.push(g);
        }
        out
    }

    /// The same tree with every atom replaced by `∅^x`.
    pub fn with_atoms(&self, x: &Score) -> Game {
        fn go(g: &Game, x: &Score, memo: &mut FxHashMap<u64, Game>) -> Game {
            if let Some(r) = memo.get(&g.id()) {
                return r.clone();
            }
            let mut side = |s: &Side| match s {
                Side::Atom(_) => Side::Atom(x.clone()),
                Side::Options(opts) => Side::Options(opts.iter().map(|o| go(o, x, memo)).collect()),
            };
            let left = side(g.left());
            let right = side(g.right());
            let r = Game::new(left, right);
            memo.insert(g.id(), r.clone());
            r
        }
        go(self, x, &mut FxHashMap::default())
    }
}

impl PartialEq for Game {
    fn eq(&self, other: &Game) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for Game {}

impl Hash for Game {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

/// Structural order, independent of interning ids, so option sets print and
/// iterate the same way in every run.
impl Ord for Game {
    fn cmp(&self, other: &Game) -> Ordering {
        if self.id() == other.id() {
            return Ordering::Equal;
        }
        self.left()
            .cmp(other.left())
            .then_with(|| self.right().cmp(other.right()))
    }
}

impl PartialOrd for Game {
    fn partial_cmp(&self, other: &Game) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Game {
    type Output = Game;
    fn add(self, rhs: &Game) -> Game {
        self.sum(rhs)
    }
}

impl Add for Game {
    type Output = Game;
    fn add(self, rhs: Game) -> Game {
        self.sum(&rhs)
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::cli::format_game(self, crate::cli::Style::Literal))
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Normal-play game tree; either side may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NormalPlayTree {
    pub left: Vec<NormalPlayTree>,
    pub right: Vec<NormalPlayTree>,
}

impl NormalPlayTree {
    pub fn new(left: Vec<NormalPlayTree>, right: Vec<NormalPlayTree>) -> NormalPlayTree {
        NormalPlayTree { left, right }
    }

    pub fn birthday(&self) -> usize {
        self.left
            .iter()
            .chain(&self.right)
            .map(|t| t.birthday() + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Embeds a Normal-play game by replacing every empty option set with the
/// atom `∅^0`.
pub fn embed_normal_play(tree: &NormalPlayTree) -> Game {
    let side = |opts: &[NormalPlayTree]| {
        if opts.is_empty() {
            Side::Atom(Score::zero())
        } else {
            Side::Options(opts.iter().map(embed_normal_play).collect())
        }
    };
    Game::new(side(&tree.left), side(&tree.right))
}

/// Atom-range summaries and the two extreme atom projections of a game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projections {
    pub min_score: Score,
    pub max_score: Score,
    /// Largest absolute atom value.
    pub m_abs: Score,
    /// The game with every atom replaced by `min_score`.
    pub g_min: Game,
    /// The game with every atom replaced by `max_score`.
    pub g_max: Game,
}

pub fn projections(g: &Game) -> Projections {
    Projections {
        min_score: g.min_atom().clone(),
        max_score: g.max_atom().clone(),
        m_abs: g.max_abs_atom(),
        g_min: g.with_atoms(g.min_atom()),
        g_max: g.with_atoms(g.max_atom()),
    }
}
