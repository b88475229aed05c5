//! Reductions, canonical forms and invertibility.
//!
//! Four reductions preserve the equivalence class of a guaranteed game.
//! Stated for Left (Right is the mirror image):
//!
//! * a Left option dominated by another Left option is removed;
//! * a Left option `A` with a Right option `B ≼ G` (a *reversing* option) is
//!   bypassed, i.e. replaced by `B^L`, when `B` has Left options;
//! * when the reversing option is left-atomic, `B = ⟨∅^ℓ | B^R⟩`, then `A`
//!   is dropped if another Left option attains the lower Left-stop of `G`,
//!   and otherwise replaced by `ℓ - (n+1)̂` with `n` the least index such
//!   that `G ≽ ℓ - n̂`;
//! * a sole Left option of that kind is replaced by the atom `∅^ℓ` whenever
//!   `⟨∅^ℓ | G^R⟩` is still guaranteed.
//!
//! A game where none of these applies at any follower is *reduced*, and
//! each equivalence class has exactly one reduced member, its canonical
//! form.

use std::sync::{LazyLock, Mutex};

use rustc_hash::FxHashMap;

use crate::error::{require_guaranteed, GameError, Result};
use crate::game::{Game, Player, Side};
use crate::order::{compare_unchecked, ge_unchecked, OrderResult};
use crate::score::Score;
use crate::stops::{pass_stop_unchecked, StopKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    RemoveDominated,
    BypassNonAtomicReversible,
    DropAtomicReversible,
    ReplaceAtomicReversible,
    SubstituteLoneAtomic,
}

/// What takes the place of the target option.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Replacement {
    Remove,
    /// The target is replaced by these options (which may already be
    /// present on that side).
    Options(Vec<Game>),
    /// The whole side becomes this atom.
    Atom(Score),
}

/// One applicable reduction of a game, expressed in the game's own frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub side: Player,
    pub target: Game,
    /// For domination: the option that dominates `target`.
    pub dominating: Option<Game>,
    /// For reversibility: the reversing option of `target`.
    pub reversing: Option<Game>,
    /// Atom of a left-atomic (for Right: right-atomic) reversing option.
    pub score: Option<Score>,
    /// Waiting index `n` of a `ℓ - (n+1)̂` replacement.
    pub waiting_index: Option<usize>,
    pub replacement: Replacement,
}

impl ReductionStep {
    fn conjugate(self) -> ReductionStep {
        ReductionStep {
            kind: self.kind,
            side: self.side.opponent(),
            target: self.target.conjugate(),
            dominating: self.dominating.map(|g| g.conjugate()),
            reversing: self.reversing.map(|g| g.conjugate()),
            score: self.score.map(|s| -s),
            waiting_index: self.waiting_index,
            replacement: match self.replacement {
                Replacement::Remove => Replacement::Remove,
                Replacement::Options(v) => {
                    Replacement::Options(v.iter().map(Game::conjugate).collect())
                }
                Replacement::Atom(s) => Replacement::Atom(-s),
            },
        }
    }
}

fn replace_option(g: &Game, side: Player, target: &Game, with: Game) -> Game {
    let opts = g
        .options(side)
        .iter()
        .map(|o| if o == target { with.clone() } else { o.clone() })
        .collect();
    match side {
        Player::Left => Game::new(Side::Options(opts), g.right().clone()),
        Player::Right => Game::new(g.left().clone(), Side::Options(opts)),
    }
}

/// Applies a step produced for `g`.
pub fn apply_step(g: &Game, step: &ReductionStep) -> Game {
    let new_side = match &step.replacement {
        Replacement::Atom(s) => Side::Atom(s.clone()),
        Replacement::Remove | Replacement::Options(_) => {
            let mut opts: Vec<Game> = g
                .options(step.side)
                .iter()
                .filter(|&o| *o != step.target)
                .cloned()
                .collect();
            if let Replacement::Options(extra) = &step.replacement {
                opts.extend(extra.iter().cloned());
            }
            Side::Options(opts)
        }
    };
    match step.side {
        Player::Left => Game::new(new_side, g.right().clone()),
        Player::Right => Game::new(g.left().clone(), new_side),
    }
}

fn dominated_left(g: &Game) -> Vec<ReductionStep> {
    let opts = g.left_options();
    if opts.len() < 2 {
        return Vec::new();
    }
    let mut steps = Vec::new();
    for (i, a) in opts.iter().enumerate() {
        // Among equivalent options the canonically first one is kept.
        let dominating = opts.iter().enumerate().find(|&(j, b)| {
            j != i && ge_unchecked(b, a) && (j < i || !ge_unchecked(a, b))
        });
        if let Some((_, b)) = dominating {
            steps.push(ReductionStep {
                kind: ReductionKind::RemoveDominated,
                side: Player::Left,
                target: a.clone(),
                dominating: Some(b.clone()),
                reversing: None,
                score: None,
                waiting_index: None,
                replacement: Replacement::Remove,
            });
        }
    }
    steps
}

fn lower_ls(g: &Game) -> Score {
    pass_stop_unchecked(g, StopKind::LS_RIGHT_PASSES)
}

fn lower_rs(g: &Game) -> Score {
    pass_stop_unchecked(g, StopKind::RS_RIGHT_PASSES)
}

/// Least `n ≥ 0` with `G ≽ ℓ - n̂`.
pub fn min_waiting_index(g: &Game, score: &Score) -> Result<usize> {
    require_guaranteed(g)?;
    min_waiting_index_unchecked(g, score)
}

fn min_waiting_index_unchecked(g: &Game, score: &Score) -> Result<usize> {
    // A reversing option is a proper follower, so its birthday (which bounds
    // the answer) is below b(G).
    let limit = g.birthday();
    (0..=limit)
        .find(|&n| ge_unchecked(g, &Game::number_minus_hat(score.clone(), n)))
        .ok_or_else(|| GameError::WaitingIndexNotFound {
            game: g.clone(),
            score: score.clone(),
            limit,
        })
}

/// Reversibility steps for Left options, split into non-atomic and atomic.
fn reversible_left(g: &Game) -> Result<(Vec<ReductionStep>, Vec<ReductionStep>)> {
    let mut non_atomic = Vec::new();
    let mut atomic = Vec::new();
    for a in g.left_options() {
        for b in a.right_options() {
            if !ge_unchecked(g, b) {
                continue;
            }
            let step = |kind, score, waiting_index, replacement| ReductionStep {
                kind,
                side: Player::Left,
                target: a.clone(),
                dominating: None,
                reversing: Some(b.clone()),
                score,
                waiting_index,
                replacement,
            };
            let Some(ell) = b.left_atom() else {
                non_atomic.push(step(
                    ReductionKind::BypassNonAtomicReversible,
                    None,
                    None,
                    Replacement::Options(b.left_options().to_vec()),
                ));
                continue;
            };

            let target_stop = lower_ls(g);
            let others: Vec<&Game> = g.left_options().iter().filter(|&o| o != a).collect();
            let other_stops: Vec<Score> = others.iter().map(|o| lower_rs(o)).collect();
            if other_stops.contains(&target_stop) {
                atomic.push(step(
                    ReductionKind::DropAtomicReversible,
                    Some(ell.clone()),
                    None,
                    Replacement::Remove,
                ));
                continue;
            }
            if lower_rs(a) != target_stop || other_stops.iter().any(|s| *s > target_stop) {
                return Err(GameError::Invariant(format!(
                    "atomic-reversible option {a} of {g} attains neither reversibility case"
                )));
            }
            let n = min_waiting_index_unchecked(g, ell)?;
            let replacement = Game::number_minus_hat(ell.clone(), n + 1);
            if replacement != *a {
                atomic.push(step(
                    ReductionKind::ReplaceAtomicReversible,
                    Some(ell.clone()),
                    Some(n),
                    Replacement::Options(vec![replacement]),
                ));
            }
            if others.is_empty() && Game::new(Side::Atom(ell.clone()), g.right().clone()).is_guaranteed() {
                atomic.push(step(
                    ReductionKind::SubstituteLoneAtomic,
                    Some(ell.clone()),
                    Some(n),
                    Replacement::Atom(ell.clone()),
                ));
            }
        }
    }
    Ok((non_atomic, atomic))
}

/// Every reduction applicable at the top level of `g`, in the fixed scan
/// order: domination, then non-atomic reversibility, then the atomic cases;
/// Left before Right within each group, options in canonical order.
pub fn reduction_steps(g: &Game) -> Result<Vec<ReductionStep>> {
    require_guaranteed(g)?;
    let conj = g.conjugate();
    let mirror = |steps: Vec<ReductionStep>| steps.into_iter().map(ReductionStep::conjugate);

    let mut steps = dominated_left(g);
    steps.extend(mirror(dominated_left(&conj)));
    let (left_non_atomic, left_atomic) = reversible_left(g)?;
    let (right_non_atomic, right_atomic) = reversible_left(&conj)?;
    steps.extend(left_non_atomic);
    steps.extend(mirror(right_non_atomic));
    steps.extend(left_atomic);
    steps.extend(mirror(right_atomic));
    Ok(steps)
}

/// First dominated option of `g` (Left before Right), if any.
pub fn find_dominated(g: &Game) -> Result<Option<ReductionStep>> {
    require_guaranteed(g)?;
    if let Some(step) = dominated_left(g).into_iter().next() {
        return Ok(Some(step));
    }
    Ok(dominated_left(&g.conjugate())
        .into_iter()
        .next()
        .map(ReductionStep::conjugate))
}

/// First reversibility reduction of `g` in scan order, if any.
pub fn find_reversible(g: &Game) -> Result<Option<ReductionStep>> {
    Ok(reduction_steps(g)?
        .into_iter()
        .find(|s| s.kind != ReductionKind::RemoveDominated))
}

static CANONICAL: LazyLock<Mutex<FxHashMap<u64, Game>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));
static REDUCED: LazyLock<Mutex<FxHashMap<u64, bool>>> =
    LazyLock::new(|| Mutex::new(FxHashMap::default()));

const STEP_LIMIT: usize = 100_000;

/// The unique reduced game equivalent to `g`.
pub fn canonical_form(g: &Game) -> Result<Game> {
    require_guaranteed(g)?;
    canonical_unchecked(g)
}

fn canonical_unchecked(g: &Game) -> Result<Game> {
    if g.is_purely_atomic() {
        return Ok(g.clone());
    }
    if let Some(c) = CANONICAL.lock().unwrap().get(&g.id()) {
        return Ok(c.clone());
    }
    let canon_side = |side: &Side| -> Result<Side> {
        Ok(match side {
            Side::Atom(s) => Side::Atom(s.clone()),
            Side::Options(opts) => {
                Side::Options(opts.iter().map(canonical_unchecked).collect::<Result<_>>()?)
            }
        })
    };
    let mut current = Game::new(canon_side(g.left())?, canon_side(g.right())?);
    let mut steps = 0;
    while let Some(step) = reduction_steps(&current)?.into_iter().next() {
        current = apply_step(&current, &step);
        steps += 1;
        if steps > STEP_LIMIT {
            return Err(GameError::Invariant(format!("reduction of {g} does not terminate")));
        }
    }
    let mut cache = CANONICAL.lock().unwrap();
    cache.insert(g.id(), current.clone());
    cache.insert(current.id(), current.clone());
    Ok(current)
}

/// Whether no reduction applies to `g` or to any of its followers.
pub fn is_reduced(g: &Game) -> Result<bool> {
    require_guaranteed(g)?;
    is_reduced_unchecked(g)
}

fn is_reduced_unchecked(g: &Game) -> Result<bool> {
    if g.is_purely_atomic() {
        return Ok(true);
    }
    if let Some(&v) = REDUCED.lock().unwrap().get(&g.id()) {
        return Ok(v);
    }
    let mut reduced = reduction_steps(g)?.is_empty();
    for o in g.left_options().iter().chain(g.right_options()) {
        if !reduced {
            break;
        }
        reduced = is_reduced_unchecked(o)?;
    }
    REDUCED.lock().unwrap().insert(g.id(), reduced);
    Ok(reduced)
}

/// Reduces `g` to a reduced form, letting `choose(k)` pick which of `k`
/// available moves to make next. A move is either a top-level reduction
/// step or a recursive reduction of one unreduced option, so any
/// interleaving of reductions across followers can be produced.
pub fn reduce_with(g: &Game, choose: &mut dyn FnMut(usize) -> usize) -> Result<Game> {
    require_guaranteed(g)?;
    let mut current = g.clone();
    for _ in 0..STEP_LIMIT {
        let steps = reduction_steps(&current)?;
        let mut unreduced = Vec::new();
        for (player, o) in current
            .left_options()
            .iter()
            .map(|o| (Player::Left, o))
            .chain(current.right_options().iter().map(|o| (Player::Right, o)))
        {
            if !is_reduced_unchecked(o)? {
                unreduced.push((player, o.clone()));
            }
        }
        let total = steps.len() + unreduced.len();
        if total == 0 {
            return Ok(current);
        }
        let pick = choose(total) % total;
        current = if pick < steps.len() {
            apply_step(&current, &steps[pick])
        } else {
            let (player, option) = &unreduced[pick - steps.len()];
            let reduced = reduce_with(option, choose)?;
            replace_option(&current, *player, option, reduced)
        };
    }
    Err(GameError::Invariant(format!("reduction of {g} does not terminate")))
}

/// Whether some `H` has `G + H ∼ 0`. Only the conjugate can be such an
/// inverse, so this checks `G + conj(G) ∼ 0`; games with `Ls < Rs` are
/// rejected immediately.
pub fn invertible(g: &Game) -> Result<bool> {
    require_guaranteed(g)?;
    if g.ls() < g.rs() {
        return Ok(false);
    }
    Ok(compare_unchecked(&g.sum(&g.conjugate()), &Game::zero()) == OrderResult::Equivalent)
}

pub fn inverse(g: &Game) -> Result<Option<Game>> {
    Ok(invertible(g)?.then(|| g.conjugate()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::compare;

    fn n(s: i64) -> Game {
        Game::number(s)
    }

    fn opts(games: &[Game]) -> Side {
        Side::Options(games.to_vec())
    }

    /// `⟨-1, ⟨∅^1|⟨∅^1|∅^2⟩⟩ | ⟨2|2⟩⟩` and its canonical form
    /// `⟨-1, 1 - 1̂ | ⟨2|2⟩⟩`.
    fn same_depth_example() -> (Game, Game) {
        let two_two = Game::new(opts(&[n(2)]), opts(&[n(2)]));
        let reversible = Game::new(Side::atom(1), opts(&[Game::atomic(1, 2)]));
        let h = Game::new(opts(&[n(-1), reversible]), opts(&[two_two.clone()]));
        let one_minus_hat = Game::new(Side::atom(1), opts(&[n(1)]));
        let g = Game::new(opts(&[n(-1), one_minus_hat]), opts(&[two_two]));
        (h, g)
    }

    #[test]
    fn domination() {
        let g = Game::new(opts(&[n(0), n(1)]), Side::atom(1));
        let step = find_dominated(&g).unwrap().unwrap();
        assert_eq!(step.kind, ReductionKind::RemoveDominated);
        assert_eq!(step.side, Player::Left);
        assert_eq!(step.target, n(0));
        assert_eq!(apply_step(&g, &step), Game::new(opts(&[n(1)]), Side::atom(1)));

        assert_eq!(find_dominated(&n(4)).unwrap(), None);
        let star = Game::new(opts(&[n(0)]), opts(&[n(0)]));
        assert_eq!(find_dominated(&star).unwrap(), None);

        // Right prefers smaller options
        let r = Game::new(Side::atom(-3), opts(&[n(0), n(1)]));
        let step = find_dominated(&r).unwrap().unwrap();
        assert_eq!((step.side, step.target), (Player::Right, n(1)));
    }

    #[test]
    fn substitute_lone_atomic() {
        let s = Game::hat(1).sum(&Game::hat(1).conjugate());
        assert_eq!(s.left_options(), &[Game::hat(1).conjugate()]);
        let step = find_reversible(&s).unwrap().unwrap();
        assert_eq!(step.kind, ReductionKind::SubstituteLoneAtomic);
        assert_eq!(step.side, Player::Left);
        assert_eq!(step.reversing, Some(n(0)));
        assert_eq!(step.replacement, Replacement::Atom(Score::zero()));
        assert_eq!(
            apply_step(&s, &step),
            Game::new(Side::atom(0), opts(&[Game::hat(1)]))
        );
    }

    #[test]
    fn replace_atomic_reversible() {
        let (h, g) = same_depth_example();
        let step = find_reversible(&h).unwrap().unwrap();
        assert_eq!(step.kind, ReductionKind::ReplaceAtomicReversible);
        assert_eq!(step.waiting_index, Some(0));
        assert_eq!(step.score, Some(Score::from(1)));
        assert_eq!(apply_step(&h, &step), g);
        assert_eq!(find_reversible(&n(3)).unwrap(), None);
    }

    #[test]
    fn waiting_indices() {
        assert_eq!(min_waiting_index(&n(2), &Score::from(2)).unwrap(), 0);
        assert_eq!(min_waiting_index(&same_depth_example().0, &Score::from(1)).unwrap(), 0);
        assert_eq!(min_waiting_index(&Game::hat(2), &Score::zero()).unwrap(), 0);
        assert_eq!(min_waiting_index(&Game::hat(2).conjugate(), &Score::zero()).unwrap(), 2);
        assert!(matches!(
            min_waiting_index(&n(0), &Score::from(1)),
            Err(GameError::WaitingIndexNotFound { .. })
        ));
    }

    #[test]
    fn canonical_examples() {
        let (h, g) = same_depth_example();
        assert_eq!(canonical_form(&h).unwrap(), g);
        assert!(is_reduced(&g).unwrap());
        assert!(!is_reduced(&h).unwrap());
        assert_eq!(canonical_form(&n(7)).unwrap(), n(7));
        let cancel = Game::hat(1).sum(&Game::hat(1).conjugate());
        assert_eq!(canonical_form(&cancel).unwrap(), Game::zero());
        assert!(!is_reduced(&Game::new(opts(&[n(0), n(1)]), Side::atom(1))).unwrap());
        assert!(is_reduced(&n(0)).unwrap());
    }

    #[test]
    fn canonical_form_of_waiting_moves_is_itself() {
        for k in 0..4 {
            assert_eq!(canonical_form(&Game::hat(k)).unwrap(), Game::hat(k));
        }
    }

    #[test]
    fn invertibility() {
        for l in -2..=2 {
            for r in l..=2 {
                assert_eq!(invertible(&Game::atomic(l, r)).unwrap(), l == r);
            }
        }
        let g = Game::new(opts(&[Game::new(opts(&[n(-1)]), opts(&[n(1)]))]), opts(&[n(0)]));
        assert!(!invertible(&g).unwrap());
        for k in 0..=4 {
            assert!(invertible(&Game::hat(k)).unwrap());
            assert_eq!(inverse(&Game::hat(k)).unwrap(), Some(Game::hat(k).conjugate()));
        }
        // zugzwang
        let z = Game::new(Side::atom(0), Side::atom(1));
        assert_eq!(inverse(&z).unwrap(), None);
    }

    #[test]
    fn randomized_reduction_matches_canonical() {
        let (h, g) = same_depth_example();
        let mut counter = 0usize;
        let mut choose = |k: usize| {
            counter += 1;
            counter % k
        };
        assert_eq!(reduce_with(&h, &mut choose).unwrap(), g);
        let result = reduce_with(&Game::hat(2).sum(&Game::hat(2).conjugate()), &mut choose).unwrap();
        assert_eq!(result, Game::zero());
        assert_eq!(compare(&result, &Game::zero()).unwrap(), OrderResult::Equivalent);
    }
}
