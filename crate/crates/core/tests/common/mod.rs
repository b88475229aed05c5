//! Generators, corpora and independent oracles shared by the integration
//! tests and the acceptance suite.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use scoring_games::game::{NormalPlayTree, Side};
use scoring_games::order::{enumerate_guaranteed, OracleConfig};
use scoring_games::{Game, Score};

/// Unrepaired random tree; sides hold an atom index or a list of subtrees.
#[derive(Clone, Debug)]
pub enum RawSide {
    Atom(Score),
    Options(Vec<RawTree>),
}

#[derive(Clone, Debug)]
pub struct RawTree {
    pub left: RawSide,
    pub right: RawSide,
}

pub fn ints(values: &[i64]) -> Vec<Score> {
    values.iter().map(|&v| Score::from(v)).collect()
}

/// The default atom palette: small integers and a few halves.
pub fn palette() -> Vec<Score> {
    let mut p = ints(&[-2, -1, 0, 1, 2]);
    p.extend([Score::new(-1, 2), Score::new(1, 2), Score::new(3, 2)]);
    p
}

pub fn raw_tree(depth: u32, scores: Vec<Score>, max_width: usize) -> impl Strategy<Value = RawTree> {
    let atom = prop::sample::select(scores);
    let leaf = (atom.clone(), atom.clone())
        .prop_map(|(l, r)| RawTree { left: RawSide::Atom(l), right: RawSide::Atom(r) });
    leaf.prop_recursive(depth, 64, max_width as u32, move |inner| {
        let side = prop_oneof![
            1 => atom.clone().prop_map(RawSide::Atom),
            3 => prop::collection::vec(inner, 1..=max_width).prop_map(RawSide::Options),
        ];
        (side.clone(), side).prop_map(|(left, right)| RawTree { left, right })
    })
}

/// Builds a guaranteed game from a raw tree, moving offending atoms toward
/// the opposite side's extreme atom.
pub fn repair(t: &RawTree) -> Game {
    let build = |s: &RawSide| match s {
        RawSide::Atom(a) => Side::Atom(a.clone()),
        RawSide::Options(o) => Side::Options(o.iter().map(repair).collect()),
    };
    let mut left = build(&t.left);
    let mut right = build(&t.right);
    match (&mut left, &mut right) {
        (Side::Atom(l), Side::Atom(r)) => {
            if *l > *r {
                *l = r.clone();
            }
        }
        (Side::Atom(l), Side::Options(opts)) => {
            let m = opts.iter().map(|g| g.min_atom()).min().unwrap().clone();
            if *l > m {
                *l = m;
            }
        }
        (Side::Options(opts), Side::Atom(r)) => {
            let m = opts.iter().map(|g| g.max_atom()).max().unwrap().clone();
            if *r < m {
                *r = m;
            }
        }
        _ => {}
    }
    let g = Game::new(left, right);
    assert!(g.is_guaranteed(), "repair failed on {g}");
    g
}

/// Random guaranteed games of birthday at most `depth`.
pub fn guaranteed_game(depth: u32, scores: Vec<Score>, max_width: usize) -> impl Strategy<Value = Game> {
    raw_tree(depth, scores, max_width).prop_map(|t| repair(&t))
}

pub fn small_game() -> impl Strategy<Value = Game> {
    guaranteed_game(2, palette(), 2)
}

pub fn medium_game() -> impl Strategy<Value = Game> {
    guaranteed_game(3, palette(), 2)
}

pub fn score() -> impl Strategy<Value = Score> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Score::new(n, d))
}

/// Draws `count` values from a strategy with a fixed seed.
pub fn sample<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..count)
        .map(|_| strategy.new_tree(&mut runner).expect("strategy rejected").current())
        .collect()
}

/// Every guaranteed game of birthday at most 1 with atoms in {-1, 0, 1},
/// followed by a fixed sample of birthday-2 games over the same atoms.
pub fn unit_corpus(day_two_samples: usize) -> Vec<Game> {
    let atoms = ints(&[-1, 0, 1]);
    let config = OracleConfig::new(1, atoms.clone()).with_max_width(usize::MAX);
    let mut corpus = enumerate_guaranteed(&config).expect("birthday-1 enumeration");
    let mut seen: std::collections::HashSet<Game> = corpus.iter().cloned().collect();
    let mut added = 0;
    for g in sample(guaranteed_game(2, atoms, 3), day_two_samples * 4) {
        if added == day_two_samples {
            break;
        }
        if g.birthday() == 2 && seen.insert(g.clone()) {
            corpus.push(g);
            added += 1;
        }
    }
    corpus
}

/// Structural comparison that ignores interning.
pub fn deep_eq(a: &Game, b: &Game) -> bool {
    fn side_eq(x: &Side, y: &Side) -> bool {
        match (x, y) {
            (Side::Atom(p), Side::Atom(q)) => p == q,
            (Side::Options(p), Side::Options(q)) => {
                p.len() == q.len() && p.iter().zip(q).all(|(g, h)| deep_eq(g, h))
            }
            _ => false,
        }
    }
    side_eq(a.left(), b.left()) && side_eq(a.right(), b.right())
}

/// `G + x` by the four-case translation formula, built directly.
pub fn translate(g: &Game, x: &Score) -> Game {
    let side = |s: &Side| match s {
        Side::Atom(a) => Side::Atom(a + x),
        Side::Options(o) => Side::Options(o.iter().map(|h| translate(h, x)).collect()),
    };
    Game::new(side(g.left()), side(g.right()))
}

/// All Normal-play trees born by `day`, as distinct forms.
pub fn normal_play_forms(day: usize) -> Vec<NormalPlayTree> {
    let mut forms = vec![NormalPlayTree::default()];
    for _ in 0..day {
        let subsets: Vec<Vec<NormalPlayTree>> = (0..1u64 << forms.len())
            .map(|mask| {
                forms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, f)| f.clone())
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for l in &subsets {
            for r in &subsets {
                next.push(NormalPlayTree::new(l.clone(), r.clone()));
            }
        }
        forms = next;
    }
    forms
}

fn np_negate(t: &NormalPlayTree) -> NormalPlayTree {
    NormalPlayTree::new(t.right.iter().map(np_negate).collect(), t.left.iter().map(np_negate).collect())
}

fn np_left_wins_second(g: &NormalPlayTree, h: &NormalPlayTree) -> bool {
    // Right to move in g + h; Left wins if every Right move loses.
    g.right.iter().all(|gr| np_left_wins_first(gr, h)) && h.right.iter().all(|hr| np_left_wins_first(g, hr))
}

fn np_left_wins_first(g: &NormalPlayTree, h: &NormalPlayTree) -> bool {
    g.left.iter().any(|gl| np_left_wins_second(gl, h)) || h.left.iter().any(|hl| np_left_wins_second(g, hl))
}

/// Normal-play order: `G >= H` iff Left wins `G - H` moving second.
pub fn normal_play_ge(g: &NormalPlayTree, h: &NormalPlayTree) -> bool {
    np_left_wins_second(g, &np_negate(h))
}
