mod common;

use common::*;
use proptest::prelude::*;
use scoring_games::stops::*;
use scoring_games::{Game, Score};

fn under_ls(g: &Game) -> Score {
    ls_right_passes(g).unwrap()
}
fn over_rs(g: &Game) -> Score {
    rs_left_passes(g).unwrap()
}
fn over_ls(g: &Game) -> Score {
    ls_left_passes(g).unwrap()
}
fn under_rs(g: &Game) -> Score {
    rs_right_passes(g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn stops_are_attained(g in medium_game()) {
        if !g.is_left_atomic() {
            prop_assert!(g.left_options().iter().any(|gl| rs(gl) == ls(&g)));
            prop_assert!(g.left_options().iter().all(|gl| rs(gl) <= ls(&g)));
        }
        if !g.is_right_atomic() {
            prop_assert!(g.right_options().iter().any(|gr| ls(gr) == rs(&g)));
            prop_assert!(g.right_options().iter().all(|gr| ls(gr) >= rs(&g)));
        }
    }

    #[test]
    fn stops_translate(g in medium_game(), x in score()) {
        let t = g.sum(&Game::number(x.clone()));
        prop_assert_eq!(ls(&t), &ls(&g) + &x);
        prop_assert_eq!(rs(&t), &rs(&g) + &x);
        prop_assert_eq!(under_ls(&t), &under_ls(&g) + &x);
        prop_assert_eq!(over_rs(&t), &over_rs(&g) + &x);
    }

    #[test]
    fn waiting_supply_stabilizes(g in small_game()) {
        let b = g.birthday();
        for n in b..=b + 3 {
            prop_assert_eq!(ls(&g.sum(&Game::hat(n).conjugate())), under_ls(&g));
            prop_assert_eq!(rs(&g.sum(&Game::hat(n))), over_rs(&g));
            // the mover may open with a pass, which costs one waiting move
            let m = n + 1;
            prop_assert_eq!(ls(&g.sum(&Game::hat(m))), over_ls(&g));
            prop_assert_eq!(rs(&g.sum(&Game::hat(m).conjugate())), under_rs(&g));
        }
    }

    #[test]
    fn pass_stops_bracket_stops(g in medium_game()) {
        prop_assert!(under_ls(&g) <= ls(&g) && ls(&g) <= over_ls(&g));
        prop_assert!(under_rs(&g) <= rs(&g) && rs(&g) <= over_rs(&g));
    }

    #[test]
    fn pass_stops_of_sums(g in small_game(), h in small_game()) {
        let s = g.sum(&h);
        prop_assert!(&under_ls(&g) + &under_rs(&h) <= under_ls(&s));
        prop_assert!(under_ls(&s) <= &under_ls(&g) + &under_ls(&h));
        prop_assert!(&over_rs(&g) + &over_rs(&h) <= over_rs(&s));
        prop_assert!(over_rs(&s) <= &over_rs(&g) + &over_ls(&h));
    }

    #[test]
    fn lower_left_stop_is_attained(g in medium_game()) {
        if !g.is_left_atomic() {
            let best = g.left_options().iter().map(under_rs).max().unwrap();
            prop_assert_eq!(under_ls(&g), best);
        }
    }

    #[test]
    fn all_stops_agree(g in small_game()) {
        let s = all_stops(&g).unwrap();
        prop_assert_eq!(s.ls, ls(&g));
        prop_assert_eq!(s.rs, rs(&g));
        prop_assert_eq!(s.ls_right_passes, under_ls(&g));
        prop_assert_eq!(s.rs_left_passes, over_rs(&g));
        prop_assert_eq!(s.ls_left_passes, over_ls(&g));
        prop_assert_eq!(s.rs_right_passes, under_rs(&g));
    }
}

#[test]
fn stops_by_definition() {
    let g = Game::new(
        scoring_games::Side::options([Game::number(-1)]),
        scoring_games::Side::options([Game::number(2)]),
    );
    assert_eq!(ls(&g), Score::from(-1));
    assert_eq!(rs(&g), Score::from(2));
    assert!(all_stops(&Game::new(scoring_games::Side::atom(5), scoring_games::Side::options([Game::number(4)]))).is_err());
}
