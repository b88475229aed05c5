mod common;

use common::*;
use proptest::prelude::*;
use scoring_games::canonical::canonical_form;
use scoring_games::cli::*;
use scoring_games::Game;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn literal_round_trip(g in medium_game()) {
        let text = format_game(&g, Style::Literal);
        prop_assert_eq!(parse_game(&text).unwrap(), g.clone());
        let c = canonical_form(&g).unwrap();
        prop_assert_eq!(parse_game(&format_game(&c, Style::Literal)).unwrap(), c);
    }

    #[test]
    fn session_round_trip(games in prop::collection::vec(small_game(), 1..6)) {
        let dir = tempfile::tempdir().unwrap();
        let mut s = Session::with_base_dir(dir.path());
        for (i, g) in games.iter().enumerate() {
            s.bindings.insert(format!("g{i}"), g.clone());
        }
        run_command("save out.txt", &mut s, Style::Literal).unwrap();
        let mut t = Session::with_base_dir(dir.path());
        run_command("load out.txt", &mut t, Style::Literal).unwrap();
        prop_assert_eq!(t.bindings, s.bindings);
    }
}

const SCRIPT: &str = "let a = <1|0>\nlet b = a + hat(2)\ncanon b + conj(b)\ncmp a, b\nstops b\ninvertible a\nbirthday b\nshow missing\n";

#[test]
fn transcripts_are_deterministic() {
    let (first, errs1) = run_batch(SCRIPT, &mut Session::new(), Style::Pretty);
    let (second, errs2) = run_batch(SCRIPT, &mut Session::new(), Style::Pretty);
    assert_eq!(first, second);
    assert_eq!((errs1, errs2), (1, 1));
}

#[test]
fn pickends_expression() {
    let mut s = Session::new();
    let out = run_command("show pickends [1, 2]", &mut s, Style::Literal).unwrap();
    assert_eq!(out, Outcome::Print("<<3|-1>, <3|1> | <-1|-3>, <1|-3>>".into()));
    let g = parse_game("<<3|-1>, <3|1> | <-1|-3>, <1|-3>>").unwrap();
    assert!(g.is_guaranteed());
    assert_ne!(g, Game::zero());
}
