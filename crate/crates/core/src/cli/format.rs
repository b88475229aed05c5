use std::fmt::Write;

use crate::game::{Game, Side};
use crate::score::Score;

/// Output style for game values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    /// Exactly the input grammar; parses back to the identical game.
    #[default]
    Literal,
    /// Numbers plus waiting moves print as `^n`, `-^n`, `s+^n`, `s-^n`.
    Pretty,
}

/// Formats a game. Sides are separated by ` | ` when either side has more
/// than one option, and by a bare `|` otherwise.
pub fn format_game(g: &Game, style: Style) -> String {
    let mut out = String::new();
    write_game(&mut out, g, style);
    out
}

fn write_game(out: &mut String, g: &Game, style: Style) {
    if let Some(s) = g.as_number() {
        write!(out, "{s}").unwrap();
        return;
    }
    if style == Style::Pretty {
        if let Some((s, n)) = waiting_form(g) {
            let base = if s.is_zero() { String::new() } else { s.to_string() };
            let sign = if n > 0 {
                if s.is_zero() { "" } else { "+" }
            } else {
                "-"
            };
            write!(out, "{base}{sign}^{}", n.unsigned_abs()).unwrap();
            return;
        }
    }
    let wide = g.left_options().len() > 1 || g.right_options().len() > 1;
    out.push('<');
    write_side(out, g.left(), style);
    out.push_str(if wide { " | " } else { "|" });
    write_side(out, g.right(), style);
    out.push('>');
}

fn write_side(out: &mut String, side: &Side, style: Style) {
    match side {
        Side::Atom(s) => write!(out, "E{s}").unwrap(),
        Side::Options(opts) => {
            for (i, o) in opts.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_game(out, o, style);
            }
        }
    }
}

/// Recognizes `s + n̂` (positive `n`) and `s - |n|̂` (negative `n`).
fn waiting_form(g: &Game) -> Option<(Score, i64)> {
    if let Some(s) = g.as_number() {
        return Some((s.clone(), 0));
    }
    match (g.left(), g.right()) {
        (Side::Options(l), Side::Atom(r)) if l.len() == 1 => {
            let (s, n) = waiting_form(&l[0])?;
            (n >= 0 && s == *r).then_some((s, n + 1))
        }
        (Side::Atom(l), Side::Options(r)) if r.len() == 1 => {
            let (s, n) = waiting_form(&r[0])?;
            (n <= 0 && s == *l).then_some((s, n - 1))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal() {
        assert_eq!(format_game(&Game::number(Score::new(1, 2)), Style::Literal), "1/2");
        assert_eq!(format_game(&Game::hat(2), Style::Literal), "<<0|E0>|E0>");
        assert_eq!(format_game(&Game::atomic(-1, 2), Style::Literal), "<E-1|E2>");
        let g = Game::new(
            Side::options([Game::number(-1), Game::number_minus_hat(1, 1)]),
            Side::options([Game::new(Side::options([Game::number(2)]), Side::options([Game::number(2)]))]),
        );
        assert_eq!(format_game(&g, Style::Literal), "<-1, <E1|1> | <2|2>>");
        assert_eq!(format_game(&g, Style::Pretty), "<-1, 1-^1 | <2|2>>");
    }

    #[test]
    fn pretty_waiting_moves() {
        assert_eq!(format_game(&Game::hat(2), Style::Pretty), "^2");
        assert_eq!(format_game(&Game::hat(3).conjugate(), Style::Pretty), "-^3");
        assert_eq!(format_game(&Game::number(2).sum(&Game::hat(1)), Style::Pretty), "2+^1");
        assert_eq!(
            format_game(&Game::number(Score::new(-1, 2)).sum(&Game::hat(2).conjugate()), Style::Pretty),
            "-1/2-^2"
        );
        assert_eq!(format_game(&Game::number(5), Style::Pretty), "5");
    }
}
