//! Text front end: game literals, expressions, commands and session files.

mod format;
mod parse;
mod session;

pub use format::{format_game, Style};
pub use parse::{parse_expr, parse_game, Expr, ParseError};
pub use session::{run_batch, run_command, CliError, Outcome, Session};
