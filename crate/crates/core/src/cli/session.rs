use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::format::{format_game, Style};
use super::parse::{parse_game, Expr, ParseError, Parser};
use crate::canonical::{canonical_form, invertible};
use crate::error::GameError;
use crate::game::Game;
use crate::order::compare;
use crate::pickends::PickEndsPosition;
use crate::stops::all_stops;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("usage: {0}")]
    Usage(&'static str),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}, line {line}: {message}")]
    SessionFile { path: String, line: usize, message: String },
}

/// What a command asks the caller to do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Print(String),
    Silent,
    Quit,
}

/// Named bindings plus the directory relative paths resolve against.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub bindings: BTreeMap<String, Game>,
    pub base_dir: PathBuf,
}

impl Session {
    pub fn new() -> Session {
        Session::default()
    }

    pub fn with_base_dir(dir: impl Into<PathBuf>) -> Session {
        Session { bindings: BTreeMap::new(), base_dir: dir.into() }
    }

    pub fn get(&self, name: &str) -> Option<&Game> {
        self.bindings.get(name)
    }

    pub fn eval(&self, e: &Expr) -> Result<Game, CliError> {
        Ok(match e {
            Expr::Literal(g) => g.clone(),
            Expr::Number(s) => Game::number(s.clone()),
            Expr::Name(n) => self.get(n).cloned().ok_or_else(|| CliError::Unbound(n.clone()))?,
            Expr::Sum(a, b) => self.eval(a)?.sum(&self.eval(b)?),
            Expr::Conjugate(a) => self.eval(a)?.conjugate(),
            Expr::Hat(n) => Game::hat(*n),
            Expr::Canon(a) => canonical_form(&self.eval(a)?)?,
            Expr::PickEnds(pieces) => PickEndsPosition::start(pieces.clone()).to_game()?,
        })
    }

    /// The session file text: `name = literal` per line, sorted by name.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (name, g) in &self.bindings {
            writeln!(out, "{name} = {}", format_game(g, Style::Literal)).unwrap();
        }
        out
    }

    /// Parses session file text. `path` only labels errors.
    pub fn deserialize(text: &str, path: &str) -> Result<BTreeMap<String, Game>, CliError> {
        let mut out = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let err = |message: String| CliError::SessionFile { path: path.to_string(), line: i + 1, message };
            let (name, lit) = line.split_once('=').ok_or_else(|| err("expected `name = game`".into()))?;
            let name = name.trim();
            if !is_name(name) {
                return Err(err(format!("invalid name `{name}`")));
            }
            let g = parse_game(lit).map_err(|e| err(e.to_string()))?;
            out.insert(name.to_string(), g);
        }
        Ok(out)
    }

    fn resolve(&self, path: &str) -> PathBuf {
        let p = Path::new(path);
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base_dir.join(p)
        }
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&s)
}

const RESERVED: &[&str] = &["hat", "conj", "canon", "pickends"];

fn bool_text(b: bool) -> String {
    b.to_string()
}

/// Executes one command line.
pub fn run_command(line: &str, session: &mut Session, style: Style) -> Result<Outcome, CliError> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(Outcome::Silent);
    }
    let mut p = Parser::new(trimmed);
    let Some(cmd) = p.ident() else {
        return Err(CliError::UnknownCommand(trimmed.split_whitespace().next().unwrap_or("").to_string()));
    };
    let show = |g: &Game| format_game(g, style);
    let text = match cmd {
        "let" => {
            let name = p.ident().ok_or(CliError::Usage("let NAME = EXPR"))?;
            if RESERVED.contains(&name) {
                return Err(CliError::Usage("let NAME = EXPR"));
            }
            if p.at_end() {
                return Err(CliError::Usage("let NAME = EXPR"));
            }
            let e = {
                let rest = p.rest();
                let Some(expr_text) = rest.strip_prefix('=') else {
                    return Err(CliError::Usage("let NAME = EXPR"));
                };
                super::parse::parse_expr(expr_text).map_err(|mut e| {
                    e.position += trimmed.len() - expr_text.len();
                    e
                })?
            };
            let g = session.eval(&e)?;
            let out = format!("{name} = {}", show(&g));
            session.bindings.insert(name.to_string(), g);
            out
        }
        "show" | "canon" | "stops" | "guaranteed" | "invertible" | "birthday" => {
            let e = p.expr()?;
            p.finish()?;
            let g = session.eval(&e)?;
            match cmd {
                "show" => show(&g),
                "canon" => show(&canonical_form(&g)?),
                "stops" => {
                    let s = all_stops(&g)?;
                    format!(
                        "Ls={} Rs={} Ls(Right passes)={} Rs(Left passes)={} Ls(Left passes)={} Rs(Right passes)={}",
                        s.ls, s.rs, s.ls_right_passes, s.rs_left_passes, s.ls_left_passes, s.rs_right_passes
                    )
                }
                "guaranteed" => bool_text(g.is_guaranteed()),
                "invertible" => bool_text(invertible(&g)?),
                _ => g.birthday().to_string(),
            }
        }
        "cmp" => {
            let a = p.expr()?;
            if p.at_end() {
                return Err(CliError::Usage("cmp EXPR, EXPR"));
            }
            let rest_start = trimmed.len() - p.rest_len();
            let rest = &trimmed[rest_start..];
            let Some(second) = rest.strip_prefix(',') else {
                return Err(CliError::Usage("cmp EXPR, EXPR"));
            };
            let b = super::parse::parse_expr(second).map_err(|mut e| {
                e.position += trimmed.len() - second.len();
                e
            })?;
            let (g, h) = (session.eval(&a)?, session.eval(&b)?);
            compare(&g, &h)?.symbol().to_string()
        }
        "save" => {
            let path = p.rest();
            if path.is_empty() {
                return Err(CliError::Usage("save PATH"));
            }
            let text = session.serialize();
            std::fs::write(session.resolve(path), &text)
                .map_err(|source| CliError::Io { path: path.to_string(), source })?;
            format!("saved {} binding(s) to {path}", session.bindings.len())
        }
        "load" => {
            let path = p.rest();
            if path.is_empty() {
                return Err(CliError::Usage("load PATH"));
            }
            let text = std::fs::read_to_string(session.resolve(path))
                .map_err(|source| CliError::Io { path: path.to_string(), source })?;
            let loaded = Session::deserialize(&text, path)?;
            let n = loaded.len();
            session.bindings.extend(loaded);
            format!("loaded {n} binding(s) from {path}")
        }
        "quit" | "exit" => {
            p.finish()?;
            return Ok(Outcome::Quit);
        }
        other => return Err(CliError::UnknownCommand(other.to_string())),
    };
    Ok(Outcome::Print(text))
}

/// Runs a batch script, echoing each command as `> line` followed by its
/// output or `error: ...`. Returns the transcript and the number of errors.
pub fn run_batch(script: &str, session: &mut Session, style: Style) -> (String, usize) {
    let mut transcript = String::new();
    let mut errors = 0;
    for line in script.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        writeln!(transcript, "> {trimmed}").unwrap();
        match run_command(trimmed, session, style) {
            Ok(Outcome::Print(s)) => writeln!(transcript, "{s}").unwrap(),
            Ok(Outcome::Silent) => {}
            Ok(Outcome::Quit) => break,
            Err(e) => {
                errors += 1;
                writeln!(transcript, "error: {e}").unwrap();
            }
        }
    }
    (transcript, errors)
}
