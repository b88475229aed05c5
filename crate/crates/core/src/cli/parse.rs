//! Parsers for game literals and calculator expressions.
//!
//! ```text
//! game  := score | '<' side '|' side '>'
//! side  := 'E' score | game (',' game)*
//! score := ['-'] digits [ '/' digits | '.' digits ]
//!
//! expr  := term ('+' term)*
//! term  := game | NAME | '(' expr ')' | 'hat' '(' digits ')'
//!        | 'conj' '(' expr ')' | 'canon' '(' expr ')'
//!        | 'pickends' '[' [score (',' score)*] ']'
//! ```

use thiserror::Error;

use crate::game::{Game, Side};
use crate::score::{Score, ScoreParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

/// Expression syntax tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Game),
    Number(Score),
    Name(String),
    Sum(Box<Expr>, Box<Expr>),
    Conjugate(Box<Expr>),
    Hat(usize),
    Canon(Box<Expr>),
    PickEnds(Vec<Score>),
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Parser<'a> {
        Parser { src, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected `{c}`, found `{found}`")),
                None => self.error(format!("expected `{c}`, found end of input")),
            }
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }

    fn scan_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len: usize = self.src[start..]
            .chars()
            .take_while(|&c| pred(c))
            .map(char::len_utf8)
            .sum();
        self.pos += len;
        &self.src[start..start + len]
    }

    fn score(&mut self) -> Result<Score, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut text = String::new();
        if self.src[self.pos..].starts_with('-') {
            self.pos += 1;
            text.push('-');
        }
        let int = self.scan_while(|c| c.is_ascii_digit());
        if int.is_empty() {
            self.pos = start;
            return self.error("expected a score");
        }
        text.push_str(int);
        for sep in ['/', '.'] {
            if self.src[self.pos..].starts_with(sep) {
                self.pos += 1;
                text.push(sep);
                let digits = self.scan_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return self.error(format!("expected digits after `{sep}`"));
                }
                text.push_str(digits);
                break;
            }
        }
        text.parse().map_err(|e: ScoreParseError| ParseError {
            position: start,
            message: e.to_string(),
        })
    }

    pub(crate) fn game(&mut self) -> Result<Game, ParseError> {
        if self.eat('<') {
            let left = self.side()?;
            self.expect('|')?;
            let right = self.side()?;
            self.expect('>')?;
            Ok(Game::new(left, right))
        } else {
            Ok(Game::number(self.score()?))
        }
    }

    fn side(&mut self) -> Result<Side, ParseError> {
        if self.eat('E') {
            let s = self.score()?;
            if self.peek() == Some(',') {
                return self.error("a side holds either one atom or a list of options");
            }
            return Ok(Side::Atom(s));
        }
        let mut opts = vec![self.game()?];
        while self.eat(',') {
            if self.peek() == Some('E') {
                return self.error("a side holds either one atom or a list of options");
            }
            opts.push(self.game()?);
        }
        Ok(Side::Options(opts))
    }

    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let first = self.src[self.pos..].chars().next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        Some(self.scan_while(|c| c.is_ascii_alphanumeric() || c == '_'))
    }

    pub(crate) fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        while self.eat('+') {
            let rhs = self.term()?;
            e = Expr::Sum(Box::new(e), Box::new(rhs));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('<') => return Ok(Expr::Literal(self.game()?)),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(e);
            }
            Some(c) if c == '-' || c.is_ascii_digit() => return Ok(Expr::Number(self.score()?)),
            None => return self.error("expected an expression, found end of input"),
            _ => {}
        }
        let start = self.pos;
        let Some(word) = self.ident() else {
            let c = self.peek().unwrap();
            return self.error(format!("unexpected `{c}`"));
        };
        let call = self.peek() == Some('(');
        match word {
            "hat" if call => {
                self.expect('(')?;
                self.skip_ws();
                let digits = self.scan_while(|c| c.is_ascii_digit());
                let n = digits
                    .parse()
                    .or_else(|_| self.error("hat expects a nonnegative integer"))?;
                self.expect(')')?;
                Ok(Expr::Hat(n))
            }
            "conj" | "canon" if call => {
                self.expect('(')?;
                let inner = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(if word == "conj" { Expr::Conjugate(inner) } else { Expr::Canon(inner) })
            }
            "pickends" => {
                self.expect('[')?;
                let mut pieces = Vec::new();
                if !self.eat(']') {
                    pieces.push(self.score()?);
                    while self.eat(',') {
                        pieces.push(self.score()?);
                    }
                    self.expect(']')?;
                }
                Ok(Expr::PickEnds(pieces))
            }
            _ if call => {
                self.pos = start;
                self.error(format!("unknown function `{word}`"))
            }
            _ => Ok(Expr::Name(word.to_string())),
        }
    }

    pub(crate) fn rest_len(&mut self) -> usize {
        self.skip_ws();
        self.src.len() - self.pos
    }

    pub(crate) fn rest(&mut self) -> &'a str {
        self.skip_ws();
        let r = self.src[self.pos..].trim_end();
        self.pos = self.src.len();
        r
    }
}

/// Parses a complete game literal.
pub fn parse_game(text: &str) -> Result<Game, ParseError> {
    let mut p = Parser::new(text);
    let g = p.game()?;
    p.finish()?;
    Ok(g)
}

/// Parses a complete expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}
