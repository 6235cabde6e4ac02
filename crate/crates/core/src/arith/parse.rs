//! Parsing of quadratic-field values such as `3/2`, `(1+2*sqrt2)/3`,
//! `1/2+phi` or `-1/5+7/5phi`.
//!
//! Grammar: sums of products of factors; a factor is an integer, one of
//! `sqrt2`, `sqrt3`, `sqrt5`, `phi` (also `√2`, `√3`, `√5`, `φ`), a
//! parenthesised expression, or a negated factor. Juxtaposition such as
//! `4/5phi` multiplies.

use num_bigint::BigInt;

use super::quad::{QuadElem, Radicand};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Sym(Radicand, bool),
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while let Some(c) = rest.chars().next() {
        if c.is_whitespace() {
            rest = &rest[c.len_utf8()..];
            continue;
        }
        if c.is_ascii_digit() {
            let end = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            out.push(Token::Int(
                rest[..end].parse().map_err(|_| err("bad integer"))?,
            ));
            rest = &rest[end..];
            continue;
        }
        let symbols: [(&str, Radicand, bool); 8] = [
            ("sqrt2", Radicand::Two, false),
            ("sqrt3", Radicand::Three, false),
            ("sqrt5", Radicand::Five, false),
            ("phi", Radicand::Five, true),
            ("√2", Radicand::Two, false),
            ("√3", Radicand::Three, false),
            ("√5", Radicand::Five, false),
            ("φ", Radicand::Five, true),
        ];
        if let Some(&(name, d, golden)) = symbols.iter().find(|(name, ..)| rest.starts_with(name)) {
            out.push(Token::Sym(d, golden));
            rest = &rest[name.len()..];
            continue;
        }
        out.push(match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '(' => Token::Open,
            ')' => Token::Close,
            _ => return Err(err(format!("unexpected character `{c}`"))),
        });
        rest = &rest[c.len_utf8()..];
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    d: Radicand,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QuadElem> {
        let mut acc = self.term()?;
        while let Some(t @ (Token::Plus | Token::Minus)) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if t == Token::Plus {
                acc.try_add(&rhs)?
            } else {
                acc.try_sub(&rhs)?
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QuadElem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc.try_div(&self.factor()?)?;
                }
                Some(Token::Int(_) | Token::Sym(..) | Token::Open) => {
                    acc = acc.try_mul(&self.factor()?)?
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QuadElem> {
        match self.next() {
            Some(Token::Int(n)) => Ok(QuadElem::integer(self.d, n)),
            Some(Token::Sym(_, true)) => Ok(QuadElem::phi()),
            Some(Token::Sym(d, false)) => Ok(QuadElem::sqrt(d)),
            Some(Token::Minus) => Ok(-self.factor()?),
            Some(Token::Open) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(v),
                    _ => Err(err("missing `)`")),
                }
            }
            Some(t) => Err(err(format!("unexpected token {t:?}"))),
            None => Err(err("unexpected end of input")),
        }
    }
}

/// Parses `s`; integers and rationals land in `default` unless a radical
/// names the field.
pub fn parse_quad(s: &str, default: Radicand) -> Result<QuadElem> {
    let tokens = tokenize(s)?;
    let mut fields = tokens.iter().filter_map(|t| match t {
        Token::Sym(d, _) => Some(*d),
        _ => None,
    });
    let d = match fields.next() {
        Some(first) => {
            if let Some(other) = fields.find(|&other| other != first) {
                return Err(Error::MixedRadicand {
                    left: first.value(),
                    right: other.value(),
                });
            }
            first
        }
        None => default,
    };
    if tokens.is_empty() {
        return Err(err("empty value"));
    }
    let mut parser = Parser { tokens, pos: 0, d };
    let v = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(err("trailing input"));
    }
    Ok(v)
}
