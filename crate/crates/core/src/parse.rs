//! Parser for the polynomial string grammar.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | power
//! power  := atom ('^' INT)*
//! atom   := IDENT | INT ('/' INT)? | '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*`. Implicit multiplication is not
//! accepted: `2x` is a syntax error. Exponents must be non-negative integer
//! literals.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::Polynomial;
use crate::ring::VarRing;

/// A parse failure with the byte offset where it occurred.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(name) => write!(f, "`{name}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    return Err(ParseError::new(
                        i,
                        "implicit multiplication is not allowed; write `*`",
                    ));
                }
                let n = BigInt::from_str(&text[start..i]).expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            'A'..='Z' | 'a'..='z' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => return Err(ParseError::new(i, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Arc<VarRing>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.atom()?;
        while matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let k =
                        u32::try_from(&n).map_err(|_| ParseError::new(at, "exponent too large"))?;
                    base = base.pow(k);
                }
                _ => {
                    return Err(ParseError::new(
                        at,
                        "exponent must be a non-negative integer literal",
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.ring, i)),
                None => Err(ParseError::new(at, format!("undeclared variable `{name}`"))),
            },
            Some(Tok::Int(n)) => {
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dat = self.here();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(ParseError::new(dat, "zero denominator"));
                            }
                            Ok(Polynomial::constant(self.ring, BigRational::new(n, d)))
                        }
                        _ => Err(ParseError::new(dat, "expected denominator")),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.ring,
                        BigRational::from_integer(n),
                    ))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::new(self.here(), "expected `)`")),
                }
            }
            Some(tok) => Err(ParseError::new(at, format!("unexpected {tok}"))),
            None => Err(ParseError::new(at, "unexpected end of input")),
        }
    }
}

/// Parses `text` into a normalized polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<VarRing>) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::new(p.here(), "trailing input"));
    }
    Ok(poly)
}
