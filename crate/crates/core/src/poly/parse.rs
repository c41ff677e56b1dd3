//! Text syntax: identifiers, `^` powers, `*` or whitespace for products,
//! integer and `a/b` literals, `+`, `-` and parentheses.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<alloc::vec::Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = alloc::vec::Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(String::from(&src[start..i]))));
                continue;
            }
            _ => return Err(Error::parse(i, "unexpected character")),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: alloc::vec::Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                -self.term()?
            }
            Some(Token::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc * self.factor()?;
                }
                Some(Token::Int(_) | Token::Ident(_) | Token::Open) => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let e: u32 =
                        u32::try_from(&n).map_err(|_| Error::parse(at, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::parse(at, "expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let at_den = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            Ok(Poly::constant(BigRational::new(n, d)))
                        }
                        Some(Token::Int(_)) => Err(Error::parse(at_den, "zero denominator")),
                        _ => Err(Error::parse(at_den, "only integer literals may be divided")),
                    }
                } else {
                    Ok(Poly::constant(BigRational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => Ok(Poly::var(&name)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::parse(close, "expected `)`")),
                }
            }
            Some(_) => Err(Error::parse(at, "unexpected token")),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let mut parser = Parser {
            tokens: tokenize(s)?,
            pos: 0,
            end: s.len(),
        };
        let p = parser.expr()?;
        if parser.pos < parser.tokens.len() {
            return Err(Error::parse(parser.offset(), "trailing input"));
        }
        Ok(p)
    }
}
