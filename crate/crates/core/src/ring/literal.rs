//! Tiny expression evaluator for ring element literals.
//!
//! Grammar:
//!   expr   := term (('+' | '-') term)*
//!   term   := factor (('*' | '·' | '/') factor)*
//!   factor := '-'* atom ('^' uint)?
//!   atom   := integer | 'w' | 'ω' | '(' expr ')'
//!
//! Division requires the divisor to be a unit of the ring.

use super::{RingDescriptor, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Omega,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' | '·' | '×' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            'w' | 'ω' => {
                toks.push(Tok::Omega);
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let v = text
                    .parse::<BigInt>()
                    .map_err(|_| Error::MalformedLiteral(s.into()))?;
                toks.push(Tok::Int(v));
            }
            _ => return Err(Error::MalformedLiteral(format!("unexpected '{c}' in {s}"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a RingDescriptor,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.ring.add(&acc, &rhs);
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.ring.sub(&acc, &rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Tok::Star => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = self.ring.mul(&acc, &rhs);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let inv = self.ring.try_inv(&rhs)?;
                    acc = self.ring.mul(&acc, &inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar> {
        let mut negate = false;
        while self.peek() == Some(&Tok::Minus) {
            negate = !negate;
            self.pos += 1;
        }
        let mut v = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(e)) => {
                    let e: u64 = e
                        .try_into()
                        .map_err(|_| Error::MalformedLiteral("exponent out of range".into()))?;
                    v = self.ring.pow(&v, e);
                }
                _ => return Err(Error::MalformedLiteral("expected exponent after ^".into())),
            }
        }
        if negate {
            v = self.ring.neg(&v);
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(self.ring.from_bigint(&v)),
            Some(Tok::Omega) => self.ring.omega(),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::MalformedLiteral("unbalanced parentheses".into()));
                }
                Ok(v)
            }
            other => Err(Error::MalformedLiteral(format!(
                "unexpected token {other:?}"
            ))),
        }
    }
}

pub fn eval(ring: &RingDescriptor, s: &str) -> Result<Scalar> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::MalformedLiteral("empty literal".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::MalformedLiteral(format!("trailing input in {s}")));
    }
    Ok(v)
}
