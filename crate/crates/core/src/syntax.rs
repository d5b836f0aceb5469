//! Shared recursive-descent grammar for polynomial, Hecke and mixed literals.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := power ('*' power)*
//! power   := primary ['^' int]
//! primary := UINT | IDENT ['[' int (',' int)* ']'] | '(' expr ')'
//! int     := ['-'] UINT
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Atom<'a> {
    Int(BigInt),
    Ident(&'a str, Option<Vec<i64>>),
}

pub(crate) trait Semantics {
    type Value;
    fn atom(&self, atom: Atom<'_>, pos: usize) -> Result<Self::Value>;
    fn add(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value>;
    fn sub(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value>;
    fn mul(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value>;
    fn neg(&self, a: Self::Value, pos: usize) -> Result<Self::Value>;
    fn pow(&self, a: Self::Value, k: i64, pos: usize) -> Result<Self::Value>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'a> {
    Int(BigInt),
    Ident(&'a str),
    Sym(u8),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(&src[start..i])));
        } else if b"+-*^()[],".contains(&c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character {:?}", c as char) });
        }
    }
    Ok(out)
}

struct Parser<'a, 's, S: Semantics> {
    toks: Vec<(usize, Tok<'a>)>,
    at: usize,
    end: usize,
    sem: &'s S,
}

impl<'a, 's, S: Semantics> Parser<'a, 's, S> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek_sym(&self, c: u8) -> bool {
        matches!(self.toks.get(self.at), Some((_, Tok::Sym(d))) if *d == c)
    }

    fn eat_sym(&mut self, c: u8) -> bool {
        if self.peek_sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: u8) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: String) -> Error {
        Error::Parse { pos: self.pos(), msg }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat_sym(b'-');
        match self.toks.get(self.at) {
            Some((_, Tok::Int(n))) => {
                let v: i64 = n.try_into().map_err(|_| self.err("integer out of range".into()))?;
                self.at += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected integer".into())),
        }
    }

    fn expr(&mut self) -> Result<S::Value> {
        let pos = self.pos();
        let lead_neg = if self.eat_sym(b'-') {
            true
        } else {
            self.eat_sym(b'+');
            false
        };
        let mut acc = self.term()?;
        if lead_neg {
            acc = self.sem.neg(acc, pos)?;
        }
        loop {
            let pos = self.pos();
            if self.eat_sym(b'+') {
                let t = self.term()?;
                acc = self.sem.add(acc, t, pos)?;
            } else if self.eat_sym(b'-') {
                let t = self.term()?;
                acc = self.sem.sub(acc, t, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<S::Value> {
        let mut acc = self.power()?;
        loop {
            let pos = self.pos();
            if self.eat_sym(b'*') {
                let f = self.power()?;
                acc = self.sem.mul(acc, f, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<S::Value> {
        let base = self.primary()?;
        let pos = self.pos();
        if self.eat_sym(b'^') {
            let k = self.int()?;
            self.sem.pow(base, k, pos)
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<S::Value> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Int(n))) => {
                self.at += 1;
                self.sem.atom(Atom::Int(n), pos)
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                let args = if self.eat_sym(b'[') {
                    let mut v = Vec::new();
                    if !self.peek_sym(b']') {
                        v.push(self.int()?);
                        while self.eat_sym(b',') {
                            v.push(self.int()?);
                        }
                    }
                    self.expect_sym(b']')?;
                    Some(v)
                } else {
                    None
                };
                self.sem.atom(Atom::Ident(name, args), pos)
            }
            Some((_, Tok::Sym(b'('))) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect_sym(b')')?;
                Ok(v)
            }
            _ => Err(self.err("expected a value".into())),
        }
    }
}

pub(crate) fn parse<S: Semantics>(sem: &S, src: &str) -> Result<S::Value> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len(), sem };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.err("trailing input".into()));
    }
    Ok(v)
}
