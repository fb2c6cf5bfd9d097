//! Recursive-descent parser for elements and tensors.
//!
//! ```text
//! sum    := ["+" | "-"] term (("+" | "-") term)*
//! term   := [rational "*"] factor ("@" factor)*
//! factor := "L(" rational ")" | "I(" rational ")" | "C_L" | "C_I" | "C_LI"
//!         | "(" sum ")" | "wedge(" sum "," sum ")" | "0"
//! rational := ["-"] digits ["/" digits]
//! ```
//!
//! `@` binds tighter than `+`/`-`, and all terms of a sum must have the same
//! tensor rank (at most 3).

use std::str::FromStr;

use crate::algebra::{Algebra, Element, Symbol};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::tensor::{Tensor2, Tensor3};

/// A parsed value of tensor rank 1, 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Element(Element),
    Tensor2(Tensor2),
    Tensor3(Tensor3),
}

impl Value {
    pub fn rank(&self) -> usize {
        match self {
            Value::Element(_) => 1,
            Value::Tensor2(_) => 2,
            Value::Tensor3(_) => 3,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Element(e) => e.fmt(f),
            Value::Tensor2(t) => t.fmt(f),
            Value::Tensor3(t) => t.fmt(f),
        }
    }
}

/// Parses `src`, validating every index and symbol against `alg`. A bare
/// `0` parses as the zero element.
pub fn parse_element(src: &str, alg: &Algebra) -> Result<Value> {
    let v = parse_raw(src, alg)?;
    Ok(v.into_value(1))
}

/// Parses an element (rank 1).
pub fn parse_elem(src: &str, alg: &Algebra) -> Result<Element> {
    match parse_raw(src, alg)?.into_value(1) {
        Value::Element(e) => Ok(e),
        v => Err(rank_error(1, v.rank())),
    }
}

pub fn parse_tensor2(src: &str, alg: &Algebra) -> Result<Tensor2> {
    match parse_raw(src, alg)?.into_value(2) {
        Value::Tensor2(t) => Ok(t),
        v => Err(rank_error(2, v.rank())),
    }
}

pub fn parse_tensor3(src: &str, alg: &Algebra) -> Result<Tensor3> {
    match parse_raw(src, alg)?.into_value(3) {
        Value::Tensor3(t) => Ok(t),
        v => Err(rank_error(3, v.rank())),
    }
}

fn rank_error(want: usize, got: usize) -> Error {
    Error::Parse {
        offset: 0,
        message: format!("expected a rank-{want} value, found rank {got}"),
    }
}

fn parse_raw(src: &str, alg: &Algebra) -> Result<Raw> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        alg,
    };
    let v = p.sum()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Intermediate value: `rank` is `None` only for an explicit zero, which
/// adapts to any rank.
struct Raw {
    rank: Option<usize>,
    terms: LinComb<Vec<Symbol>>,
}

impl Raw {
    fn into_value(self, default_rank: usize) -> Value {
        let rank = self.rank.unwrap_or(default_rank);
        match rank {
            1 => Value::Element(self.terms.map_keys(|k| k[0].clone())),
            2 => Value::Tensor2(self.terms.map_keys(|k| (k[0].clone(), k[1].clone()))),
            _ => Value::Tensor3(
                self.terms
                    .map_keys(|k| (k[0].clone(), k[1].clone(), k[2].clone())),
            ),
        }
    }

    fn zero() -> Raw {
        Raw {
            rank: None,
            terms: LinComb::zero(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alg: &'a Algebra,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: msg.into(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Raw> {
        let mut sign = Rational::one();
        if self.eat(b'-') {
            sign = -sign;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?.scaled(&sign);
        loop {
            let s = match self.peek() {
                Some(b'+') => Rational::one(),
                Some(b'-') => -Rational::one(),
                _ => break,
            };
            self.pos += 1;
            let at = self.pos;
            let t = self.term()?.scaled(&s);
            acc = combine(acc, t).map_err(|m| Error::Parse {
                offset: at,
                message: m,
            })?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Raw> {
        let mut coeff = None;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            let at = self.pos;
            let q = self.rational()?;
            if self.eat(b'*') {
                coeff = Some(q);
            } else if q.is_zero() {
                return Ok(Raw::zero());
            } else {
                self.pos = at;
                return Err(self.err("a coefficient must be followed by `*`"));
            }
        }
        let mut acc = self.factor()?;
        while self.eat(b'@') {
            let at = self.pos;
            let rhs = self.factor()?;
            acc = product(acc, rhs).map_err(|m| Error::Parse {
                offset: at,
                message: m,
            })?;
        }
        Ok(match coeff {
            Some(c) => acc.scaled(&c),
            None => acc,
        })
    }

    fn factor(&mut self) -> Result<Raw> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'0'..=b'9') => {
                let at = self.pos;
                let q = self.rational()?;
                if q.is_zero() {
                    Ok(Raw::zero())
                } else {
                    self.pos = at;
                    Err(self.err("expected a basis symbol"))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let ident = self.ident();
                match ident.as_str() {
                    "L" | "I" => {
                        self.expect(b'(')?;
                        let x = self.rational()?;
                        self.expect(b')')?;
                        let s = if ident == "L" {
                            Symbol::L(x)
                        } else {
                            Symbol::I(x)
                        };
                        self.symbol(s)
                    }
                    "C_L" => self.symbol(Symbol::CL),
                    "C_I" => self.symbol(Symbol::CI),
                    "C_LI" => self.symbol(Symbol::CLI),
                    "wedge" => {
                        self.expect(b'(')?;
                        let a = self.sum()?;
                        self.expect(b',')?;
                        let b = self.sum()?;
                        self.expect(b')')?;
                        wedge_raw(a, b).map_err(|m| Error::Parse {
                            offset: at,
                            message: m,
                        })
                    }
                    other => {
                        let msg = format!("unknown identifier `{other}`");
                        self.pos = at;
                        Err(self.err(msg))
                    }
                }
            }
            Some(_) => Err(self.err("expected a basis symbol, `(` or `wedge(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn symbol(&mut self, s: Symbol) -> Result<Raw> {
        self.alg.check_symbol(&s)?;
        Ok(Raw {
            rank: Some(1),
            terms: LinComb::basis(vec![s]),
        })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn rational(&mut self) -> Result<Rational> {
        self.ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos > s
        };
        if !digits(self) {
            return Err(self.err("expected a rational number"));
        }
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            if !digits(self) {
                return Err(self.err("expected a denominator"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Rational::from_str(text).map_err(|e| Error::Parse {
            offset: start,
            message: e.to_string(),
        })
    }
}

impl Raw {
    fn scaled(self, c: &Rational) -> Raw {
        Raw {
            rank: self.rank,
            terms: self.terms.scale(c),
        }
    }
}

fn combine(a: Raw, b: Raw) -> std::result::Result<Raw, String> {
    let rank = match (a.rank, b.rank) {
        (Some(x), Some(y)) if x != y => {
            return Err(format!("cannot add rank-{x} and rank-{y} values"))
        }
        (x, y) => x.or(y),
    };
    Ok(Raw {
        rank,
        terms: &a.terms + &b.terms,
    })
}

fn product(a: Raw, b: Raw) -> std::result::Result<Raw, String> {
    let (Some(x), Some(y)) = (a.rank, b.rank) else {
        return Ok(Raw {
            rank: a.rank.or(b.rank),
            terms: LinComb::zero(),
        });
    };
    if x + y > 3 {
        return Err("tensor rank above 3 is not supported".into());
    }
    let mut terms = LinComb::zero();
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let mut k = ka.clone();
            k.extend(kb.iter().cloned());
            terms.add_term(k, ca * cb);
        }
    }
    Ok(Raw {
        rank: Some(x + y),
        terms,
    })
}

fn wedge_raw(a: Raw, b: Raw) -> std::result::Result<Raw, String> {
    for r in [a.rank, b.rank].into_iter().flatten() {
        if r != 1 {
            return Err("wedge takes two elements".into());
        }
    }
    let ab = product(
        Raw {
            rank: Some(1),
            terms: a.terms.clone(),
        },
        Raw {
            rank: Some(1),
            terms: b.terms.clone(),
        },
    )?;
    let ba = product(
        Raw {
            rank: Some(1),
            terms: b.terms,
        },
        Raw {
            rank: Some(1),
            terms: a.terms,
        },
    )?;
    Ok(Raw {
        rank: Some(2),
        terms: &ab.terms - &ba.terms,
    })
}
