//! Text grammar for polynomials over Q(i).
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := coeff | var | '(' expr ')'
//! coeff  := uint ('/' uint)? | 'i'
//! ```
//!
//! Whitespace is insignificant. Signed coefficients come from the leading
//! `-` and the binary `+`/`-`. Parsing the canonical rendering of a
//! polynomial reproduces it exactly; parsing arbitrary valid text and
//! re-rendering canonicalizes it.

use std::sync::Arc;

use num::BigInt;

use crate::error::{Error, Result};
use crate::gauss::{GaussRat, Rat};
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// Parses `text` into a canonical polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<RingContext>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

/// Parses a bracketed, comma-separated polynomial list: `[p1, p2, ...]`.
pub fn parse_poly_list(text: &str, ring: &Arc<RingContext>) -> Result<Vec<Polynomial>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected a bracketed list like [x^2, x*y]".into(),
        })?;
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (k, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1).ok_or_else(|| Error::Parse {
                    pos: k + 1,
                    msg: "unbalanced parentheses".into(),
                })?
            }
            ',' if depth == 0 => {
                out.push(parse_polynomial(&inner[start..k], ring)?);
                start = k + 1;
            }
            _ => {}
        }
    }
    let rest = &inner[start..];
    if rest.trim().is_empty() {
        if out.is_empty() && inner.trim().is_empty() {
            return Ok(out);
        }
        return Err(Error::Parse {
            pos: start,
            msg: "empty list entry".into(),
        });
    }
    out.push(parse_polynomial(rest, ring)?);
    Ok(out)
}

/// Collects the identifiers appearing in `text` (and any extra list items),
/// sorted naturally (`z2` before `z10`). Used to infer a ring when the CLI
/// is not given one explicitly.
pub fn infer_variables(texts: &[&str]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let bytes = text.as_bytes();
        let mut k = 0;
        while k < bytes.len() {
            if bytes[k].is_ascii_alphabetic() {
                let start = k;
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                let name = &text[start..k];
                if name != "i" && !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else {
                k += 1;
            }
        }
    }
    names.sort_by(|a, b| natural_cmp(a, b));
    names
}

fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    let (pa, na) = split_numeric_suffix(a);
    let (pb, nb) = split_numeric_suffix(b);
    pa.cmp(pb).then_with(|| match (na, nb) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => a.cmp(b),
    })
}

fn split_numeric_suffix(s: &str) -> (&str, Option<u64>) {
    let digits = s.chars().rev().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 {
        return (s, None);
    }
    let split = s.len() - digits;
    (&s[..split], s[split..].parse().ok())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<RingContext>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let denom = if self.eat(b'/') {
                    let d = self.uint()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                Ok(Polynomial::constant(
                    self.ring,
                    GaussRat::from_rat(Rat::new(num, denom)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "i" {
                    return Ok(Polynomial::constant(self.ring, GaussRat::i()));
                }
                match self.ring.var_index(name) {
                    Some(j) => Ok(Polynomial::variable(self.ring, j)),
                    None => Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().expect("digits"))
    }
}
