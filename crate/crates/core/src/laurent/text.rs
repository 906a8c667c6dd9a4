//! Canonical text form of Laurent polynomials and its parser.
//!
//! Terms are written from the highest exponent down, e.g.
//! `1/2*t^4 - 2*t^2 + 1/2` or `(1 + s1)*t - s2*t^-1`. A coefficient with
//! more than one nonzero tower coordinate is wrapped in parentheses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::LaurentPoly;
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Tower, TowerScalar};

const NAMES: [&str; 4] = ["", "s1", "s2", "s1*s2"];

fn t_part(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{k}"),
    }
}

fn join(coeff: &str, t: &str) -> String {
    match (coeff.is_empty(), t.is_empty()) {
        (true, true) => "1".into(),
        (true, false) => t.into(),
        (false, true) => coeff.into(),
        (false, false) => format!("{coeff}*{t}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms().rev().enumerate() {
            let nonzero: Vec<usize> = (0..4).filter(|&j| !c.coords()[j].is_zero()).collect();
            let (neg, body) = if let [j] = nonzero[..] {
                let q = &c.coords()[j];
                let mag = q.abs();
                let coeff = match (j, mag.is_one()) {
                    (0, true) => String::new(),
                    (0, false) => mag.to_string(),
                    (_, true) => NAMES[j].to_string(),
                    (_, false) => format!("{mag}*{}", NAMES[j]),
                };
                (q.is_negative(), join(&coeff, &t_part(k)))
            } else {
                (false, join(&format!("({c})"), &t_part(k)))
            };
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ctx: &'a Tower,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Num(n)) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                self.pos += 1;
                e
            }
            _ => return Err(Error::Parse("expected an integer exponent".into())),
        };
        if !neg {
            return Ok(base.pow(e));
        }
        match base.as_monomial() {
            Some((c, k)) => {
                let inv = c.try_inv()?;
                Ok(LaurentPoly::monomial(inv, -k).pow(e))
            }
            None => Err(Error::Parse("negative exponent on a non-monomial".into())),
        }
    }

    fn primary(&mut self) -> Result<LaurentPoly> {
        let tok = self.peek().cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let mut q = Rational::from_integer(n);
                if self.eat('/') {
                    match self.peek() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            q /= Rational::from_integer(d.clone());
                            self.pos += 1;
                        }
                        _ => return Err(Error::Parse("expected a nonzero denominator".into())),
                    }
                }
                Ok(LaurentPoly::from_rational(self.ctx, q))
            }
            Tok::Ident(name) => match name.as_str() {
                "t" => Ok(LaurentPoly::t(self.ctx)),
                "s1" => Ok(LaurentPoly::constant(TowerScalar::s1(self.ctx))),
                "s2" => Ok(LaurentPoly::constant(TowerScalar::s2(self.ctx))),
                _ => Err(Error::Parse(format!("unknown symbol {name:?}"))),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Tok::Sym(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// Parses a Laurent polynomial over `+ - * ^ ( )`, `t`, `s1`, `s2` and
/// rational literals `n` or `n/d`.
pub fn parse_laurent(s: &str, ctx: &Tower) -> Result<LaurentPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, pos: 0, ctx };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}
