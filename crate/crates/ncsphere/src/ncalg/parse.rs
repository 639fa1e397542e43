//! Expression syntax for algebra elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] factor ('*' factor)*
//! factor := atom ['^' exponent]
//! atom   := number ['/' number] | 'q' | 'i' | 'L' digit digit | generator | '(' expr ')'
//! ```
//!
//! Generators are the names of the presentation, with `'` for the adjoint.
//! Exponents are integers; `L12^(1/2)` style half exponents are accepted on phases.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::NCPoly;
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalars::{ParseScalar, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = cs[st..i].iter().collect();
                out.push(Tok::Num(txt.parse().unwrap()));
            }
            a if a.is_alphabetic() || a == '_' => {
                let st = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                if i < cs.len() && cs[i] == '\'' {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}' at {i}"))),
        }
    }
    Ok(out)
}

/// Parsed atom before exponentiation; phases keep their exponent open.
enum Atom<S> {
    Poly(NCPoly<S>),
    Q,
    Phase(u8, u8),
}

struct Parser<'a, S> {
    toks: Vec<Tok>,
    pos: usize,
    pres: &'a Presentation<S>,
}

impl<S: ParseScalar> Parser<'_, S> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(x) if x == t => Ok(()),
            other => Err(Error::Parse(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<NCPoly<S>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly<S>> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = self.pres.mul(&acc, &f);
        }
        Ok(if neg { -acc } else { acc })
    }

    /// Integer exponent, or a doubled exponent for `^(p/2)`.
    fn exponent(&mut self) -> Result<(i64, bool)> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok((to_i64(&n)?, false)),
            Some(Tok::Minus) => match self.bump() {
                Some(Tok::Num(n)) => Ok((-to_i64(&n)?, false)),
                t => Err(Error::Parse(format!("bad exponent near {t:?}"))),
            },
            Some(Tok::LParen) => {
                let sign = if self.peek() == Some(&Tok::Minus) {
                    self.bump();
                    -1
                } else {
                    1
                };
                let p = match self.bump() {
                    Some(Tok::Num(n)) => to_i64(&n)?,
                    t => return Err(Error::Parse(format!("bad exponent near {t:?}"))),
                };
                let half = if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(d)) if d == BigInt::from(2) => true,
                        t => return Err(Error::Parse(format!("only halves allowed, found {t:?}"))),
                    }
                } else {
                    false
                };
                self.expect(Tok::RParen)?;
                Ok((sign * p, half))
            }
            t => Err(Error::Parse(format!("bad exponent near {t:?}"))),
        }
    }

    fn factor(&mut self) -> Result<NCPoly<S>> {
        let atom = self.atom()?;
        let (e, half) = if self.peek() == Some(&Tok::Caret) {
            self.bump();
            self.exponent()?
        } else {
            (1, false)
        };
        match atom {
            Atom::Phase(j, k) => {
                let doubled = if half { e } else { 2 * e };
                let s = S::phase(j, k, doubled as i32)
                    .ok_or_else(|| Error::Parse("phases are not available over this ring".into()))?;
                Ok(NCPoly::constant(s))
            }
            _ if half => Err(Error::Parse("half exponents apply to phases only".into())),
            Atom::Q => {
                let s = S::q_power(e as i32).ok_or_else(|| Error::Parse("q is not available over this ring".into()))?;
                Ok(NCPoly::constant(s))
            }
            Atom::Poly(p) => {
                if e < 0 {
                    return Err(Error::Parse("negative powers of algebra elements".into()));
                }
                Ok(self.pres.pow(&p, e as u32))
            }
        }
    }

    fn atom(&mut self) -> Result<Atom<S>> {
        match self.bump() {
            Some(Tok::Num(n)) => {
                let mut r = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(d)) if !d.is_zero() => r /= Rational::from_integer(d),
                        t => return Err(Error::Parse(format!("bad denominator {t:?}"))),
                    }
                }
                Ok(Atom::Poly(NCPoly::constant(S::from_rational(r))))
            }
            Some(Tok::LParen) => {
                let p = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Atom::Poly(p))
            }
            Some(Tok::Ident(name)) => {
                if let Some(g) = self.pres.gen_by_name(&name) {
                    return Ok(Atom::Poly(self.pres.gen_poly(&self.pres.generators()[g as usize].name)));
                }
                if name == "q" {
                    return Ok(Atom::Q);
                }
                if name == "i" {
                    let s =
                        S::imaginary_unit().ok_or_else(|| Error::Parse("i is not available over this ring".into()))?;
                    return Ok(Atom::Poly(NCPoly::constant(s)));
                }
                let b = name.as_bytes();
                if b.len() == 3 && b[0] == b'L' && b[1].is_ascii_digit() && b[2].is_ascii_digit() {
                    return Ok(Atom::Phase(b[1] - b'0', b[2] - b'0'));
                }
                Err(Error::Parse(format!("unknown symbol '{name}' for {}", self.pres.name())))
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

fn to_i64(n: &BigInt) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::Parse(format!("exponent {n} too large")))
}

/// Parse `src` into a normal-form element of `pres`.
pub fn parse_expr<S: ParseScalar>(pres: &Presentation<S>, src: &str) -> Result<NCPoly<S>> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, pres };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

impl<S: ParseScalar> Presentation<S> {
    /// Parse an element; panics on malformed input (test and fixture helper).
    pub fn el(&self, src: &str) -> NCPoly<S> {
        parse_expr(self, src).unwrap_or_else(|e| panic!("{src}: {e}"))
    }

    pub fn parse(&self, src: &str) -> Result<NCPoly<S>> {
        parse_expr(self, src)
    }
}
