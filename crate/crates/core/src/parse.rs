//! Parser for the polynomial expression grammar.
//!
//! Identifiers `[A-Za-z_][A-Za-z0-9_]*`, integer and `a/b` rational literals,
//! operators `+ - * ^`, parentheses, insignificant whitespace. A `*` is
//! required between coefficient and variable. The printer in `poly.rs` emits
//! this grammar, and `parse(format(p)) == p`.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Returns the next token and its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Tok::End, start));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let digits = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Int(digits.parse::<BigInt>().expect("digits parse"))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end])
                    .unwrap()
                    .to_string();
                self.pos = end;
                Tok::Ident(name)
            }
            other => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok((tok, start))
    }
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    lexer: Lexer<'a>,
    cur: Tok,
    cur_pos: usize,
}

const MAX_EXPONENT: u64 = u16::MAX as u64;

impl<'a> Parser<'a> {
    fn new(ring: &'a Arc<PolyRing>, text: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(text);
        let (cur, cur_pos) = lexer.next()?;
        Ok(Parser {
            ring,
            lexer,
            cur,
            cur_pos,
        })
    }

    fn bump(&mut self) -> Result<()> {
        let (tok, pos) = self.lexer.next()?;
        self.cur = tok;
        self.cur_pos = pos;
        Ok(())
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.cur_pos,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.cur {
            Tok::Plus => self.bump()?,
            Tok::Minus => {
                negate = true;
                self.bump()?;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Tok::Minus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.cur == Tok::Star {
            self.bump()?;
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let e = match &self.cur {
                Tok::Int(n) => {
                    use num_traits::ToPrimitive;
                    let e = n.to_u64().filter(|&e| e <= MAX_EXPONENT).ok_or_else(|| {
                        self.err(format!("exponent must be an integer <= {MAX_EXPONENT}"))
                    })?;
                    e as u32
                }
                _ => return Err(self.err("expected integer exponent after `^`")),
            };
            self.bump()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.cur.clone() {
            Tok::Int(n) => {
                self.bump()?;
                if self.cur == Tok::Slash {
                    self.bump()?;
                    match self.cur.clone() {
                        Tok::Int(d) => {
                            self.bump()?;
                            let c = self.ring.field.from_ratio(&n, &d)?;
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        _ => Err(self.err("expected integer denominator after `/`")),
                    }
                } else {
                    Ok(Polynomial::constant(
                        self.ring,
                        self.ring.field.from_bigint(&n),
                    ))
                }
            }
            Tok::Ident(name) => {
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(Error::UnknownVariable(name))?;
                self.bump()?;
                Ok(Polynomial::variable(self.ring, idx))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(self.err("expected `)`"));
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            other => Err(self.err(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let mut p = Parser::new(ring, text)?;
    let poly = p.expr()?;
    if p.cur != Tok::End {
        return Err(p.err("trailing input after expression"));
    }
    Ok(poly)
}

/// Canonical textual form; inverse of `parse_poly`.
pub fn format_poly(p: &Polynomial) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Coeff, Field};
    use crate::monomial::{Monomial, MonomialOrder};
    use crate::rng::SplitMix64;

    fn ring(field: Field, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(field, names, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn basic_terms() {
        let r = ring(Field::Rationals, &["x0", "x1"]);
        let p = parse_poly(&r, "x0^2 + 2*x0*x1").unwrap();
        assert_eq!(p.to_string(), "x0^2 + 2*x0*x1");
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn cancellation_to_zero() {
        let r = ring(Field::Rationals, &["x0"]);
        let p = parse_poly(&r, "x0 - x0").unwrap();
        assert!(p.is_zero());
        assert_eq!(format_poly(&p), "0");
    }

    #[test]
    fn rational_over_prime_field() {
        let r = ring(Field::prime(5).unwrap(), &["x1"]);
        let p = parse_poly(&r, "3/2*x1").unwrap();
        assert_eq!(p.to_string(), "4*x1");
        assert_eq!(p.terms()[0].0, Coeff::Fp(4));
    }

    #[test]
    fn coefficient_not_representable() {
        let r = ring(Field::prime(5).unwrap(), &["x"]);
        assert!(parse_poly(&r, "1/5*x").is_err());
    }

    #[test]
    fn unknown_variable() {
        let r = ring(Field::Rationals, &["x"]);
        match parse_poly(&r, "x + y") {
            Err(Error::UnknownVariable(name)) => assert_eq!(name, "y"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_position() {
        let r = ring(Field::Rationals, &["x"]);
        match parse_poly(&r, "x + + )") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parens_and_powers() {
        let r = ring(Field::Rationals, &["x", "y"]);
        let p = parse_poly(&r, "(x + y)^2 - (x - y)^2").unwrap();
        assert_eq!(p.to_string(), "4*x*y");
    }

    #[test]
    fn whitespace_insignificant() {
        let r = ring(Field::Rationals, &["x", "y"]);
        let a = parse_poly(&r, "3 / 2 * x * y ^ 2").unwrap();
        let b = parse_poly(&r, "3/2*x*y^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn huge_exponent_rejected() {
        let r = ring(Field::Rationals, &["x"]);
        assert!(parse_poly(&r, "x^70000").is_err());
        assert!(parse_poly(&r, "2^99999999999999").is_err());
    }

    #[test]
    fn roundtrip_random_polynomials() {
        // parse . format = identity, 1000 random polynomials per field.
        let rings = [
            ring(Field::Rationals, &["x0", "x1", "x2"]),
            ring(Field::prime(32003).unwrap(), &["x0", "x1", "x2"]),
        ];
        for r in &rings {
            let mut rng = SplitMix64::new(0xC0FFEE);
            for _ in 0..1000 {
                let nterms = 1 + rng.below(6) as usize;
                let mut terms = Vec::new();
                for _ in 0..nterms {
                    let c = match r.field {
                        Field::Rationals => {
                            let n = rng.below(41) as i64 - 20;
                            let d = 1 + rng.below(9) as i64;
                            r.field
                                .from_ratio(&BigInt::from(n), &BigInt::from(d))
                                .unwrap()
                        }
                        Field::Prime(p) => r.field.from_i64(rng.below(p as u64) as i64),
                    };
                    let exps: Vec<u16> = (0..3).map(|_| rng.below(5) as u16).collect();
                    terms.push((c, Monomial::from_exps(&exps)));
                }
                let p = Polynomial::from_terms(r, terms);
                let text = format_poly(&p);
                let back = parse_poly(r, &text).unwrap();
                assert_eq!(p, back, "roundtrip failed for `{text}`");
            }
        }
    }
}
