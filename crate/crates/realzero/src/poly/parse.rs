//! Recursive-descent parser for the textual polynomial grammar:
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := int | int '/' posint
//! factor := ident ('^' posint)?
//! ident  := letter (letter|digit|'_')*
//! ```
//!
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, VariableSet};
use crate::error::{Error, Result};
use crate::rational::Rational;

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            return Err(self.error("expected an identifier"));
        }
        self.pos += 1;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }
}

pub(super) fn parse(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let mut lx = Lexer::new(text);
    let mut poly = Polynomial::zero(vars.clone());
    let mut sign = match lx.peek() {
        Some(b'-') => {
            lx.bump();
            -1
        }
        _ => 1,
    };
    loop {
        let (m, c) = parse_term(&mut lx, vars)?;
        let signed = if sign < 0 { -c } else { c };
        poly.add_term(m, signed);
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
                sign = 1;
            }
            Some(b'-') => {
                lx.bump();
                sign = -1;
            }
            Some(c) => return Err(lx.error(format!("unexpected character `{}`", c as char))),
        }
    }
    Ok(poly)
}

fn parse_term(lx: &mut Lexer, vars: &VariableSet) -> Result<(Monomial, Rational)> {
    let mut exps = vec![0u32; vars.len()];
    let coeff = match lx.peek() {
        Some(b) if b.is_ascii_digit() => {
            let num = lx.integer()?;
            let c = if lx.peek() == Some(b'/') {
                lx.bump();
                let den = lx.integer()?;
                if den.is_zero() {
                    return Err(lx.error("zero denominator"));
                }
                Rational::new(num, den)
            } else {
                Rational::from_integer(num)
            };
            if lx.peek() == Some(b'*') {
                lx.bump();
                parse_factor(lx, vars, &mut exps)?;
            } else {
                return Ok((Monomial::new(exps), c));
            }
            c
        }
        Some(b) if b.is_ascii_alphabetic() => {
            parse_factor(lx, vars, &mut exps)?;
            Rational::one()
        }
        Some(c) => return Err(lx.error(format!("unexpected character `{}`", c as char))),
        None => return Err(lx.error("unexpected end of input")),
    };
    while lx.peek() == Some(b'*') {
        lx.bump();
        parse_factor(lx, vars, &mut exps)?;
    }
    Ok((Monomial::new(exps), coeff))
}

fn parse_factor(lx: &mut Lexer, vars: &VariableSet, exps: &mut [u32]) -> Result<()> {
    let name = lx.ident()?;
    let idx = vars
        .index_of(&name)
        .ok_or(Error::UnknownVariable(name))?;
    let mut e = 1u32;
    if lx.peek() == Some(b'^') {
        lx.bump();
        let n = lx.integer()?;
        if n.is_zero() {
            return Err(lx.error("exponent must be positive"));
        }
        e = u32::try_from(&n).map_err(|_| lx.error("exponent too large"))?;
    }
    exps[idx] += e;
    Ok(())
}
