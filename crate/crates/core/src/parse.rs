//! Text form of Laurent polynomials.
//!
//! Accepted grammar (whitespace is ignored):
//!
//! ```text
//! polynomial := [sign] term (sign term)*
//! term       := [rational ["*"]] ["t" [exponent]]     (at least one part)
//! rational   := integer ["/" positive-integer]
//! exponent   := "^" [sign] integer | "^(" [sign] integer ")" | superscript digits
//! sign       := "+" | "-" | "−"
//! ```
//!
//! Rendering uses descending exponents, drops unit coefficients and writes
//! `*` only between a non-integer coefficient and `t`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rational};

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).polynomial()
    }
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    s.parse()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let mut parser = Parser::new(s);
    let negative = parser.sign().unwrap_or(false);
    let value = parser
        .rational()?
        .ok_or_else(|| parser.error("expected a rational number"))?;
    if let Some((pos, c)) = parser.peek() {
        return Err(Error::Syntax {
            position: pos,
            message: format!("unexpected character {c:?}"),
        });
    }
    Ok(if negative { -value } else { value })
}

struct Parser {
    chars: Vec<(usize, char)>,
    idx: usize,
    end: usize,
}

fn superscript_digit(c: char) -> Option<u32> {
    match c {
        '⁰' => Some(0),
        '¹' => Some(1),
        '²' => Some(2),
        '³' => Some(3),
        '⁴' => Some(4),
        '⁵' => Some(5),
        '⁶' => Some(6),
        '⁷' => Some(7),
        '⁸' => Some(8),
        '⁹' => Some(9),
        _ => None,
    }
}

impl Parser {
    fn new(s: &str) -> Self {
        let chars: Vec<(usize, char)> = s
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            idx: 0,
            end: s.chars().count(),
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.idx).copied()
    }

    fn position(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.position(),
            message: message.into(),
        }
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|(_, c)| c == want) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    /// `Some(true)` for a minus sign, `Some(false)` for plus.
    fn sign(&mut self) -> Option<bool> {
        match self.peek()?.1 {
            '+' => {
                self.idx += 1;
                Some(false)
            }
            '-' | '−' => {
                self.idx += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.idx;
        while self.peek().is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.idx += 1;
        }
        if start == self.idx {
            return None;
        }
        let digits: String = self.chars[start..self.idx].iter().map(|&(_, c)| c).collect();
        Some(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(numer) = self.integer() else {
            return Ok(None);
        };
        if !self.eat('/') {
            return Ok(Some(Rational::from_integer(numer)));
        }
        let denom = self
            .integer()
            .ok_or_else(|| self.error("expected a denominator after '/'"))?;
        if denom.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Some(Rational::new(numer, denom)))
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat('^') {
            let paren = self.eat('(');
            let negative = self.sign().unwrap_or(false);
            let value = self
                .integer()
                .ok_or_else(|| self.error("expected an integer exponent"))?;
            if paren && !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            let value: i64 = value
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(if negative { -value } else { value });
        }
        let negative = self.eat('⁻');
        let mut value: Option<i64> = None;
        while let Some(d) = self.peek().and_then(|(_, c)| superscript_digit(c)) {
            self.idx += 1;
            value = Some(
                value
                    .unwrap_or(0)
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as i64))
                    .ok_or_else(|| self.error("exponent out of range"))?,
            );
        }
        match (negative, value) {
            (_, Some(v)) => Ok(if negative { -v } else { v }),
            (true, None) => Err(self.error("expected superscript digits")),
            (false, None) => Ok(1),
        }
    }

    fn term(&mut self) -> Result<(Rational, i64)> {
        let coeff = self.rational()?;
        let had_star = coeff.is_some() && self.eat('*');
        if self.eat('t') {
            let exp = self.exponent()?;
            Ok((coeff.unwrap_or_else(Rational::one), exp))
        } else if had_star {
            Err(self.error("expected 't' after '*'"))
        } else if let Some(c) = coeff {
            Ok((c, 0))
        } else {
            Err(self.error("expected a coefficient or 't'"))
        }
    }

    fn polynomial(&mut self) -> Result<LaurentPoly> {
        if self.chars.is_empty() {
            return Err(self.error("empty polynomial"));
        }
        let mut acc = LaurentPoly::zero();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (c, e) = self.term()?;
            let c = if negative { -c } else { c };
            acc += &LaurentPoly::monomial(c, e);
            match self.peek() {
                None => return Ok(acc),
                Some((_, c)) => {
                    negative = self
                        .sign()
                        .ok_or_else(|| self.error(format!("unexpected character {c:?}")))?;
                }
            }
        }
    }
}

fn render_terms(p: &LaurentPoly, spaced: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        match (i == 0, neg, spaced) {
            (true, true, _) => out.push('-'),
            (true, false, _) => {}
            (false, true, true) => out.push_str(" - "),
            (false, false, true) => out.push_str(" + "),
            (false, true, false) => out.push('-'),
            (false, false, false) => out.push('+'),
        }
        let mag = c.abs();
        let tpart = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        if e == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&tpart);
        } else if mag.is_integer() {
            out.push_str(&format!("{mag}{tpart}"));
        } else {
            out.push_str(&format!("{mag}*{tpart}"));
        }
    }
    out
}

impl LaurentPoly {
    /// Rendering without spaces, e.g. `2t-1`.
    pub fn render_compact(&self) -> String {
        render_terms(self, false)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self, true))
    }
}
