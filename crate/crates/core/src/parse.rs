//! Parser for polynomial expressions like `x^2 - 3*x*y + (y + 1)^2`.
//!
//! Coefficients are integers or `p/q` fractions. The result is expressed over
//! a caller-supplied variable list and does not require a ring, so
//! presentations with invalid degrees can still be parsed and diagnosed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::field::Rational;

/// Polynomial as a map from exponent vectors to rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    pub terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = SparsePoly::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = SparsePoly::zero();
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let s = out.terms.get(e).cloned().unwrap_or_else(Rational::zero) + c;
            if s.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), s);
            }
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let mut t = SparsePoly::zero();
                t.terms.insert(e, c1 * c2);
                out = out.add(&t);
            }
        }
        out
    }

    /// Weighted degrees of the terms, in exponent-vector order.
    pub fn term_degrees(&self, weights: &[i64]) -> Vec<i64> {
        self.terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(&x, &w)| x as i64 * w).sum())
            .collect()
    }

    /// Writes the polynomial in the grammar accepted by [`parse_polynomial`].
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = names
                .iter()
                .zip(e)
                .filter(|(_, &x)| x > 0)
                .map(|(n, &x)| if x == 1 { n.clone() } else { format!("{n}^{x}") })
                .collect();
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sign = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sign);
            let mag_s = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&mag_s),
                (false, true) => out.push_str(&mono.join("*")),
                (false, false) => {
                    out.push_str(&mag_s);
                    out.push('*');
                    out.push_str(&mono.join("*"));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input, zero based.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a polynomial over the given variable names.
pub fn parse_polynomial(input: &str, names: &[String]) -> Result<SparsePoly, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        names,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err(&self, m: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: m.into(),
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

    fn expr(&mut self) -> Result<SparsePoly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    let inv = Rational::new(BigInt::one(), d);
                    acc = acc.mul(&SparsePoly::constant(self.names.len(), inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<SparsePoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent must be a small non-negative integer"))?;
            let mut acc = SparsePoly::constant(self.names.len(), Rational::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<SparsePoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(SparsePoly::constant(
                    self.names.len(),
                    Rational::from_integer(n),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(SparsePoly::var(self.names.len(), i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_and_renders() {
        let p = parse_polynomial("x^2 - 3*x*y + (y+1)^2 - 1", &names()).unwrap();
        assert_eq!(p.render(&names()), "x^2 - 3*x*y + y^2 + 2*y");
        let q = parse_polynomial("x/2 - y", &names()).unwrap();
        assert_eq!(q.render(&names()), "1/2*x - y");
        assert_eq!(parse_polynomial(&q.render(&names()), &names()).unwrap(), q);
    }

    #[test]
    fn reports_offsets() {
        let e = parse_polynomial("x + z", &names()).unwrap_err();
        assert_eq!(e.offset, 4);
        let e = parse_polynomial("x +", &names()).unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(parse_polynomial("x )", &names()).is_err());
    }
}
