//! Polynomial literals: sums of terms `c`, `c*x^k`, `c x^k`, `x^k` with
//! integer, `a/b` or finite decimal coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{parse_decimal, parse_rational, Rational};

const MAX_EXPONENT: usize = 4096;

/// Where a polynomial comes from on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySource {
    Expression(String),
    /// Comma-separated `a0,a1,...`, lowest degree first.
    Coefficients(String),
}

pub fn parse_polynomial(src: &PolySource) -> Result<Polynomial> {
    match src {
        PolySource::Expression(text) => parse_expression(text),
        PolySource::Coefficients(text) => parse_coefficients(text),
    }
}

pub fn parse_coefficients(text: &str) -> Result<Polynomial> {
    let mut coeffs = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let lead = item.len() - item.trim_start().len();
        let c = parse_rational(item).map_err(|e| shift(e, offset + lead))?;
        coeffs.push(c);
        offset += item.len() + 1;
    }
    Ok(Polynomial::new(coeffs))
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + by,
            message,
        },
        Error::UnsupportedCoefficient { token, position } => Error::UnsupportedCoefficient {
            token,
            position: position + by,
        },
        other => other,
    }
}

pub fn parse_expression(text: &str) -> Result<Polynomial> {
    let mut cur = Cursor { text, pos: 0 };
    let mut coeffs: Vec<Rational> = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return Err(cur.error("empty expression"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            Some(_) => return Err(cur.error("expected `+` or `-` between terms")),
            None => break,
        };
        first = false;
        cur.skip_ws();
        let (c, k) = cur.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        if negative {
            coeffs[k] -= c;
        } else {
            coeffs[k] += c;
        }
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
    }
    Ok(Polynomial::new(coeffs))
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    /// `coefficient [*] [x-power]` or a bare `x-power`.
    fn term(&mut self) -> Result<(Rational, usize)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let c = self.coefficient()?;
                self.skip_ws();
                let star = self.peek() == Some('*');
                if star {
                    self.bump();
                    self.skip_ws();
                }
                match self.peek() {
                    Some(ch) if ch.is_alphabetic() => Ok((c, self.power()?)),
                    _ if star => Err(self.error("expected `x` after `*`")),
                    _ => Ok((c, 0)),
                }
            }
            Some(ch) if ch.is_alphabetic() => Ok((Rational::one(), self.power()?)),
            Some(_) => Err(self.error("expected a coefficient or `x`")),
            None => Err(self.error("expected a term after the sign")),
        }
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit() || c == '.');
        parse_decimal(digits).ok_or(Error::Parse {
            position: start,
            message: format!("malformed number `{digits}`"),
        })
    }

    fn coefficient(&mut self) -> Result<Rational> {
        let value = self.number()?;
        self.skip_ws();
        if self.peek() != Some('/') {
            return Ok(value);
        }
        self.bump();
        self.skip_ws();
        let at = self.pos;
        let den = self.number()?;
        if den.is_zero() {
            return Err(Error::Parse {
                position: at,
                message: "zero denominator".into(),
            });
        }
        Ok(value / den)
    }

    /// `x` optionally followed by `^k`; any other identifier is rejected.
    fn power(&mut self) -> Result<usize> {
        let start = self.pos;
        let ident = self.take_while(|c| c.is_alphanumeric() || c == '_');
        if ident != "x" {
            return Err(Error::UnsupportedCoefficient {
                token: ident.to_string(),
                position: start,
            });
        }
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some('-') => return Err(self.error("negative exponents are not polynomial")),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("expected a nonnegative integer exponent")),
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        if self.peek() == Some('.') {
            return Err(self.error("exponents must be integers"));
        }
        match digits.parse::<usize>() {
            Ok(k) if k <= MAX_EXPONENT => Ok(k),
            _ => Err(Error::Parse {
                position: at,
                message: format!("exponent larger than {MAX_EXPONENT}"),
            }),
        }
    }
}
