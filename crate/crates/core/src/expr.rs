//! Divisor expressions: `3E23 + E14 + 2*E_56`, `E12 + T3`, ...
//!
//! ```text
//! expr := ['+'|'-'] term (('+'|'-') term)*  |  '0'
//! term := [integer ['*']] name
//! name := ('E'|'T') ['_'] ['{'] digits ['}']
//! ```
//!
//! Whitespace is ignored between tokens. Repeated names accumulate.

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, LatticeContext, RANK};

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Reject expressions whose accumulated coefficients are not all nonnegative.
    pub effective_only: bool,
}

impl ParseOptions {
    pub fn effective() -> Self {
        ParseOptions { effective_only: true }
    }
}

/// Parses an expression, allowing negative coefficients.
pub fn parse_divisor(text: &str) -> Result<DivisorClass> {
    parse_divisor_with(text, ParseOptions::default())
}

/// Parses an expression that must describe an effective divisor.
pub fn parse_effective(text: &str) -> Result<DivisorClass> {
    parse_divisor_with(text, ParseOptions::effective())
}

pub fn parse_divisor_with(text: &str, opts: ParseOptions) -> Result<DivisorClass> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::EmptyExpression);
    }
    if p.peek() == Some(b'0') && {
        let save = p.pos;
        p.pos += 1;
        p.skip_ws();
        let whole = p.at_end();
        p.pos = save;
        whole
    } {
        return Ok(DivisorClass::zero());
    }

    let ctx = LatticeContext::global();
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        p.skip_ws();
        let sign = match p.peek() {
            Some(b'+') => {
                p.pos += 1;
                1
            }
            Some(b'-') => {
                p.pos += 1;
                -1
            }
            _ if first => 1,
            Some(_) => return Err(p.error("expected '+' or '-'")),
            None => unreachable!(),
        };
        first = false;
        p.skip_ws();
        let (coeff, name_pos, name) = p.term()?;
        let index = ctx.index_of(&name).ok_or_else(|| {
            let raw = String::from_utf8_lossy(&p.src[name_pos..p.pos]).trim().to_string();
            Error::UnknownGenerator(raw)
        })?;
        terms.push((index, sign * coeff));
        p.skip_ws();
        if p.at_end() {
            break;
        }
    }

    let d = DivisorClass::from_terms(terms)?;
    if opts.effective_only {
        if let Some(i) = (0..RANK).find(|&i| d.coeff(i) < 0) {
            return Err(Error::NegativeCoefficient(ctx.generator(i).label.to_string()));
        }
    }
    Ok(d)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    /// Returns the coefficient, where the name starts, and the normalized name.
    fn term(&mut self) -> Result<(i64, usize, String)> {
        let mut coeff = 1;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let digits = self.digits().to_string();
            // Reject things like `12abc` before trying to read a coefficient out of them.
            if self.peek().is_some_and(|b| b.is_ascii_alphanumeric() && !matches!(b, b'E' | b'T' | b'e' | b't')) {
                let start = self.pos - digits.len();
                while self.peek().is_some_and(|b| b.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let raw = String::from_utf8_lossy(&self.src[start..self.pos]).to_string();
                return Err(Error::MalformedInteger(raw));
            }
            coeff = digits.parse::<i64>().map_err(|_| Error::MalformedInteger(digits.clone()))?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
        }

        let name_pos = self.pos;
        let letter = match self.peek() {
            Some(b'E' | b'e') => 'E',
            Some(b'T' | b't') => 'T',
            Some(_) => return Err(self.error("expected a generator name")),
            None => return Err(self.error("expected a generator name, found end of input")),
        };
        self.pos += 1;
        if self.peek() == Some(b'_') {
            self.pos += 1;
        }
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let digits = self.digits().to_string();
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.error("expected '}'"));
            }
            self.pos += 1;
        }
        if digits.is_empty() || self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
                self.pos += 1;
            }
            let raw = String::from_utf8_lossy(&self.src[name_pos..self.pos]).to_string();
            return Err(Error::UnknownGenerator(raw));
        }
        Ok((coeff, name_pos, format!("{letter}{digits}")))
    }
}

/// Canonical form: terms in basis order, unit coefficients omitted, `0` for
/// the zero class, e.g. `E0 + 2E13 - T4`.
pub fn format_divisor(d: &DivisorClass) -> String {
    let ctx = LatticeContext::global();
    let mut out = String::new();
    for i in d.support() {
        let c = d.coeff(i);
        let label = ctx.generator(i).label;
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
