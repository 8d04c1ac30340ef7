//! Parsing and formatting of fourvector literals.
//!
//! The textual form is four comma-separated complex literals in
//! parentheses, e.g. `(1, 3+5i, 2, -1)`. A complex literal is `real`,
//! `real+realI`, `real-realI` or `realI`; whitespace between tokens is
//! insignificant. A bare `i` is accepted as `1i` on input but never
//! emitted.

use crate::fourvector::Fourvector;
use crate::scalar::ComplexScalar;
use thiserror::Error;

/// Failed parse, with the byte offset where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, wanted: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(wanted) {
            self.pos += wanted.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{wanted}'")))
        }
    }

    /// An unsigned decimal number with optional fraction and exponent.
    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end < bytes.len() && bytes[end] == b'.' {
            end += 1;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
        }
        if end == start || &self.text[start..end] == "." {
            return Err(self.error("expected number"));
        }
        if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
            let mut exp = end + 1;
            if exp < bytes.len() && (bytes[exp] == b'+' || bytes[exp] == b'-') {
                exp += 1;
            }
            let digits = exp;
            while exp < bytes.len() && bytes[exp].is_ascii_digit() {
                exp += 1;
            }
            if exp > digits {
                end = exp;
            }
        }
        let value: f64 = self.text[start..end]
            .parse()
            .map_err(|_| self.error("expected number"))?;
        self.pos = end;
        Ok(value)
    }

    /// One signed term: a real number, an imaginary number with `i`
    /// suffix, or a bare (possibly signed) `i`.
    fn term(&mut self) -> Result<(f64, bool), ParseError> {
        self.skip_ws();
        let mut sign = 1.0;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') => {
                sign = -1.0;
                self.pos += 1;
            }
            _ => {}
        }
        self.skip_ws();
        if self.peek() == Some('i') {
            self.pos += 1;
            return Ok((sign, true));
        }
        let value = self.number()?;
        if self.peek() == Some('i') {
            self.pos += 1;
            Ok((sign * value, true))
        } else {
            Ok((sign * value, false))
        }
    }

    /// A complex literal: one term, optionally followed by a signed
    /// imaginary term.
    fn complex(&mut self) -> Result<ComplexScalar, ParseError> {
        let (first, first_imag) = self.term()?;
        self.skip_ws();
        let has_second = matches!(self.peek(), Some('+') | Some('-'));
        if !has_second {
            return Ok(if first_imag {
                ComplexScalar::imaginary(first)
            } else {
                ComplexScalar::real(first)
            });
        }
        if first_imag {
            return Err(self.error("imaginary part must come last"));
        }
        let second_pos = self.pos;
        let (second, second_imag) = self.term()?;
        if !second_imag {
            return Err(ParseError {
                position: second_pos,
                message: "expected imaginary term after sign".into(),
            });
        }
        Ok(ComplexScalar::new(first, second))
    }
}

/// Parse a single complex literal, requiring the whole string to match.
pub fn parse_complex(text: &str) -> Result<ComplexScalar, ParseError> {
    let mut cur = Cursor::new(text);
    let value = cur.complex()?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parse a fourvector literal like `(1, 3+5i, 2, -1)`.
pub fn parse_fourvector(text: &str) -> Result<Fourvector, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect('(')?;
    let mut components = [ComplexScalar::ZERO; 4];
    for (idx, slot) in components.iter_mut().enumerate() {
        if idx > 0 {
            cur.skip_ws();
            if cur.peek() != Some(',') {
                return Err(cur.error("expected ',' between components"));
            }
            cur.pos += 1;
        }
        *slot = cur.complex()?;
    }
    cur.skip_ws();
    if cur.peek() != Some(')') {
        return Err(cur.error("expected ')'"));
    }
    cur.pos += 1;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(Fourvector::from_components(components))
}

/// Format a real number at the given precision. Precision 1..=16 is
/// fixed-point with trailing zeros trimmed; precision 17 and above uses
/// the shortest representation that parses back to the same value.
fn format_real(x: f64, precision: usize) -> String {
    let mut s = if precision >= 17 {
        format!("{x}")
    } else {
        let mut fixed = format!("{x:.precision$}");
        if fixed.contains('.') {
            while fixed.ends_with('0') {
                fixed.pop();
            }
            if fixed.ends_with('.') {
                fixed.pop();
            }
        }
        fixed
    };
    if s == "-0" {
        s.clear();
        s.push('0');
    }
    s
}

/// Canonical text for one complex component.
pub fn format_complex(c: ComplexScalar, precision: usize) -> String {
    let re = format_real(c.re, precision);
    let im = format_real(c.im, precision);
    if im == "0" {
        re
    } else if re == "0" {
        format!("{im}i")
    } else if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

/// Canonical text for a fourvector: `(t, x, y, z)`.
pub fn format_fourvector(v: Fourvector, precision: usize) -> String {
    let [t, x, y, z] = v.components();
    format!(
        "({}, {}, {}, {})",
        format_complex(t, precision),
        format_complex(x, precision),
        format_complex(y, precision),
        format_complex(z, precision)
    )
}
