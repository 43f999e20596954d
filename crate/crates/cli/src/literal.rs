//! Octonion literals such as `1+2i-3jl` or `-0.5 + kl`.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! literal := sign? term (sign term)*
//! term    := number unit? | unit
//! unit    := "il" | "jl" | "kl" | "i" | "j" | "k" | "l"
//! number  := digits ("." digits?)? (("e" | "E") sign? digits)?
//! sign    := "+" | "-"
//! ```
//!
//! Repeated units accumulate (`i + i` is `2i`). Two-letter units are
//! matched before single letters.

use std::fmt;
use std::str::FromStr;

use octoquad::{Octonion, Unit};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnknownUnit(String),
    MalformedNumber(String),
    NonFinite(String),
    ExpectedTerm,
    ExpectedSign,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Empty => f.write_str("empty literal"),
            ParseErrorKind::UnknownUnit(u) => write!(f, "unknown unit `{u}`"),
            ParseErrorKind::MalformedNumber(n) => write!(f, "malformed number `{n}`"),
            ParseErrorKind::NonFinite(n) => write!(f, "coefficient `{n}` is not finite"),
            ParseErrorKind::ExpectedTerm => f.write_str("expected a coefficient or unit"),
            ParseErrorKind::ExpectedSign => f.write_str("expected `+` or `-` between terms"),
        }
    }
}

/// Parse failure; `pos` is a byte offset into the original text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {pos}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

/// A parsed literal together with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct OctLiteral {
    pub source: String,
    pub value: Octonion,
}

impl FromStr for OctLiteral {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(OctLiteral {
            source: s.to_owned(),
            value: parse_octonion(s)?,
        })
    }
}

struct Scanner {
    // (byte offset in source, char), whitespace removed
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Scanner {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|(_, c)| *c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind,
        }
    }

    fn sign(&mut self) -> Option<f64> {
        let s = match self.peek()? {
            '+' => 1.0,
            '-' | '\u{2212}' => -1.0,
            _ => return None,
        };
        self.at += 1;
        Some(s)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(|c| f(*c)) {
            out.push(c);
            self.at += 1;
        }
        out
    }

    fn number(&mut self) -> Result<Option<f64>, ParseError> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            return Ok(None);
        }
        let start = self.pos();
        let mut text = self.take_while(|c| c.is_ascii_digit() || c == '.');
        if matches!(self.peek(), Some('e' | 'E')) {
            let save = self.at;
            let mut exp = String::from('e');
            self.at += 1;
            if let Some(c @ ('+' | '-')) = self.peek() {
                exp.push(c);
                self.at += 1;
            }
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                self.at = save;
            } else {
                text.push_str(&exp);
                text.push_str(&digits);
            }
        }
        let value: f64 = text.parse().map_err(|_| ParseError {
            pos: start,
            kind: ParseErrorKind::MalformedNumber(text.clone()),
        })?;
        if !value.is_finite() {
            return Err(ParseError {
                pos: start,
                kind: ParseErrorKind::NonFinite(text),
            });
        }
        Ok(Some(value))
    }

    fn unit(&mut self) -> Result<Option<Unit>, ParseError> {
        let start = self.pos();
        let word = self.take_while(|c| c.is_alphabetic());
        if word.is_empty() {
            return Ok(None);
        }
        let unit = match word.as_str() {
            "il" => Unit::IL,
            "jl" => Unit::JL,
            "kl" => Unit::KL,
            "i" => Unit::I,
            "j" => Unit::J,
            "k" => Unit::K,
            "l" => Unit::L,
            _ => {
                return Err(ParseError {
                    pos: start,
                    kind: ParseErrorKind::UnknownUnit(word),
                })
            }
        };
        Ok(Some(unit))
    }
}

pub fn parse_octonion(text: &str) -> Result<Octonion, ParseError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut sc = Scanner {
        chars,
        at: 0,
        end: text.len(),
    };
    if sc.peek().is_none() {
        return Err(sc.err(ParseErrorKind::Empty));
    }

    let mut coeffs = [0.0f64; 8];
    let mut first = true;
    while sc.peek().is_some() {
        let sign = match sc.sign() {
            Some(s) => s,
            None if first => 1.0,
            None => return Err(sc.err(ParseErrorKind::ExpectedSign)),
        };
        first = false;
        let number = sc.number()?;
        let unit = sc.unit()?;
        let (coef, unit) = match (number, unit) {
            (None, None) => return Err(sc.err(ParseErrorKind::ExpectedTerm)),
            (n, u) => (n.unwrap_or(1.0), u.unwrap_or(Unit::One)),
        };
        coeffs[unit.index()] += sign * coef;
    }
    if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
        return Err(ParseError {
            pos: 0,
            kind: ParseErrorKind::NonFinite(coeffs[k].to_string()),
        });
    }
    Ok(Octonion::new(coeffs))
}

/// Compact literal, e.g. `1+2i-3jl`. Coefficients use the shortest decimal
/// form that reads back to the same double.
pub fn format_octonion(x: Octonion) -> String {
    let mut out = String::new();
    for unit in Unit::ALL {
        let c = x[unit];
        if c == 0.0 {
            continue;
        }
        if c < 0.0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        match unit {
            Unit::One => out.push_str(&mag.to_string()),
            _ if mag == 1.0 => out.push_str(unit.symbol()),
            _ => {
                out.push_str(&mag.to_string());
                out.push_str(unit.symbol());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
