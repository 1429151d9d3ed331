//! Reader and canonical printer for presentation files.
//!
//! ```text
//! weyl n=2 m=2
//! rel: x1^2 d1^3 e1 + d1^5 e1
//! rel: x2^2 e1 - x1 e2
//! ```
//!
//! `∂` may stand for `d`, `−` for `-`, and `·` or `*` may separate factors.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt;

use dmod_core::{weyl_mul, Error as CoreError, ModuleElement, ModulePresentation, Rational, WeylElement};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Plus,
    Minus,
    Slash,
    Caret,
    X,
    D,
    E,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "{v}"),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Slash => f.write_str("/"),
            Tok::Caret => f.write_str("^"),
            Tok::X => f.write_str("x"),
            Tok::D => f.write_str("d"),
            Tok::E => f.write_str("e"),
        }
    }
}

/// Token with its 1-based column.
type Spanned = (Tok, usize);

fn lex(text: &str, line: usize, first_column: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = first_column + i;
        let tok = match c {
            c if c.is_whitespace() || c == '·' || c == '*' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), column));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            'x' => Tok::X,
            'd' | '∂' => Tok::D,
            'e' => Tok::E,
            other => {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("unexpected character '{other}'"),
                });
            }
        };
        out.push((tok, column));
        i += 1;
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, c)| c).unwrap_or(self.end_column)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn int(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(self.error(format!("expected {what}, found '{t}'"))),
            None => Err(self.error(format!("expected {what}, found end of line"))),
        }
    }

    fn index(&mut self, kind: char, bound: usize, bound_name: &str) -> Result<usize, ParseError> {
        let column = self.column();
        let v = self.int("an index")?;
        match usize::try_from(&v) {
            Ok(i) if (1..=bound).contains(&i) => Ok(i),
            _ => Err(ParseError {
                line: self.line,
                column,
                message: format!("index {kind}{v} out of range 1..={bound} ({bound_name} = {bound})"),
            }),
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        let column = self.column();
        let v = self.int("an exponent")?;
        u32::try_from(&v).map_err(|_| ParseError {
            line: self.line,
            column,
            message: format!("exponent {v} too large"),
        })
    }
}

/// `[rational] factor* gen`, with an optional sign already consumed by the caller.
fn term(cur: &mut Cursor<'_>, n: usize, m: usize, negate: bool) -> Result<ModuleElement, ParseError> {
    let mut coeff = Rational::one();
    let mut saw_number = false;
    if let Some(Tok::Int(_)) = cur.peek() {
        let num = cur.int("a coefficient")?;
        let mut den = BigInt::one();
        if cur.peek() == Some(&Tok::Slash) {
            cur.pos += 1;
            let column = cur.column();
            den = cur.int("a denominator")?;
            if den.is_zero() {
                return Err(ParseError {
                    line: cur.line,
                    column,
                    message: "zero denominator".into(),
                });
            }
        }
        coeff = Rational::new(num, den);
        saw_number = true;
    }
    let mut op = WeylElement::one(n);
    loop {
        match cur.peek() {
            Some(Tok::X) | Some(Tok::D) => {
                let is_x = cur.bump() == Some(Tok::X);
                let kind = if is_x { 'x' } else { 'd' };
                let i = cur.index(kind, n, "n")?;
                let e = cur.exponent()?;
                let var = if is_x {
                    WeylElement::x(n, i - 1)
                } else {
                    WeylElement::d(n, i - 1)
                };
                for _ in 0..e {
                    op = weyl_mul(&op, &var).expect("same dimension");
                }
            }
            Some(Tok::E) => {
                cur.pos += 1;
                let gen = cur.index('e', m, "m")?;
                let c = if negate { -coeff } else { coeff };
                return Ok(ModuleElement::from_weyl(&op, gen).scale(&c));
            }
            Some(Tok::Int(_)) if saw_number => return Err(cur.error("expected a factor or generator, found a number")),
            Some(t) => return Err(cur.error(format!("expected a factor or generator, found '{t}'"))),
            None => return Err(cur.error("expected a generator e<i>")),
        }
    }
}

fn expression(cur: &mut Cursor<'_>, n: usize, m: usize) -> Result<ModuleElement, ParseError> {
    if cur.peek().is_none() {
        return Err(cur.error("empty relation"));
    }
    let mut negate = false;
    if cur.peek() == Some(&Tok::Minus) {
        cur.pos += 1;
        negate = true;
    } else if cur.peek() == Some(&Tok::Plus) {
        cur.pos += 1;
    }
    let mut total = term(cur, n, m, negate)?;
    while let Some(t) = cur.peek() {
        let negate = match t {
            Tok::Plus => false,
            Tok::Minus => true,
            other => return Err(cur.error(format!("expected '+' or '-', found '{other}'"))),
        };
        cur.pos += 1;
        total = &total + &term(cur, n, m, negate)?;
    }
    Ok(total)
}

/// `n=INT` or `m=INT` inside the header.
fn header_field(word: &str, name: &str, line: usize, column: usize) -> Result<usize, ParseError> {
    let err = |message: String| ParseError { line, column, message };
    let value = word
        .strip_prefix(name)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| err(format!("expected '{name}=<int>', found '{word}'")))?;
    value
        .parse::<usize>()
        .map_err(|_| err(format!("invalid value '{value}' for {name}")))
}

fn header(text: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let mut words = Vec::new();
    let mut column = 1;
    for piece in text.split(' ') {
        if !piece.is_empty() {
            words.push((piece, column));
        }
        column += piece.chars().count() + 1;
    }
    let err = |column: usize, message: &str| ParseError {
        line,
        column,
        message: message.into(),
    };
    match words.as_slice() {
        [("weyl", _), (nw, nc), (mw, mc)] => {
            let n = header_field(nw, "n", line, *nc)?;
            let m = header_field(mw, "m", line, *mc)?;
            if n == 0 {
                return Err(err(*nc, "n must be positive"));
            }
            if m == 0 {
                return Err(err(*mc, "m must be positive"));
            }
            Ok((n, m))
        }
        [("weyl", _), ..] => Err(err(1, "header must be 'weyl n=<int> m=<int>'")),
        _ => Err(err(1, "expected header 'weyl n=<int> m=<int>'")),
    }
}

pub fn parse(source: &str) -> Result<ModulePresentation, ParseError> {
    let mut dims = None;
    let mut relations: Vec<(ModuleElement, usize)> = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = text.trim_start();
        let indent = text.chars().count() - trimmed.chars().count();
        if trimmed.trim().is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((n, m)) = dims else {
            let (n, m) = header(text.trim_end(), line).map_err(|mut e| {
                e.column += indent;
                e
            })?;
            dims = Some((n, m));
            continue;
        };
        let Some(body) = trimmed.strip_prefix("rel:") else {
            return Err(ParseError {
                line,
                column: indent + 1,
                message: "expected 'rel:'".into(),
            });
        };
        let first_column = indent + 1 + "rel:".len();
        let toks = lex(body, line, first_column)?;
        let mut cur = Cursor {
            toks: &toks,
            pos: 0,
            line,
            end_column: first_column + body.chars().count(),
        };
        let rel = expression(&mut cur, n, m)?;
        if rel.is_zero() {
            return Err(ParseError {
                line,
                column: first_column,
                message: "relation is zero".into(),
            });
        }
        relations.push((rel, line));
    }
    let (n, m) = dims.ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing header 'weyl n=<int> m=<int>'".into(),
    })?;
    let lines: Vec<usize> = relations.iter().map(|(_, l)| *l).collect();
    ModulePresentation::new(n, m, relations.into_iter().map(|(r, _)| r).collect()).map_err(|e| {
        let line = match &e {
            CoreError::ZeroRelation(i) => lines.get(i - 1).copied().unwrap_or(1),
            _ => 1,
        };
        ParseError {
            line,
            column: 1,
            message: e.to_string(),
        }
    })
}

/// Canonical text form; `parse(&print(p)) == p`.
pub fn print(p: &ModulePresentation) -> String {
    let mut out = format!("weyl n={} m={}\n", p.n(), p.m());
    for rel in p.relations() {
        out.push_str(&format!("rel: {rel}\n"));
    }
    out
}
