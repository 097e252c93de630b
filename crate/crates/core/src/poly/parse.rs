//! Parser for polynomial expressions in `x` and `y`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/")? unary)*      juxtaposition multiplies
//! unary   := ("-" | "+") unary | power
//! power   := primary ("^" unary)?
//! primary := integer | "x" | "y" | "(" expr ")"
//! ```
//!
//! Division is only allowed by nonzero constants, so `3/2*x` is a rational
//! coefficient. Exponents must evaluate to nonnegative integers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Polynomial;

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnknownIdentifier(String),
    NegativeExponent,
    NonIntegerExponent,
    ExponentTooLarge,
    DivisionByNonConstant,
    DivisionByZero,
}

/// A syntax error; `position` counts characters from zero.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = self.position;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?} at position {at}"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input at position {at}"),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier {s:?} at position {at}"),
            ParseErrorKind::NegativeExponent => write!(f, "negative exponent at position {at}"),
            ParseErrorKind::NonIntegerExponent => {
                write!(f, "exponent at position {at} is not a nonnegative integer constant")
            }
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent at position {at} exceeds {MAX_EXPONENT}"),
            ParseErrorKind::DivisionByNonConstant => {
                write!(f, "division by a non-constant expression at position {at}")
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero at position {at}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(digits.parse().expect("ascii digits"))));
            continue;
        }
        if c.is_alphabetic() {
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if !word.chars().all(|ch| ch == 'x' || ch == 'y') {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::UnknownIdentifier(word),
                });
            }
            for (k, ch) in word.chars().enumerate() {
                out.push((start + k, if ch == 'x' { Tok::X } else { Tok::Y }));
            }
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.here(),
            kind,
        })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.toks.get(self.pos) {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some((p, t)) => Err(ParseError {
                position: *p,
                kind: ParseErrorKind::UnexpectedChar(tok_char(t)),
            }),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    let c = as_constant(&d).ok_or(ParseError {
                        position: at,
                        kind: ParseErrorKind::DivisionByNonConstant,
                    })?;
                    if c.is_zero() {
                        return Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    acc = acc.scale(&c.recip());
                }
                Some(Tok::Num(_) | Tok::X | Tok::Y | Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.here();
        let e = self.unary()?;
        let fail = |kind| Err(ParseError { position: at, kind });
        let Some(c) = as_constant(&e) else {
            return fail(ParseErrorKind::NonIntegerExponent);
        };
        if !c.is_integer() {
            return fail(ParseErrorKind::NonIntegerExponent);
        }
        if c.is_negative() {
            return fail(ParseErrorKind::NegativeExponent);
        }
        match c.to_integer().to_u32() {
            Some(k) if k <= MAX_EXPONENT => Ok(base.pow(k)),
            _ => fail(ParseErrorKind::ExponentTooLarge),
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err(ParseErrorKind::UnexpectedEnd);
        };
        match tok {
            Tok::Num(n) => {
                self.pos += 1;
                Ok(Polynomial::constant(BigRational::from_integer(n)))
            }
            Tok::X => {
                self.pos += 1;
                Ok(Polynomial::x())
            }
            Tok::Y => {
                self.pos += 1;
                Ok(Polynomial::y())
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.unexpected();
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.unexpected(),
        }
    }
}

fn tok_char(t: &Tok) -> char {
    match t {
        Tok::Num(_) => '0',
        Tok::X => 'x',
        Tok::Y => 'y',
        Tok::Plus => '+',
        Tok::Minus => '-',
        Tok::Star => '*',
        Tok::Slash => '/',
        Tok::Caret => '^',
        Tok::LParen => '(',
        Tok::RParen => ')',
    }
}

fn as_constant(p: &Polynomial) -> Option<BigRational> {
    match p.support().as_slice() {
        [] => Some(BigRational::zero()),
        [(0, 0)] => Some(p.constant_term()),
        _ => None,
    }
}

/// Parses and fully expands a polynomial expression.
pub fn parse(text: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.unexpected();
    }
    Ok(out)
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
