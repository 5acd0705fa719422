//! Text front-end for integer polynomials in one variable `x`.
//!
//! Grammar (EBNF, whitespace ignored between tokens):
//!
//! ```text
//! input  := list | expr
//! list   := "[" sint { "," sint } "]"          coefficient list, c0 first
//! sint   := [ "-" ] int
//! expr   := [ "-" ] term { ("+" | "-") term }
//! term   := factor { "*" factor }
//! factor := atom [ "^" uint ]                  "^" is right-associative
//! atom   := uint | "x" | "(" expr ")"
//! ```
//!
//! Unary minus is permitted once, at the head of an expression (so also
//! directly inside parentheses); `x^2 - - 1` is rejected. Fractions are
//! rejected with a dedicated error.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input with byte position and a short description.
    Syntax { pos: usize, msg: String },
    /// A fraction or decimal point appeared; coefficients must be integers.
    NonIntegerCoefficient { pos: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, msg } => write!(f, "syntax error at position {}: {}", pos, msg),
            ParseError::NonIntegerCoefficient { pos } => {
                write!(f, "non-integer coefficient at position {}", pos)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'x' | b'X' => Tok::X,
            b'/' | b'.' => return Err(ParseError::NonIntegerCoefficient { pos: i }),
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'/' || bytes[i] == b'.') {
                    return Err(ParseError::NonIntegerCoefficient { pos: i });
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
                continue;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character {:?}", b as char),
                })
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(what)),
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.here(),
            msg: String::from(msg),
        }
    }

    fn expr(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPolynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    if n.sign() == num_bigint::Sign::Minus {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: String::from("exponent must be a nonnegative integer"),
                        });
                    }
                    let e: u32 = n.try_into().map_err(|_| ParseError::Syntax {
                        pos,
                        msg: String::from("exponent too large"),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos,
                        msg: String::from("expected integer exponent after '^'"),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPolynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(IntPolynomial::constant(n))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(IntPolynomial::x())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "expected ')'")?;
                Ok(e)
            }
            _ => Err(self.err("expected integer, 'x' or '('")),
        }
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            _ => Err(self.err("expected integer")),
        }
    }

    fn coeff_list(&mut self) -> Result<IntPolynomial, ParseError> {
        self.expect(Tok::LBracket, "expected '['")?;
        let mut coeffs = Vec::new();
        coeffs.push(self.signed_int()?);
        loop {
            match self.peek() {
                Some(Tok::Comma) => {
                    self.pos += 1;
                    coeffs.push(self.signed_int()?);
                }
                Some(Tok::RBracket) => {
                    self.pos += 1;
                    return Ok(IntPolynomial::new(coeffs));
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }
}

/// Parse a polynomial expression in `x` (or a bracketed coefficient
/// list, constant term first) into a normalized [`IntPolynomial`].
pub fn parse_poly(text: &str) -> Result<IntPolynomial, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let poly = if p.peek() == Some(&Tok::LBracket) {
        p.coeff_list()?
    } else {
        p.expr()?
    };
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}
