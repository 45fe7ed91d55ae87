//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | integer '/' integer | identifier | '(' expr ')'
//! ```
//!
//! Implicit multiplication is rejected: `2x` is a syntax error.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{PolyError, Polynomial, Ring};
use crate::Rational;

const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn syntax(&self, position: usize, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position,
            message: message.into(),
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while matches!(self.peek_char(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// Next token with its starting byte offset.
    fn next(&mut self) -> Result<Option<(usize, Token)>, PolyError> {
        while matches!(self.peek_char(), Some(c) if c.is_whitespace()) {
            self.pos += self.peek_char().unwrap().len_utf8();
        }
        let start = self.pos;
        let c = match self.peek_char() {
            None => return Ok(None),
            Some(c) => c,
        };
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            c if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().unwrap();
                let mut value = Rational::from_integer(num);
                if self.src[self.pos..].starts_with('/')
                    && self.src[self.pos + 1..].starts_with(|c: char| c.is_ascii_digit())
                {
                    self.pos += 1;
                    let at = self.pos;
                    let den: BigInt = self.digits().parse().unwrap();
                    if den.is_zero() {
                        return Err(self.syntax(at, "zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                return Ok(Some((start, Token::Number(value))));
            }
            c if c.is_ascii_alphabetic() => {
                while matches!(self.peek_char(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                return Ok(Some((start, Token::Ident(self.src[start..self.pos].to_string()))));
            }
            other => return Err(self.syntax(start, format!("unexpected character `{}`", other))),
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    ring: &'a Arc<Ring>,
    lookahead: Option<(usize, Token)>,
}

impl<'a> Parser<'a> {
    fn advance(&mut self) -> Result<(), PolyError> {
        self.lookahead = self.lexer.next()?;
        Ok(())
    }

    fn position(&self) -> usize {
        self.lookahead.as_ref().map_or(self.lexer.src.len(), |(p, _)| *p)
    }

    fn peek(&self) -> Option<&Token> {
        self.lookahead.as_ref().map(|(_, t)| t)
    }

    fn unexpected(&self) -> PolyError {
        let message = match &self.lookahead {
            None => "unexpected end of input".to_string(),
            Some((_, Token::Number(n))) => format!("unexpected number `{}`", n),
            Some((_, Token::Ident(s))) => format!("unexpected identifier `{}`", s),
            Some((_, t)) => format!("unexpected token {:?}", t),
        };
        PolyError::Syntax {
            position: self.position(),
            message,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.advance()?;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.advance()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.advance()?;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.advance()?;
                Ok(-&self.unary()?)
            }
            Some(Token::Plus) => {
                self.advance()?;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.advance()?;
            let at = self.position();
            let exp = match self.peek() {
                Some(Token::Number(n)) if n.is_integer() => n.to_integer(),
                _ => return Err(self.unexpected()),
            };
            let exp: u32 = match u32::try_from(exp) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(PolyError::Syntax {
                        position: at,
                        message: "exponent out of range".to_string(),
                    })
                }
            };
            self.advance()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        let (pos, tok) = match self.lookahead.take() {
            Some(t) => t,
            None => return Err(self.unexpected()),
        };
        let out = match tok {
            Token::Number(n) => Polynomial::constant(self.ring, n),
            Token::Ident(name) => match self.ring.index_of(&name) {
                Some(i) => Polynomial::var(self.ring, i)?,
                None => return Err(PolyError::UnknownVariable { name, position: pos }),
            },
            Token::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.unexpected());
                }
                inner
            }
            other => {
                self.lookahead = Some((pos, other));
                return Err(self.unexpected());
            }
        };
        self.advance()?;
        Ok(out)
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        let mut parser = Parser {
            lexer: Lexer { src: text, pos: 0 },
            ring,
            lookahead: None,
        };
        parser.advance()?;
        let p = parser.expr()?;
        if parser.lookahead.is_some() {
            return Err(parser.unexpected());
        }
        Ok(p)
    }
}
