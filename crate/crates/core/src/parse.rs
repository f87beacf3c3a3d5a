//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := sign? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | 'i' | identifier | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant and there is no implicit multiplication. The
//! optional leading sign lets printed polynomials such as `-x1 + x2` read back.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::ScalarMatrix;
use crate::poly::{PolyRing, Polynomial};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            out.push(Spanned { tok, line: l, column: col });
        } else if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            let n: BigInt = s.parse().expect("digits");
            out.push(Spanned { tok: Tok::Int(n), line: l, column: col });
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push(Spanned { tok: Tok::Ident(s), line: l, column: col });
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
    allow_idents: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, at: &Spanned, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: at.line,
            column: at.column,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let Tok::Int(n) = &t.tok else {
                return self.error(&t, "expected an unsigned integer exponent");
            };
            let Ok(e) = u32::try_from(n) else {
                return self.error(&t, "exponent too large");
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => {
                let mut value = BigRational::from_integer(n.clone());
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    let Tok::Int(den) = &d.tok else {
                        return self.error(&d, "expected an unsigned integer denominator");
                    };
                    if den.is_zero() {
                        return self.error(&d, "zero denominator");
                    }
                    value = BigRational::new(n.clone(), den.clone());
                }
                Ok(Polynomial::constant(self.ring, Scalar::from_rational(value)))
            }
            Tok::Ident(name) if name == "i" => Ok(Polynomial::constant(self.ring, Scalar::i())),
            Tok::Ident(name) => {
                let idx = if self.allow_idents { self.ring.index_of(name) } else { None };
                match idx {
                    Some(k) => Ok(Polynomial::var(self.ring, k)),
                    None => Err(Error::UndeclaredIdentifier {
                        name: name.clone(),
                        line: t.line,
                        column: t.column,
                    }),
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.error(&close, "expected `)`");
                }
                Ok(inner)
            }
            Tok::End => self.error(&t, "unexpected end of input"),
            other => self.error(&t, format!("unexpected token {other:?}")),
        }
    }
}

fn run(text: &str, ring: &Arc<PolyRing>, allow_idents: bool) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        allow_idents,
    };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.error(&t, format!("unexpected trailing token {:?}", t.tok));
    }
    Ok(out)
}

/// Parses and fully expands an expression over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    run(text, ring, true)
}

/// Parses a constant expression such as `-1/2*i` or `(1+i)^2`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let ring = PolyRing::new(["c"]).expect("valid ring");
    let p = run(text, &ring, false)?;
    let m = crate::poly::Monomial::one(1);
    Ok(p.coefficient(&m))
}

/// Matrix text: one row per non-empty line, entries separated by commas.
/// `#` starts a comment.
pub fn parse_matrix(text: &str) -> Result<ScalarMatrix> {
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| {
                parse_scalar(cell).map_err(|e| match e {
                    Error::Syntax { column, message, .. } => Error::Syntax {
                        line: lineno + 1,
                        column,
                        message,
                    },
                    Error::UndeclaredIdentifier { name, column, .. } => Error::UndeclaredIdentifier {
                        name,
                        line: lineno + 1,
                        column,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let m = ScalarMatrix::from_rows(rows)?;
    if !m.is_square() {
        return Err(Error::SizeMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    Ok(m)
}
