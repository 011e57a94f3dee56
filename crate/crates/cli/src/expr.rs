//! Parser for elements of `K(x)[y]`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*
//! factor := base ('^' uint)?
//! base   := 'x' | 'y' | int | '(' expr ')' | '-' factor
//! ```
//!
//! Juxtaposition multiplies, so `2x^3y` is `2·x³·y`. Denominators must be free
//! of `y` once evaluated. Exponents, nesting and result degrees are capped so
//! that hostile input fails fast instead of exhausting memory.

use std::fmt;

use lexval::exactfield::{Degree, Rat, RatFunc};
use lexval::ypoly::YPoly;
use num_bigint::BigInt;
use thiserror::Error;

pub const MAX_EXPONENT: u32 = 64;
pub const MAX_DEPTH: usize = 64;
pub const MAX_DEG_Y: usize = 128;
pub const MAX_DEG_X: usize = 256;
pub const MAX_LITERAL_DIGITS: usize = 64;
/// Bounds the depth of left-nested operator chains as well as input size.
pub const MAX_TOKENS: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected}, found {found}")]
    Expected { expected: &'static str, found: String },
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent exceeds {MAX_EXPONENT}")]
    ExponentTooLarge,
    #[error("integer literal exceeds {MAX_LITERAL_DIGITS} digits")]
    LiteralTooLong,
    #[error("input exceeds {MAX_TOKENS} tokens")]
    TooManyTokens,
    #[error("nesting exceeds depth {MAX_DEPTH}")]
    TooDeep,
    #[error("denominator contains y")]
    DenominatorHasY,
    #[error("division by zero")]
    DivisionByZero,
    #[error("result degree exceeds the limit (y: {MAX_DEG_Y}, x: {MAX_DEG_X})")]
    TooLarge,
}

impl ParseErrorKind {
    pub fn is_syntax(&self) -> bool {
        !matches!(
            self,
            ParseErrorKind::DenominatorHasY | ParseErrorKind::DivisionByZero | ParseErrorKind::TooLarge
        )
    }
}

/// An error together with the byte offset it refers to.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Int(BigInt),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A syntax tree node and the byte offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub node: Node,
    pub offset: usize,
}

impl fmt::Display for Expr {
    /// Fully parenthesized form, mainly for debugging.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Int(n) => write!(f, "{n}"),
            Node::X => f.write_str("x"),
            Node::Y => f.write_str("y"),
            Node::Neg(a) => write!(f, "(-{a})"),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Sub(a, b) => write!(f, "({a} - {b})"),
            Node::Mul(a, b) => write!(f, "({a} * {b})"),
            Node::Div(a, b) => write!(f, "({a} / {b})"),
            Node::Pow(a, e) => write!(f, "({a}^{e})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
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

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::X => "'x'".into(),
            Tok::Y => "'y'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut digits = c.to_string();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                if digits.len() > MAX_LITERAL_DIGITS {
                    return Err(ParseError {
                        kind: ParseErrorKind::LiteralTooLong,
                        offset: at,
                    });
                }
                Tok::Int(digits)
            }
            'x' => Tok::X,
            'y' => Tok::Y,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnexpectedChar(other),
                    offset: at,
                })
            }
        };
        if out.len() == MAX_TOKENS {
            return Err(ParseError {
                kind: ParseErrorKind::TooManyTokens,
                offset: at,
            });
        }
        out.push((tok, at));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |&(_, at)| at)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            offset: self.offset(),
        }
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err(ParseErrorKind::TooDeep));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let mut lhs = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek().cloned() {
            self.bump();
            let rhs = self.term()?;
            let offset = lhs.offset;
            let (a, b) = (Box::new(lhs), Box::new(rhs));
            let node = if op == Tok::Plus { Node::Add(a, b) } else { Node::Sub(a, b) };
            lhs = Expr { node, offset };
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let div = match self.peek() {
                Some(Tok::Star) => false,
                Some(Tok::Slash) => true,
                Some(Tok::X | Tok::Y | Tok::Int(_) | Tok::LParen) => {
                    let rhs = self.factor()?;
                    let offset = lhs.offset;
                    lhs = Expr {
                        node: Node::Mul(Box::new(lhs), Box::new(rhs)),
                        offset,
                    };
                    continue;
                }
                _ => break,
            };
            self.bump();
            let rhs = self.factor()?;
            let offset = lhs.offset;
            let (a, b) = (Box::new(lhs), Box::new(rhs));
            let node = if div { Node::Div(a, b) } else { Node::Mul(a, b) };
            lhs = Expr { node, offset };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some((Tok::Int(digits), _)) => {
                let e: u32 = digits
                    .parse()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(ParseError {
                        kind: ParseErrorKind::ExponentTooLarge,
                        offset: at,
                    })?;
                let offset = base.offset;
                Ok(Expr {
                    node: Node::Pow(Box::new(base), e),
                    offset,
                })
            }
            Some((Tok::Minus, _)) => Err(ParseError {
                kind: ParseErrorKind::NegativeExponent,
                offset: at,
            }),
            Some((t, _)) => Err(ParseError {
                kind: ParseErrorKind::Expected {
                    expected: "exponent",
                    found: t.describe(),
                },
                offset: at,
            }),
            None => Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                offset: at,
            }),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        let Some((tok, _)) = self.bump() else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                offset: at,
            });
        };
        let node = match tok {
            Tok::X => Node::X,
            Tok::Y => Node::Y,
            Tok::Int(digits) => Node::Int(digits.parse().expect("decimal digits")),
            Tok::Minus => {
                self.enter()?;
                let inner = self.factor()?;
                self.depth -= 1;
                Node::Neg(Box::new(inner))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => return Ok(Expr { node: inner.node, offset: at }),
                    Some((t, close)) => {
                        return Err(ParseError {
                            kind: ParseErrorKind::Expected {
                                expected: "')'",
                                found: t.describe(),
                            },
                            offset: close,
                        })
                    }
                    None => {
                        return Err(ParseError {
                            kind: ParseErrorKind::UnexpectedEnd,
                            offset: self.end,
                        })
                    }
                }
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Expected {
                        expected: "operand",
                        found: other.describe(),
                    },
                    offset: at,
                })
            }
        };
        Ok(Expr { node, offset: at })
    }
}

/// Parses `src` into a syntax tree without evaluating it.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        end: src.len(),
        depth: 0,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        let kind = if *t == Tok::RParen {
            ParseErrorKind::Expected {
                expected: "end of input",
                found: t.describe(),
            }
        } else {
            ParseErrorKind::Expected {
                expected: "operator",
                found: t.describe(),
            }
        };
        return Err(p.err(kind));
    }
    Ok(e)
}

fn deg_x(f: &YPoly) -> usize {
    f.terms()
        .map(|(_, c)| {
            let d = |p: &lexval::UniPoly| p.degree().finite().unwrap_or(0);
            d(c.num()).max(d(c.den()))
        })
        .max()
        .unwrap_or(0)
}

fn deg_y(f: &YPoly) -> usize {
    f.deg_y().finite().unwrap_or(0)
}

fn check_size(f: YPoly, offset: usize) -> Result<YPoly, ParseError> {
    if deg_y(&f) > MAX_DEG_Y || deg_x(&f) > MAX_DEG_X {
        return Err(ParseError {
            kind: ParseErrorKind::TooLarge,
            offset,
        });
    }
    Ok(f)
}

/// Evaluates a syntax tree to an element of `K(x)[y]`.
pub fn lower(e: &Expr) -> Result<YPoly, ParseError> {
    let at = e.offset;
    let out = match &e.node {
        Node::Int(n) => YPoly::constant(RatFunc::constant(Rat::from_integer(n.clone()))),
        Node::X => YPoly::x(),
        Node::Y => YPoly::y(),
        Node::Neg(a) => -&lower(a)?,
        Node::Add(a, b) => &lower(a)? + &lower(b)?,
        Node::Sub(a, b) => &lower(a)? - &lower(b)?,
        Node::Mul(a, b) => {
            let (fa, fb) = (lower(a)?, lower(b)?);
            if deg_y(&fa) + deg_y(&fb) > MAX_DEG_Y || deg_x(&fa) + deg_x(&fb) > MAX_DEG_X {
                return Err(ParseError {
                    kind: ParseErrorKind::TooLarge,
                    offset: at,
                });
            }
            &fa * &fb
        }
        Node::Div(a, b) => {
            let num = lower(a)?;
            let den = lower(b)?;
            if den.is_zero() {
                return Err(ParseError {
                    kind: ParseErrorKind::DivisionByZero,
                    offset: b.offset,
                });
            }
            if den.deg_y() != Degree::Finite(0) {
                return Err(ParseError {
                    kind: ParseErrorKind::DenominatorHasY,
                    offset: b.offset,
                });
            }
            let inv = den.coeff(0).recip().expect("nonzero");
            num.scale(&inv)
        }
        Node::Pow(a, k) => {
            let base = lower(a)?;
            let k = *k as usize;
            if deg_y(&base) * k > MAX_DEG_Y || deg_x(&base) * k > MAX_DEG_X {
                return Err(ParseError {
                    kind: ParseErrorKind::TooLarge,
                    offset: at,
                });
            }
            base.pow(k as u32)
        }
    };
    check_size(out, at)
}

/// Parses and evaluates `src`.
pub fn parse_ypoly(src: &str) -> Result<YPoly, ParseError> {
    lower(&parse_expr(src)?)
}
