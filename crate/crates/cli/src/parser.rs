//! Recursive-descent parser for calculator expressions.
//!
//! Precedence, loosest to tightest, all binaries left-associative:
//!
//! ```text
//! + -        addition, subtraction
//! .          scalar product
//! << >>      left / right contraction
//! ^          exterior product
//! *          geometric product
//! ~ - grade  unary reversion, unary negation, grade selection, parens
//! ```

use crate::error::CliError;
use crate::lexer::{tokenize, Token, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    ScalarProduct,
    LeftContract,
    RightContract,
    Wedge,
    Geometric,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NodeKind {
    Number(f64),
    /// 1-based basis vector index, validated against the dimension at
    /// evaluation time.
    Basis(usize),
    Grade(Box<Node>, usize),
    Unary(UnaryOp, Box<Node>),
    Binary(BinaryOp, Box<Node>, Box<Node>),
}

/// An expression node plus the byte offset of the token that introduced it
/// (the operator for binary nodes), so evaluation errors can point home.
#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub offset: usize,
}

pub fn parse(src: &str) -> Result<Node, CliError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens: &tokens, pos: 0, end: src.len() };
    let node = parser.additive()?;
    if let Some(tok) = parser.peek() {
        return Err(CliError::syntax(
            tok.offset,
            format!("unexpected {} after expression", describe(&tok.kind)),
        ));
    }
    Ok(node)
}

fn describe(kind: &TokenKind) -> String {
    match kind {
        TokenKind::Number(x) => format!("number `{x}`"),
        TokenKind::Symbol(s) => format!("symbol `{s}`"),
        TokenKind::Plus => "`+`".to_string(),
        TokenKind::Minus => "`-`".to_string(),
        TokenKind::Star => "`*`".to_string(),
        TokenKind::Caret => "`^`".to_string(),
        TokenKind::Dot => "`.`".to_string(),
        TokenKind::LeftContract => "`<<`".to_string(),
        TokenKind::RightContract => "`>>`".to_string(),
        TokenKind::Tilde => "`~`".to_string(),
        TokenKind::LParen => "`(`".to_string(),
        TokenKind::RParen => "`)`".to_string(),
        TokenKind::Comma => "`,`".to_string(),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    /// Byte length of the source, used as the offset for end-of-input errors.
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.pos);
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<&'a Token, CliError> {
        match self.peek() {
            Some(tok) if &tok.kind == kind => Ok(self.advance().unwrap()),
            Some(tok) => Err(CliError::syntax(
                tok.offset,
                format!("expected {what}, found {}", describe(&tok.kind)),
            )),
            None => Err(CliError::syntax(
                self.end,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    /// Parse a left-associative run of binary operators drawn from `table`,
    /// with `next` parsing the operands one level tighter.
    fn binary_level(
        &mut self,
        table: &[(TokenKind, BinaryOp)],
        next: fn(&mut Self) -> Result<Node, CliError>,
    ) -> Result<Node, CliError> {
        let mut lhs = next(self)?;
        while let Some(tok) = self.peek() {
            let Some((_, op)) = table.iter().find(|(kind, _)| kind == &tok.kind) else {
                break;
            };
            let offset = tok.offset;
            self.advance();
            let rhs = next(self)?;
            lhs = Node {
                kind: NodeKind::Binary(*op, Box::new(lhs), Box::new(rhs)),
                offset,
            };
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<Node, CliError> {
        self.binary_level(
            &[(TokenKind::Plus, BinaryOp::Add), (TokenKind::Minus, BinaryOp::Sub)],
            Self::scalar_product,
        )
    }

    fn scalar_product(&mut self) -> Result<Node, CliError> {
        self.binary_level(&[(TokenKind::Dot, BinaryOp::ScalarProduct)], Self::contraction)
    }

    fn contraction(&mut self) -> Result<Node, CliError> {
        self.binary_level(
            &[
                (TokenKind::LeftContract, BinaryOp::LeftContract),
                (TokenKind::RightContract, BinaryOp::RightContract),
            ],
            Self::wedge,
        )
    }

    fn wedge(&mut self) -> Result<Node, CliError> {
        self.binary_level(&[(TokenKind::Caret, BinaryOp::Wedge)], Self::geometric)
    }

    fn geometric(&mut self) -> Result<Node, CliError> {
        self.binary_level(&[(TokenKind::Star, BinaryOp::Geometric)], Self::unary)
    }

    fn unary(&mut self) -> Result<Node, CliError> {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::Minus => {
                let offset = tok.offset;
                self.advance();
                let inner = self.unary()?;
                Ok(Node {
                    kind: NodeKind::Unary(UnaryOp::Neg, Box::new(inner)),
                    offset,
                })
            }
            Some(tok) if tok.kind == TokenKind::Tilde => {
                let offset = tok.offset;
                self.advance();
                let inner = self.unary()?;
                Ok(Node {
                    kind: NodeKind::Unary(UnaryOp::Reverse, Box::new(inner)),
                    offset,
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Node, CliError> {
        let Some(tok) = self.advance() else {
            return Err(CliError::syntax(
                self.end,
                "expected an operand, found end of input".to_string(),
            ));
        };
        match &tok.kind {
            TokenKind::Number(x) => Ok(Node { kind: NodeKind::Number(*x), offset: tok.offset }),
            TokenKind::LParen => {
                let inner = self.additive()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            TokenKind::Symbol(name) if name == "grade" => self.grade_call(tok.offset),
            TokenKind::Symbol(name) => match basis_index(name) {
                Some(index) => Ok(Node { kind: NodeKind::Basis(index), offset: tok.offset }),
                None => Err(CliError::syntax(
                    tok.offset,
                    format!("unknown symbol `{name}`"),
                )),
            },
            other => Err(CliError::syntax(
                tok.offset,
                format!("expected an operand, found {}", describe(other)),
            )),
        }
    }

    fn grade_call(&mut self, offset: usize) -> Result<Node, CliError> {
        self.expect(&TokenKind::LParen, "`(` after `grade`")?;
        let inner = self.additive()?;
        self.expect(&TokenKind::Comma, "`,` between grade arguments")?;
        let (k_offset, k) = match self.advance() {
            Some(Token { kind: TokenKind::Number(x), offset }) => (*offset, *x),
            Some(tok) => {
                return Err(CliError::syntax(
                    tok.offset,
                    format!("expected a grade number, found {}", describe(&tok.kind)),
                ))
            }
            None => {
                return Err(CliError::syntax(
                    self.end,
                    "expected a grade number, found end of input".to_string(),
                ))
            }
        };
        if k.fract() != 0.0 || k < 0.0 || !k.is_finite() {
            return Err(CliError::syntax(
                k_offset,
                format!("grade must be a nonnegative integer, got `{k}`"),
            ));
        }
        self.expect(&TokenKind::RParen, "`)` closing `grade(`")?;
        Ok(Node {
            kind: NodeKind::Grade(Box::new(inner), k as usize),
            offset,
        })
    }
}

/// Recognize `e<k>` basis symbols. The index must be written without
/// leading zeros, so `e0` maps to index 0 (rejected later as out of range)
/// while `e01` stays an unknown symbol.
fn basis_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('e')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}
