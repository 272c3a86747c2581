//! Tokenizer for calculator expressions.
//!
//! Every token records the 0-based byte offset where it starts, so that
//! errors anywhere downstream can point back into the source line.

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    /// A decimal real literal, e.g. `2` or `0.5`.
    Number(f64),
    /// An identifier: a basis symbol like `e2` or a keyword like `grade`.
    Symbol(String),
    Plus,
    Minus,
    Star,
    Caret,
    Dot,
    LeftContract,
    RightContract,
    Tilde,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
}

/// Characters that can only ever begin a binary operator. `-` is absent
/// (it doubles as unary negation) and so is `~` (unary only), which is why
/// `2*-3` and `e1^~e2` lex fine while `e1^^e2` does not.
fn starts_binary_only(c: u8) -> bool {
    matches!(c, b'+' | b'.' | b'<' | b'>' | b'^' | b'*')
}

/// Reject a second operator glued directly onto a binary operator, e.g.
/// `^^` or `*.`. The error points at the start of the run.
fn check_operator_run(src: &[u8], start: usize, end: usize) -> Result<(), CliError> {
    if end < src.len() && starts_binary_only(src[end]) {
        let run_end = src[end..]
            .iter()
            .position(|&c| !starts_binary_only(c))
            .map_or(src.len(), |p| end + p);
        let run = std::str::from_utf8(&src[start..run_end]).unwrap_or("?");
        return Err(CliError::syntax(
            start,
            format!("invalid operator `{run}`"),
        ));
    }
    Ok(())
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, CliError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' => {
                i += 1;
            }
            b'(' => {
                tokens.push(Token { kind: TokenKind::LParen, offset: start });
                i += 1;
            }
            b')' => {
                tokens.push(Token { kind: TokenKind::RParen, offset: start });
                i += 1;
            }
            b',' => {
                tokens.push(Token { kind: TokenKind::Comma, offset: start });
                i += 1;
            }
            b'~' => {
                tokens.push(Token { kind: TokenKind::Tilde, offset: start });
                i += 1;
            }
            b'-' => {
                tokens.push(Token { kind: TokenKind::Minus, offset: start });
                i += 1;
            }
            b'+' | b'.' | b'^' | b'*' => {
                let kind = match c {
                    b'+' => TokenKind::Plus,
                    b'.' => TokenKind::Dot,
                    b'^' => TokenKind::Caret,
                    _ => TokenKind::Star,
                };
                i += 1;
                check_operator_run(bytes, start, i)?;
                tokens.push(Token { kind, offset: start });
            }
            b'<' | b'>' => {
                if i + 1 >= bytes.len() || bytes[i + 1] != c {
                    let shown = c as char;
                    return Err(CliError::syntax(
                        start,
                        format!("invalid operator `{shown}` (contractions are `<<` and `>>`)"),
                    ));
                }
                i += 2;
                check_operator_run(bytes, start, i)?;
                let kind = if c == b'<' {
                    TokenKind::LeftContract
                } else {
                    TokenKind::RightContract
                };
                tokens.push(Token { kind, offset: start });
            }
            b'0'..=b'9' => {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                // A dot only stays part of the number when digits follow;
                // otherwise it is the scalar-product operator.
                if i + 1 < bytes.len() && bytes[i] == b'.' && bytes[i + 1].is_ascii_digit() {
                    i += 2;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(CliError::syntax(
                        i,
                        "missing operator between number and symbol (write `2*e1`, not `2e1`)"
                            .to_string(),
                    ));
                }
                let text = &src[start..i];
                let value: f64 = text.parse().map_err(|_| {
                    CliError::syntax(start, format!("invalid number `{text}`"))
                })?;
                tokens.push(Token { kind: TokenKind::Number(value), offset: start });
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Symbol(src[start..i].to_string()),
                    offset: start,
                });
            }
            _ => {
                let shown = src[start..].chars().next().unwrap_or('?');
                return Err(CliError::syntax(
                    start,
                    format!("unexpected character `{shown}`"),
                ));
            }
        }
    }
    Ok(tokens)
}
