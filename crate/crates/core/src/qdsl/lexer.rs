use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Underscore,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    DotDot,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Underscore => f.write_str("`_`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::DotDot => f.write_str("`..`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Splits `src` into tokens, always ending with [`Tok::End`].
pub fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&(start, c)) = chars.peek() {
        let (tl, tc) = (line, column);
        let syntax = |expected: &str, found: String| ParseError::Syntax {
            line: tl,
            column: tc,
            expected: expected.to_string(),
            found,
        };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            let text = &src[start..end];
            column += text.len();
            let value = text.parse().map_err(|_| syntax("integer that fits in 64 bits", text.to_string()))?;
            Tok::Int(value)
        } else if c.is_ascii_alphabetic() {
            let mut end = start;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                end = i + 1;
                chars.next();
            }
            column += end - start;
            Tok::Ident(src[start..end].to_string())
        } else {
            chars.next();
            column += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '_' => Tok::Underscore,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '.' => match chars.peek() {
                    Some(&(_, '.')) => {
                        chars.next();
                        column += 1;
                        Tok::DotDot
                    }
                    _ => return Err(syntax("`..`", "`.`".to_string())),
                },
                other => return Err(syntax("a token", alloc::format!("`{other}`"))),
            }
        };
        out.push(Spanned { tok, line: tl, column: tc });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}
