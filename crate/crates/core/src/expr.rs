//! Element expressions over basis names, such as `x1 - 2*x2 + 1/3*z`, and
//! comma-separated lists of them.

use crate::algebra::{Element, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Number(String),
    Name(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            _ if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            _ => return Err(Error::BadExpression(format!("unexpected `{c}` in `{text}`"))),
        }
    }
    Ok(out)
}

/// Parses `[sign] term (sign term)*` where a term is `name`, `q*name` or
/// `q name`, with `q` an integer or `p/q`.
pub fn parse_element(l: &LieSuperalgebra, text: &str) -> Result<Element> {
    let tokens = tokenize(text)?;
    let bad = |msg: &str| Error::BadExpression(format!("{msg} in `{}`", text.trim()));
    if tokens.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut out = Element::new();
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = scalar::one();
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(bad("expected `+` or `-`")),
        }
        first = false;
        let mut coeff: Scalar = sign;
        if let Some(Token::Number(n)) = tokens.get(pos) {
            coeff *= scalar::parse(n)?;
            pos += 1;
            if tokens.get(pos) == Some(&Token::Star) {
                pos += 1;
            }
        }
        match tokens.get(pos) {
            Some(Token::Name(name)) => {
                out.add_term(l.index_of(name)?, coeff);
                pos += 1;
            }
            _ => return Err(bad("expected a basis name")),
        }
    }
    Ok(out)
}

/// Splits on commas and parses each piece; an empty list is allowed.
pub fn parse_elements(l: &LieSuperalgebra, text: &str) -> Result<Vec<Element>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|piece| parse_element(l, piece)).collect()
}
