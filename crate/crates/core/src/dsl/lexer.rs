//! Hand-rolled lexer with 1-based line/column tracking.

use super::ast::Span;
use super::Diagnostic;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Number(f64),
    KwPoint,
    KwLine,
    KwCircle,
    KwNum,
    KwAngle,
    KwAssert,
    KwApprox,
    KwDeg,
    KwDms,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Semi,
}

impl TokenKind {
    /// Human-readable name for diagnostics.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(name) => format!("identifier `{name}`"),
            TokenKind::Number(n) => format!("number `{n}`"),
            TokenKind::KwPoint => "`point`".into(),
            TokenKind::KwLine => "`line`".into(),
            TokenKind::KwCircle => "`circle`".into(),
            TokenKind::KwNum => "`num`".into(),
            TokenKind::KwAngle => "`angle`".into(),
            TokenKind::KwAssert => "`assert`".into(),
            TokenKind::KwApprox => "`approx`".into(),
            TokenKind::KwDeg => "`deg`".into(),
            TokenKind::KwDms => "`dms`".into(),
            TokenKind::Eq => "`=`".into(),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Slash => "`/`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::LBracket => "`[`".into(),
            TokenKind::RBracket => "`]`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Dot => "`.`".into(),
            TokenKind::Semi => "`;`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
    /// Byte range in the source, so tooling (and the mutation tests) can
    /// splice tokens out of the original text.
    pub byte_start: usize,
    pub byte_len: usize,
}

pub fn tokenize(source: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut tokens = Vec::new();
    let mut chars = source.chars().peekable();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut byte: usize = 0;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            if let Some(ch) = c {
                byte += ch.len_utf8();
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let span = Span::new(line, col);
        let byte_start = byte;
        if c == '\n' || c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump!();
            }
            continue;
        }
        if c.is_ascii_digit() {
            let mut text = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    text.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            // fraction: a dot only counts when a digit follows, so that
            // qualified names `a.b` never collide with numbers
            if chars.peek() == Some(&'.') {
                let mut lookahead = chars.clone();
                lookahead.next();
                if lookahead.peek().is_some_and(|c| c.is_ascii_digit()) {
                    text.push('.');
                    bump!();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            text.push(c);
                            bump!();
                        } else {
                            break;
                        }
                    }
                }
            }
            if matches!(chars.peek(), Some('e') | Some('E')) {
                let mut lookahead = chars.clone();
                lookahead.next();
                let mut exp = String::new();
                if let Some(&sign) = lookahead.peek() {
                    if sign == '+' || sign == '-' {
                        exp.push(sign);
                        lookahead.next();
                    }
                }
                if lookahead.peek().is_some_and(|c| c.is_ascii_digit()) {
                    text.push('e');
                    bump!();
                    for _ in 0..exp.len() {
                        bump!();
                    }
                    text.push_str(&exp);
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            text.push(c);
                            bump!();
                        } else {
                            break;
                        }
                    }
                }
            }
            let value: f64 = text
                .parse()
                .map_err(|_| Diagnostic::new(span, format!("malformed number `{text}`")))?;
            tokens.push(Token {
                kind: TokenKind::Number(value),
                span,
                byte_start,
                byte_len: byte - byte_start,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    name.push(c);
                    bump!();
                } else {
                    break;
                }
            }
            let kind = match name.as_str() {
                "point" => TokenKind::KwPoint,
                "line" => TokenKind::KwLine,
                "circle" => TokenKind::KwCircle,
                "num" => TokenKind::KwNum,
                "angle" => TokenKind::KwAngle,
                "assert" => TokenKind::KwAssert,
                "approx" => TokenKind::KwApprox,
                "deg" => TokenKind::KwDeg,
                "dms" => TokenKind::KwDms,
                _ => TokenKind::Ident(name),
            };
            tokens.push(Token {
                kind,
                span,
                byte_start,
                byte_len: byte - byte_start,
            });
            continue;
        }
        let kind = match c {
            '=' => TokenKind::Eq,
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '/' => TokenKind::Slash,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '[' => TokenKind::LBracket,
            ']' => TokenKind::RBracket,
            ',' => TokenKind::Comma,
            '.' => TokenKind::Dot,
            ';' => TokenKind::Semi,
            other => {
                return Err(Diagnostic::new(
                    span,
                    format!("unexpected character `{other}`"),
                ))
            }
        };
        bump!();
        tokens.push(Token {
            kind,
            span,
            byte_start,
            byte_len: byte - byte_start,
        });
    }
    Ok(tokens)
}
