//! Recursive-descent parser. Grammar:
//!
//! ```text
//! program := stmt*
//! stmt    := binding | assert
//! binding := ("point" | "line" | "circle" | "num" | "angle") IDENT "=" expr
//! assert  := "assert" "approx" "(" expr "," expr "," expr ")"
//! expr    := additive, with "+ -", "* /", unary "-", and right-assoc "^"
//! primary := NUMBER "deg"? | "dms" "(" expr "," expr "," expr ")"
//!          | IDENT | IDENT "." IDENT ("[" IDENT "]")?
//!          | FNAME "(" args ")" | "(" expr ")" | "(" expr "," expr ")"
//! ```
//!
//! Builtin names and arities are checked here, so a parsed program can only
//! fail at evaluation time for semantic reasons (types, unbound names,
//! empty intersections).

use super::ast::{BinOp, Expr, Program, Span, Stmt, TypeName};
use super::lexer::{tokenize, Token, TokenKind};
use super::Diagnostic;

/// Builtins with their accepted arities.
const BUILTINS: &[(&str, &[usize])] = &[
    ("point", &[2]),
    ("midpoint", &[2]),
    ("line", &[2]),
    ("ray", &[2]),
    ("circle", &[2]),
    ("perp_at", &[2]),
    ("perp_bisector", &[2]),
    ("intersect", &[2, 3]),
    ("dist", &[2]),
    ("angle_at", &[3]),
    ("sphere_vol", &[1]),
    ("sphere_area", &[1]),
    ("circle_circ", &[1]),
    ("sqrt", &[1]),
    ("cbrt", &[1]),
    ("abs", &[1]),
    ("dms", &[3]),
];

fn builtin_arities(name: &str) -> Option<&'static [usize]> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, arities)| *arities)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    /// Position just past the last token, for end-of-input diagnostics.
    eof: Span,
}

impl Parser {
    fn new(source: &str) -> Result<Parser, Diagnostic> {
        let tokens = tokenize(source)?;
        let eof = tokens
            .last()
            .map(|t| Span::new(t.span.line, t.span.col + 1))
            .unwrap_or(Span::new(1, 1));
        Ok(Parser {
            tokens,
            pos: 0,
            eof,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<Token, Diagnostic> {
        match self.next() {
            Some(t) if t.kind == *kind => Ok(t),
            Some(t) => Err(Diagnostic::new(
                t.span,
                format!("expected {what}, found {}", t.kind.describe()),
            )),
            None => Err(Diagnostic::new(
                self.eof,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Span), Diagnostic> {
        match self.next() {
            Some(Token {
                kind: TokenKind::Ident(name),
                span,
                ..
            }) => Ok((name, span)),
            Some(t) => Err(Diagnostic::new(
                t.span,
                format!("expected {what}, found {}", t.kind.describe()),
            )),
            None => Err(Diagnostic::new(
                self.eof,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn program(&mut self) -> Result<Program, Diagnostic> {
        let mut statements = Vec::new();
        while let Some(token) = self.peek() {
            if token.kind == TokenKind::Semi {
                self.next();
                continue;
            }
            statements.push(self.statement()?);
        }
        Ok(Program { statements })
    }

    fn statement(&mut self) -> Result<Stmt, Diagnostic> {
        let token = self.next().expect("statement caller checked for a token");
        let span = token.span;
        let ty = match token.kind {
            TokenKind::KwPoint => TypeName::Point,
            TokenKind::KwLine => TypeName::Line,
            TokenKind::KwCircle => TypeName::Circle,
            TokenKind::KwNum => TypeName::Num,
            TokenKind::KwAngle => TypeName::Angle,
            TokenKind::KwAssert => {
                self.expect(&TokenKind::KwApprox, "`approx`")?;
                self.expect(&TokenKind::LParen, "`(`")?;
                let lhs = self.expression()?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let rhs = self.expression()?;
                self.expect(&TokenKind::Comma, "`,`")?;
                let tol = self.expression()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                return Ok(Stmt::Assert {
                    span,
                    lhs,
                    rhs,
                    tol,
                });
            }
            other => {
                return Err(Diagnostic::new(
                    span,
                    format!(
                        "expected a statement (point/line/circle/num/angle binding or assert), found {}",
                        other.describe()
                    ),
                ))
            }
        };
        let (name, _) = self.expect_ident("a binding name")?;
        self.expect(&TokenKind::Eq, "`=`")?;
        let expr = self.expression()?;
        Ok(Stmt::Binding {
            span,
            ty,
            name,
            expr,
        })
    }

    fn expression(&mut self) -> Result<Expr, Diagnostic> {
        self.additive()
    }

    fn additive(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Plus) => BinOp::Add,
                Some(TokenKind::Minus) => BinOp::Sub,
                _ => break,
            };
            let span = self.next().expect("operator token").span;
            let rhs = self.multiplicative()?;
            lhs = Expr::Binary {
                span,
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn multiplicative(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Star) => BinOp::Mul,
                Some(TokenKind::Slash) => BinOp::Div,
                _ => break,
            };
            let span = self.next().expect("operator token").span;
            let rhs = self.unary()?;
            lhs = Expr::Binary {
                span,
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, Diagnostic> {
        if let Some(token) = self.peek() {
            if token.kind == TokenKind::Minus {
                let span = self.next().expect("minus token").span;
                let expr = self.unary()?;
                return Ok(Expr::Unary {
                    span,
                    expr: Box::new(expr),
                });
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.primary()?;
        if self.peek().map(|t| &t.kind) == Some(&TokenKind::Caret) {
            let span = self.next().expect("caret token").span;
            // right-associative; the exponent may carry a sign
            let exponent = self.unary()?;
            return Ok(Expr::Binary {
                span,
                op: BinOp::Pow,
                lhs: Box::new(base),
                rhs: Box::new(exponent),
            });
        }
        Ok(base)
    }

    fn call_args(&mut self, name: &str, span: Span) -> Result<Expr, Diagnostic> {
        let arities = builtin_arities(name).ok_or_else(|| {
            Diagnostic::new(span, format!("unknown builtin `{name}`"))
        })?;
        self.expect(&TokenKind::LParen, "`(`")?;
        let mut args = Vec::new();
        if self.peek().map(|t| &t.kind) != Some(&TokenKind::RParen) {
            loop {
                args.push(self.expression()?);
                match self.peek().map(|t| &t.kind) {
                    Some(TokenKind::Comma) => {
                        self.next();
                    }
                    _ => break,
                }
            }
        }
        self.expect(&TokenKind::RParen, "`)`")?;
        if !arities.contains(&args.len()) {
            let wanted = arities
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" or ");
            return Err(Diagnostic::new(
                span,
                format!(
                    "builtin `{name}` takes {wanted} argument(s), found {}",
                    args.len()
                ),
            ));
        }
        if name == "dms" {
            let mut it = args.into_iter();
            return Ok(Expr::Dms {
                span,
                d: Box::new(it.next().expect("arity checked")),
                m: Box::new(it.next().expect("arity checked")),
                s: Box::new(it.next().expect("arity checked")),
            });
        }
        Ok(Expr::Call {
            span,
            name: name.to_string(),
            args,
        })
    }

    fn primary(&mut self) -> Result<Expr, Diagnostic> {
        let token = match self.next() {
            Some(t) => t,
            None => {
                return Err(Diagnostic::new(
                    self.eof,
                    "expected an expression, found end of input".to_string(),
                ))
            }
        };
        let span = token.span;
        match token.kind {
            TokenKind::Number(value) => {
                let deg = self.peek().map(|t| &t.kind) == Some(&TokenKind::KwDeg);
                if deg {
                    self.next();
                }
                Ok(Expr::Number { span, value, deg })
            }
            TokenKind::KwDms => self.call_args("dms", span),
            // `point`, `line` and `circle` double as builtin constructors
            TokenKind::KwPoint => self.call_args("point", span),
            TokenKind::KwLine => self.call_args("line", span),
            TokenKind::KwCircle => self.call_args("circle", span),
            TokenKind::Ident(name) => match self.peek().map(|t| &t.kind) {
                Some(TokenKind::LParen) => self.call_args(&name, span),
                Some(TokenKind::Dot) => {
                    self.next();
                    let (dimension, _) = self.expect_ident("a dimension name")?;
                    let source = if self.peek().map(|t| &t.kind) == Some(&TokenKind::LBracket) {
                        self.next();
                        let (src, _) = self.expect_ident("a source name")?;
                        self.expect(&TokenKind::RBracket, "`]`")?;
                        Some(src)
                    } else {
                        None
                    };
                    Ok(Expr::MeasurementRef {
                        span,
                        monument: name,
                        dimension,
                        source,
                    })
                }
                _ => Ok(Expr::Ident { span, name }),
            },
            TokenKind::LParen => {
                let first = self.expression()?;
                match self.peek().map(|t| &t.kind) {
                    Some(TokenKind::Comma) => {
                        self.next();
                        let second = self.expression()?;
                        self.expect(&TokenKind::RParen, "`)`")?;
                        Ok(Expr::PointLit {
                            span,
                            x: Box::new(first),
                            y: Box::new(second),
                        })
                    }
                    _ => {
                        self.expect(&TokenKind::RParen, "`)` or `,`")?;
                        Ok(first)
                    }
                }
            }
            other => Err(Diagnostic::new(
                span,
                format!("expected an expression, found {}", other.describe()),
            )),
        }
    }
}

/// Parse a whole program.
pub fn parse(source: &str) -> Result<Program, Diagnostic> {
    Parser::new(source)?.program()
}

/// Parse a single expression (used by the claim engine); trailing input is an
/// error.
pub fn parse_expression(source: &str) -> Result<Expr, Diagnostic> {
    let mut parser = Parser::new(source)?;
    let expr = parser.expression()?;
    if let Some(extra) = parser.peek() {
        return Err(Diagnostic::new(
            extra.span,
            format!("unexpected {} after expression", extra.kind.describe()),
        ));
    }
    Ok(expr)
}
