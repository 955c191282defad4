//! A small script language for ruler-and-compass constructions.
//!
//! A `.geo` program is a flat list of bindings and assertions:
//!
//! ```text
//! point A = (-100, 0)
//! point C = (0, 0)
//! point I = midpoint(A, C)
//! angle theta = dms(54, 27, 44)
//! point S = intersect(ray(C, theta), circle(C, 50), 1)
//! assert approx(dist(C, S), 50, 1e-9)
//! ```
//!
//! Numbers are unitless; the `deg` suffix and `dms(d, m, s)` build angles.
//! `#` starts a comment and statements may optionally be separated by `;`.
//! Programs are immutable after parsing and can be evaluated concurrently in
//! independent environments.

mod ast;
mod eval;
mod lexer;
mod parser;
mod svg;

pub use ast::{ast_eq, expr_eq, BinOp, Expr, Program, Span, Stmt, TypeName};
pub use eval::{
    eval_expression, evaluate, evaluate_with, AssertionResult, Env, Evaluation, NoMeasurements,
    Resolver, Value,
};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_expression};
pub use svg::{render_svg, Viewport};

use std::fmt;

/// A positioned error from the lexer, parser or evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl Diagnostic {
    pub fn new(span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            line: span.line,
            col: span.col,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for Diagnostic {}
