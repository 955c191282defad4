//! Syntax tree of the construction language, plus the canonical printer used
//! by the parse/print round-trip guarantee.

use std::fmt;

/// Source position (1-based line and column).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl Span {
    pub fn new(line: u32, col: u32) -> Span {
        Span { line, col }
    }
}

/// Declared type of a binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeName {
    Point,
    Line,
    Circle,
    Num,
    Angle,
}

impl TypeName {
    pub fn keyword(&self) -> &'static str {
        match self {
            TypeName::Point => "point",
            TypeName::Line => "line",
            TypeName::Circle => "circle",
            TypeName::Num => "num",
            TypeName::Angle => "angle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Numeric literal; `deg: true` marks the angle suffix form `<n> deg`.
    Number { span: Span, value: f64, deg: bool },
    /// Angle literal `dms(d, m, s)`.
    Dms {
        span: Span,
        d: Box<Expr>,
        m: Box<Expr>,
        s: Box<Expr>,
    },
    /// Plain identifier.
    Ident { span: Span, name: String },
    /// Measurement reference `monument.dimension` or
    /// `monument.dimension[Source]`, only meaningful where a measurement
    /// resolver is supplied (claim expressions).
    MeasurementRef {
        span: Span,
        monument: String,
        dimension: String,
        source: Option<String>,
    },
    /// Point literal `(x, y)`.
    PointLit {
        span: Span,
        x: Box<Expr>,
        y: Box<Expr>,
    },
    /// Builtin call.
    Call {
        span: Span,
        name: String,
        args: Vec<Expr>,
    },
    Unary {
        span: Span,
        expr: Box<Expr>,
    },
    Binary {
        span: Span,
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Number { span, .. }
            | Expr::Dms { span, .. }
            | Expr::Ident { span, .. }
            | Expr::MeasurementRef { span, .. }
            | Expr::PointLit { span, .. }
            | Expr::Call { span, .. }
            | Expr::Unary { span, .. }
            | Expr::Binary { span, .. } => *span,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Binding {
        span: Span,
        ty: TypeName,
        name: String,
        expr: Expr,
    },
    Assert {
        span: Span,
        lhs: Expr,
        rhs: Expr,
        tol: Expr,
    },
}

impl Stmt {
    pub fn span(&self) -> Span {
        match self {
            Stmt::Binding { span, .. } | Stmt::Assert { span, .. } => *span,
        }
    }
}

/// A parsed program: an ordered list of statements.
#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub statements: Vec<Stmt>,
}

impl Program {
    /// Canonical text form; reparsing it yields a structurally identical AST
    /// (see [`ast_eq`]).
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for stmt in &self.statements {
            match stmt {
                Stmt::Binding { ty, name, expr, .. } => {
                    out.push_str(&format!("{} {} = {}\n", ty.keyword(), name, expr));
                }
                Stmt::Assert { lhs, rhs, tol, .. } => {
                    out.push_str(&format!("assert approx({}, {}, {})\n", lhs, rhs, tol));
                }
            }
        }
        out
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number { value, deg, .. } => {
                if *deg {
                    write!(f, "{} deg", value)
                } else {
                    write!(f, "{}", value)
                }
            }
            Expr::Dms { d, m, s, .. } => write!(f, "dms({}, {}, {})", d, m, s),
            Expr::Ident { name, .. } => write!(f, "{}", name),
            Expr::MeasurementRef {
                monument,
                dimension,
                source,
                ..
            } => match source {
                Some(src) => write!(f, "{}.{}[{}]", monument, dimension, src),
                None => write!(f, "{}.{}", monument, dimension),
            },
            Expr::PointLit { x, y, .. } => write!(f, "({}, {})", x, y),
            Expr::Call { name, args, .. } => {
                write!(f, "{}(", name)?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", arg)?;
                }
                write!(f, ")")
            }
            Expr::Unary { expr, .. } => write!(f, "-{}", expr),
            // fully parenthesized so precedence survives the round-trip
            Expr::Binary { op, lhs, rhs, .. } => write!(f, "({} {} {})", lhs, op.symbol(), rhs),
        }
    }
}

/// Structural equality of two expressions, ignoring spans.
pub fn expr_eq(a: &Expr, b: &Expr) -> bool {
    match (a, b) {
        (
            Expr::Number { value: va, deg: da, .. },
            Expr::Number { value: vb, deg: db, .. },
        ) => va == vb && da == db,
        (Expr::Dms { d: da, m: ma, s: sa, .. }, Expr::Dms { d: db, m: mb, s: sb, .. }) => {
            expr_eq(da, db) && expr_eq(ma, mb) && expr_eq(sa, sb)
        }
        (Expr::Ident { name: na, .. }, Expr::Ident { name: nb, .. }) => na == nb,
        (
            Expr::MeasurementRef {
                monument: ma,
                dimension: da,
                source: sa,
                ..
            },
            Expr::MeasurementRef {
                monument: mb,
                dimension: db,
                source: sb,
                ..
            },
        ) => ma == mb && da == db && sa == sb,
        (Expr::PointLit { x: xa, y: ya, .. }, Expr::PointLit { x: xb, y: yb, .. }) => {
            expr_eq(xa, xb) && expr_eq(ya, yb)
        }
        (
            Expr::Call { name: na, args: aa, .. },
            Expr::Call { name: nb, args: ab, .. },
        ) => na == nb && aa.len() == ab.len() && aa.iter().zip(ab).all(|(x, y)| expr_eq(x, y)),
        (Expr::Unary { expr: ea, .. }, Expr::Unary { expr: eb, .. }) => expr_eq(ea, eb),
        (
            Expr::Binary { op: oa, lhs: la, rhs: ra, .. },
            Expr::Binary { op: ob, lhs: lb, rhs: rb, .. },
        ) => oa == ob && expr_eq(la, lb) && expr_eq(ra, rb),
        _ => false,
    }
}

/// Structural equality of two programs, ignoring spans.
pub fn ast_eq(a: &Program, b: &Program) -> bool {
    a.statements.len() == b.statements.len()
        && a.statements.iter().zip(&b.statements).all(|(x, y)| match (x, y) {
            (
                Stmt::Binding { ty: ta, name: na, expr: ea, .. },
                Stmt::Binding { ty: tb, name: nb, expr: eb, .. },
            ) => ta == tb && na == nb && expr_eq(ea, eb),
            (
                Stmt::Assert { lhs: la, rhs: ra, tol: ta, .. },
                Stmt::Assert { lhs: lb, rhs: rb, tol: tb, .. },
            ) => expr_eq(la, lb) && expr_eq(ra, rb) && expr_eq(ta, tb),
            _ => false,
        })
}
