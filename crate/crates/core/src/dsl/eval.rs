//! Evaluator: deterministic left-to-right execution of a parsed program
//! against an insertion-ordered environment.
//!
//! Type rules are strict with one deliberate coercion: an angle used where a
//! number is expected (arithmetic, `assert approx`, a `num` binding) reads as
//! its decimal-degree value. Measurement references (`monument.dimension`)
//! resolve through a [`Resolver`]; plain scripts have none and reject them.

use super::ast::{BinOp, Expr, Program, Span, Stmt, TypeName};
use super::Diagnostic;
use crate::geom::{self, Angle, Circle, Line, Point, Tolerance};
use indexmap::IndexMap;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Number(f64),
    Point(Point),
    Line(Line),
    Circle(Circle),
    Angle(Angle),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Number(_) => "number",
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Circle(_) => "circle",
            Value::Angle(_) => "angle",
        }
    }

    /// Numeric view: numbers as-is, angles as decimal degrees.
    pub fn as_number(&self) -> Option<f64> {
        match self {
            Value::Number(n) => Some(*n),
            Value::Angle(a) => Some(a.degrees()),
            _ => None,
        }
    }
}

/// Insertion-ordered bindings; iteration order is binding order, which is
/// what the SVG renderer and the round-trip tests rely on.
#[derive(Debug, Clone, Default)]
pub struct Env {
    bindings: IndexMap<String, Value>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

/// Outcome of one `assert approx(lhs, rhs, tol)`.
///
/// The comparison is `|lhs - rhs| <= tol * max(|rhs|, 1)`, so tolerances
/// behave sanely for assertions against values near zero.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AssertionResult {
    pub line: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Result of running a program: the final environment plus every assertion
/// outcome in source order.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub env: Env,
    pub assertions: Vec<AssertionResult>,
}

impl Evaluation {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }
}

/// Source of measurement values for `monument.dimension[Source]` references.
pub trait Resolver {
    fn resolve(
        &self,
        monument: &str,
        dimension: &str,
        source: Option<&str>,
    ) -> Result<f64, String>;
}

/// Resolver for plain construction scripts: every measurement reference is
/// an error.
pub struct NoMeasurements;

impl Resolver for NoMeasurements {
    fn resolve(
        &self,
        monument: &str,
        dimension: &str,
        _source: Option<&str>,
    ) -> Result<f64, String> {
        Err(format!(
            "measurement reference `{monument}.{dimension}` is not available here"
        ))
    }
}

/// Evaluate a program with no measurement context.
pub fn evaluate(program: &Program) -> Result<Evaluation, Diagnostic> {
    evaluate_with(program, &NoMeasurements)
}

/// Evaluate a program, resolving measurement references through `resolver`.
pub fn evaluate_with(program: &Program, resolver: &dyn Resolver) -> Result<Evaluation, Diagnostic> {
    let mut env = Env::default();
    let mut assertions = Vec::new();
    for stmt in &program.statements {
        match stmt {
            Stmt::Binding {
                span,
                ty,
                name,
                expr,
            } => {
                if name == "pi" {
                    return Err(Diagnostic::new(*span, "`pi` is a predefined constant"));
                }
                if env.bindings.contains_key(name) {
                    return Err(Diagnostic::new(
                        *span,
                        format!("identifier `{name}` is already bound"),
                    ));
                }
                let value = eval_expr(expr, &env, resolver)?;
                let value = coerce_binding(*ty, value, expr.span())?;
                env.bindings.insert(name.clone(), value);
            }
            Stmt::Assert {
                span,
                lhs,
                rhs,
                tol,
            } => {
                let lhs_v = number_for(lhs, &env, resolver, "assert approx")?;
                let rhs_v = number_for(rhs, &env, resolver, "assert approx")?;
                let tol_v = number_for(tol, &env, resolver, "assert approx")?;
                if tol_v.is_nan() || tol_v <= 0.0 {
                    return Err(Diagnostic::new(
                        tol.span(),
                        format!("assertion tolerance must be positive, got {tol_v}"),
                    ));
                }
                assertions.push(AssertionResult {
                    line: span.line,
                    lhs: lhs_v,
                    rhs: rhs_v,
                    tol: tol_v,
                    passed: (lhs_v - rhs_v).abs() <= tol_v * rhs_v.abs().max(1.0),
                });
            }
        }
    }
    Ok(Evaluation { env, assertions })
}

fn coerce_binding(ty: TypeName, value: Value, span: Span) -> Result<Value, Diagnostic> {
    let ok = match (ty, &value) {
        (TypeName::Num, Value::Number(_)) => true,
        // angles read as decimal degrees in a num binding
        (TypeName::Num, Value::Angle(a)) => return Ok(Value::Number(a.degrees())),
        (TypeName::Point, Value::Point(_)) => true,
        (TypeName::Line, Value::Line(_)) => true,
        (TypeName::Circle, Value::Circle(_)) => true,
        (TypeName::Angle, Value::Angle(_)) => true,
        _ => false,
    };
    if ok {
        Ok(value)
    } else {
        Err(Diagnostic::new(
            span,
            format!(
                "binding declared `{}` but the expression is a {}",
                ty.keyword(),
                value.type_name()
            ),
        ))
    }
}

fn number_for(
    expr: &Expr,
    env: &Env,
    resolver: &dyn Resolver,
    what: &str,
) -> Result<f64, Diagnostic> {
    let value = eval_expr(expr, env, resolver)?;
    value.as_number().ok_or_else(|| {
        Diagnostic::new(
            expr.span(),
            format!("{what} needs a number, found a {}", value.type_name()),
        )
    })
}

fn point_arg(value: Value, span: Span, builtin: &str, idx: usize) -> Result<Point, Diagnostic> {
    match value {
        Value::Point(p) => Ok(p),
        other => Err(Diagnostic::new(
            span,
            format!(
                "{builtin}: argument {idx} must be a point, found a {}",
                other.type_name()
            ),
        )),
    }
}

fn number_arg(value: Value, span: Span, builtin: &str, idx: usize) -> Result<f64, Diagnostic> {
    value.as_number().ok_or_else(|| {
        Diagnostic::new(
            span,
            format!("{builtin}: argument {idx} must be a number"),
        )
    })
}

fn geom_err(span: Span, builtin: &str, err: geom::GeomError) -> Diagnostic {
    Diagnostic::new(span, format!("{builtin}: {err}"))
}

/// Evaluate a single expression against an environment; the claim engine
/// uses this with a measurement resolver.
pub fn eval_expression(
    expr: &Expr,
    env: &Env,
    resolver: &dyn Resolver,
) -> Result<Value, Diagnostic> {
    eval_expr(expr, env, resolver)
}

fn eval_expr(
    expr: &Expr,
    env: &Env,
    resolver: &dyn Resolver,
) -> Result<Value, Diagnostic> {
    match expr {
        Expr::Number { value, deg, .. } => Ok(if *deg {
            Value::Angle(Angle::from_degrees(*value))
        } else {
            Value::Number(*value)
        }),
        Expr::Dms { span, d, m, s } => {
            let d = number_for(d, env, resolver, "dms")?;
            let m = number_for(m, env, resolver, "dms")?;
            let s = number_for(s, env, resolver, "dms")?;
            if d < 0.0 || d.fract() != 0.0 || m < 0.0 || m.fract() != 0.0 {
                return Err(Diagnostic::new(
                    *span,
                    "dms: degrees and minutes must be non-negative integers",
                ));
            }
            Angle::from_dms(d as u32, m as u32, s)
                .map(Value::Angle)
                .map_err(|e| geom_err(*span, "dms", e))
        }
        Expr::Ident { span, name } => {
            if name == "pi" {
                return Ok(Value::Number(PI));
            }
            env.get(name).cloned().ok_or_else(|| {
                Diagnostic::new(*span, format!("unbound identifier `{name}`"))
            })
        }
        Expr::MeasurementRef {
            span,
            monument,
            dimension,
            source,
        } => resolver
            .resolve(monument, dimension, source.as_deref())
            .map(Value::Number)
            .map_err(|msg| Diagnostic::new(*span, msg)),
        Expr::PointLit { span, x, y } => {
            let x = number_for(x, env, resolver, "point literal")?;
            let y = number_for(y, env, resolver, "point literal")?;
            if !x.is_finite() || !y.is_finite() {
                return Err(Diagnostic::new(*span, "point coordinates must be finite"));
            }
            Ok(Value::Point(Point::new(x, y)))
        }
        Expr::Unary { span, expr } => {
            let v = eval_expr(expr, env, resolver)?;
            match v.as_number() {
                Some(n) => Ok(Value::Number(-n)),
                None => Err(Diagnostic::new(
                    *span,
                    format!("negation needs a number, found a {}", v.type_name()),
                )),
            }
        }
        Expr::Binary { span, op, lhs, rhs } => {
            let l = number_for(lhs, env, resolver, "arithmetic")?;
            let r = number_for(rhs, env, resolver, "arithmetic")?;
            let out = match op {
                BinOp::Add => l + r,
                BinOp::Sub => l - r,
                BinOp::Mul => l * r,
                BinOp::Div => {
                    if r == 0.0 {
                        return Err(Diagnostic::new(*span, "division by zero"));
                    }
                    l / r
                }
                BinOp::Pow => l.powf(r),
            };
            if out.is_nan() {
                return Err(Diagnostic::new(*span, "arithmetic produced NaN"));
            }
            Ok(Value::Number(out))
        }
        Expr::Call { span, name, args } => eval_call(*span, name, args, env, resolver),
    }
}

fn eval_call(
    span: Span,
    name: &str,
    args: &[Expr],
    env: &Env,
    resolver: &dyn Resolver,
) -> Result<Value, Diagnostic> {
    let tol = Tolerance::default();
    let mut values = Vec::with_capacity(args.len());
    for arg in args {
        values.push((eval_expr(arg, env, resolver)?, arg.span()));
    }
    match name {
        "point" => {
            let (x, xs) = values[0].clone();
            let (y, ys) = values[1].clone();
            let x = number_arg(x, xs, "point", 1)?;
            let y = number_arg(y, ys, "point", 2)?;
            if !x.is_finite() || !y.is_finite() {
                return Err(Diagnostic::new(span, "point coordinates must be finite"));
            }
            Ok(Value::Point(Point::new(x, y)))
        }
        "midpoint" => {
            let p = point_arg(values[0].0.clone(), values[0].1, "midpoint", 1)?;
            let q = point_arg(values[1].0.clone(), values[1].1, "midpoint", 2)?;
            geom::midpoint(p, q)
                .map(Value::Point)
                .map_err(|e| geom_err(span, "midpoint", e))
        }
        "line" => {
            let p = point_arg(values[0].0.clone(), values[0].1, "line", 1)?;
            let q = point_arg(values[1].0.clone(), values[1].1, "line", 2)?;
            Line::through(p, q)
                .map(Value::Line)
                .map_err(|e| geom_err(span, "line", e))
        }
        "ray" => {
            let origin = point_arg(values[0].0.clone(), values[0].1, "ray", 1)?;
            match &values[1].0 {
                Value::Angle(a) => Ok(Value::Line(Line::from_angle(origin, *a))),
                other => Err(Diagnostic::new(
                    values[1].1,
                    format!(
                        "ray: argument 2 must be an angle (write `<n> deg` or `dms(d, m, s)`), found a {}",
                        other.type_name()
                    ),
                )),
            }
        }
        "circle" => {
            let center = point_arg(values[0].0.clone(), values[0].1, "circle", 1)?;
            let radius = number_arg(values[1].0.clone(), values[1].1, "circle", 2)?;
            Circle::new(center, radius)
                .map(Value::Circle)
                .map_err(|e| geom_err(span, "circle", e))
        }
        "perp_at" => {
            let line = match &values[0].0 {
                Value::Line(l) => *l,
                other => {
                    return Err(Diagnostic::new(
                        values[0].1,
                        format!("perp_at: argument 1 must be a line, found a {}", other.type_name()),
                    ))
                }
            };
            let p = point_arg(values[1].0.clone(), values[1].1, "perp_at", 2)?;
            Ok(Value::Line(geom::perpendicular_at(&line, p)))
        }
        "perp_bisector" => {
            let p = point_arg(values[0].0.clone(), values[0].1, "perp_bisector", 1)?;
            let q = point_arg(values[1].0.clone(), values[1].1, "perp_bisector", 2)?;
            geom::perpendicular_bisector(p, q)
                .map(Value::Line)
                .map_err(|e| geom_err(span, "perp_bisector", e))
        }
        "intersect" => {
            let index = match values.get(2) {
                Some((v, vspan)) => {
                    let n = number_arg(v.clone(), *vspan, "intersect", 3)?;
                    if n != 0.0 && n != 1.0 {
                        return Err(Diagnostic::new(
                            *vspan,
                            format!("intersect: index must be 0 or 1, got {n}"),
                        ));
                    }
                    n as usize
                }
                None => 0,
            };
            let points = match (&values[0].0, &values[1].0) {
                (Value::Line(a), Value::Line(b)) => {
                    geom::intersect_line_line(a, b, &tol).into_iter().collect()
                }
                (Value::Line(l), Value::Circle(c)) | (Value::Circle(c), Value::Line(l)) => {
                    geom::intersect_line_circle(l, c, &tol)
                }
                (Value::Circle(a), Value::Circle(b)) => geom::intersect_circle_circle(a, b, &tol)
                    .map_err(|e| geom_err(span, "intersect", e))?,
                (a, b) => {
                    return Err(Diagnostic::new(
                        span,
                        format!(
                            "intersect: arguments must be lines or circles, found {} and {}",
                            a.type_name(),
                            b.type_name()
                        ),
                    ))
                }
            };
            if points.is_empty() {
                return Err(Diagnostic::new(span, "intersect: no intersection point"));
            }
            points.get(index).copied().map(Value::Point).ok_or_else(|| {
                Diagnostic::new(
                    span,
                    format!(
                        "intersect: requested point {index} but only {} found",
                        points.len()
                    ),
                )
            })
        }
        "dist" => {
            let p = point_arg(values[0].0.clone(), values[0].1, "dist", 1)?;
            let q = point_arg(values[1].0.clone(), values[1].1, "dist", 2)?;
            Ok(Value::Number(p.distance_to(q)))
        }
        "angle_at" => {
            let v = point_arg(values[0].0.clone(), values[0].1, "angle_at", 1)?;
            let p = point_arg(values[1].0.clone(), values[1].1, "angle_at", 2)?;
            let q = point_arg(values[2].0.clone(), values[2].1, "angle_at", 3)?;
            geom::angle_at(v, p, q)
                .map(Value::Angle)
                .map_err(|e| geom_err(span, "angle_at", e))
        }
        "sphere_vol" | "sphere_area" | "circle_circ" => {
            let r = number_arg(values[0].0.clone(), values[0].1, name, 1)?;
            let metrics = crate::classical::sphere_metrics(r)
                .map_err(|e| Diagnostic::new(span, format!("{name}: {e}")))?;
            Ok(Value::Number(match name {
                "sphere_vol" => metrics.volume,
                "sphere_area" => metrics.area,
                _ => metrics.circumference,
            }))
        }
        "sqrt" => {
            let x = number_arg(values[0].0.clone(), values[0].1, "sqrt", 1)?;
            if x < 0.0 {
                return Err(Diagnostic::new(span, format!("sqrt of negative value {x}")));
            }
            Ok(Value::Number(x.sqrt()))
        }
        "cbrt" => {
            let x = number_arg(values[0].0.clone(), values[0].1, "cbrt", 1)?;
            Ok(Value::Number(x.cbrt()))
        }
        "abs" => {
            let x = number_arg(values[0].0.clone(), values[0].1, "abs", 1)?;
            Ok(Value::Number(x.abs()))
        }
        other => Err(Diagnostic::new(
            span,
            format!("unknown builtin `{other}`"),
        )),
    }
}
