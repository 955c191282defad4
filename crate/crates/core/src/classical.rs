//! The classical problems as they appear on the monuments: sphere metrics,
//! duplication of the cube, cubature of the sphere (exact and as constructed
//! on the site), the iterative angle trisector with its convergence trace,
//! and consecutive-leg Pythagorean triples.
//!
//! π is always the true mathematical constant at machine precision; the
//! historical approximations are outputs to be measured against it, never
//! substituted for it.

use crate::geom::{self, Angle, Point};
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClassicalError {
    #[error("{what} must be strictly positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("trisection requires 0 < theta < 180 degrees, got {0}")]
    ThetaOutOfRange(f64),
    #[error("trisection of {theta_deg} degrees did not converge within {max_iter} iterations")]
    NotConverged { theta_deg: f64, max_iter: usize },
    #[error("triple count must be at least 1")]
    EmptyCount,
    #[error("triple #{0} overflows 64-bit integers")]
    TripleOverflow(usize),
}

fn require_positive(what: &'static str, value: f64) -> Result<(), ClassicalError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(ClassicalError::NonPositive { what, value })
    }
}

/// Circumference, surface area and volume of the sphere of a given radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphereMetrics {
    pub radius: f64,
    pub circumference: f64,
    pub area: f64,
    pub volume: f64,
}

pub fn sphere_metrics(radius: f64) -> Result<SphereMetrics, ClassicalError> {
    require_positive("radius", radius)?;
    Ok(SphereMetrics {
        radius,
        circumference: 2.0 * PI * radius,
        area: 4.0 * PI * radius * radius,
        volume: 4.0 * PI * radius.powi(3) / 3.0,
    })
}

/// How close `edge_large³ / edge_small³` comes to the exact doubling ratio 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DuplicationCheck {
    pub ratio: f64,
    pub rel_err_vs_2: f64,
}

pub fn duplication_check(edge_small: f64, edge_large: f64) -> Result<DuplicationCheck, ClassicalError> {
    require_positive("edge_small", edge_small)?;
    require_positive("edge_large", edge_large)?;
    let ratio = (edge_large / edge_small).powi(3);
    Ok(DuplicationCheck {
        ratio,
        rel_err_vs_2: (ratio - 2.0).abs() / 2.0,
    })
}

/// Radius of the sphere whose volume equals the cube of `edge`:
/// `edge * (3 / 4π)^(1/3)`.
pub fn cubature_radius_exact(edge: f64) -> Result<f64, ClassicalError> {
    require_positive("edge", edge)?;
    Ok(edge * (3.0 / (4.0 * PI)).cbrt())
}

/// The site construction of the cubature radius for the 100-cubit cube.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EgyptianCubature {
    /// `50 × 280 / 226`, as laid out between the two pyramids.
    pub radius: f64,
    /// Relative error against the exact cubature radius of the 100-cubit cube.
    pub rel_err_vs_exact: f64,
    /// Relative error of the resulting sphere volume against 10⁶ cubic cubits.
    pub volume_rel_err: f64,
}

pub fn cubature_radius_egyptian() -> EgyptianCubature {
    let radius: f64 = 50.0 * 280.0 / 226.0;
    let exact = cubature_radius_exact(100.0).expect("fixed positive edge");
    let volume = 4.0 * PI * radius.powi(3) / 3.0;
    EgyptianCubature {
        radius,
        rel_err_vs_exact: (radius - exact).abs() / exact,
        volume_rel_err: (volume - 1e6).abs() / 1e6,
    }
}

/// One cycle of the trisection iteration, mirroring the columns of the
/// site-survey trace: the height of the auxiliary point X on the bisector,
/// the compass radius carried back to the inclined ray, and the resulting
/// estimate of the third.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceRow {
    pub label: String,
    /// Distance from I up to the previous intersection point X (0 for S).
    pub ix: f64,
    /// Compass radius: distance from C to the current point on the ray.
    pub cx: f64,
    /// Height of the current point T above the base line.
    pub height_t: f64,
    /// Horizontal reach from A to the foot of T.
    pub proj_at: f64,
    /// Current estimate of theta/3, in decimal degrees.
    pub third_deg: f64,
}

/// Per-iteration record of the trisection run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrisectionTrace {
    pub theta: Angle,
    pub unit: f64,
    pub rows: Vec<TraceRow>,
    pub converged: bool,
    pub final_third: Angle,
}

impl TrisectionTrace {
    pub fn final_third_degrees(&self) -> f64 {
        self.final_third.degrees()
    }

    /// Number of iterations performed after the seed row S.
    pub fn iterations(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// Fixed-width table with five decimals per cell, one row per cycle.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<6} {:>12} {:>12} {:>12} {:>12} {:>12}\n",
            "cycle", "ix", "cx", "height_t", "proj_at", "third_deg"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:<6} {:>12.5} {:>12.5} {:>12.5} {:>12.5} {:>12.5}\n",
                row.label, row.ix, row.cx, row.height_t, row.proj_at, row.third_deg
            ));
        }
        out
    }

    /// CSV form of the trace rows, full precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cycle,ix,cx,height_t,proj_at,third_deg\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.label, row.ix, row.cx, row.height_t, row.proj_at, row.third_deg
            ));
        }
        out
    }
}

/// Iterative trisection of `theta`.
///
/// Geometry: C sits at the origin with the base line toward +x, A at
/// `(-unit, 0)`, I at the midpoint of AC carrying a vertical bisector, and
/// the inclined ray CK leaves C at `theta`. The seed point S lies on CK at
/// distance `unit/2`. Each cycle intersects the sight line from A through
/// the current ray point with the bisector at X, then carries the compass
/// radius CX back onto the ray. The sight-line elevation converges to
/// `theta/3` from below.
///
/// Iteration stops once successive estimates differ by less than `eps_deg`
/// (converged) or after `max_iter` cycles (trace flagged not converged).
/// Empirically the limit is `theta/3` for theta below 135°; past that the
/// same fixed-point map settles on `180° - theta` instead, which the caller
/// can detect through [`archimedes_limit_check`].
pub fn trisect_iterative(
    theta: Angle,
    unit: f64,
    eps_deg: f64,
    max_iter: usize,
) -> Result<TrisectionTrace, ClassicalError> {
    let th = theta.radians();
    if !(th > 0.0 && th < PI) {
        return Err(ClassicalError::ThetaOutOfRange(theta.degrees()));
    }
    require_positive("unit", unit)?;
    require_positive("eps_deg", eps_deg)?;

    let (sin_t, cos_t) = th.sin_cos();
    let half = unit / 2.0;
    let mut rows: Vec<TraceRow> = Vec::with_capacity(max_iter + 1);
    let mut ix = 0.0_f64;
    let mut cx = half;
    let mut converged = false;

    for iter in 0..=max_iter {
        let height_t = cx * sin_t;
        let proj_at = unit + cx * cos_t;
        let third_deg = height_t.atan2(proj_at).to_degrees();
        let label = if iter == 0 {
            "S".to_string()
        } else {
            format!("T{iter}")
        };
        match rows.last() {
            // the float fixed point: no further progress is possible
            Some(prev) if third_deg <= prev.third_deg => {
                converged = true;
                break;
            }
            Some(prev) if third_deg - prev.third_deg < eps_deg => {
                rows.push(TraceRow {
                    label,
                    ix,
                    cx,
                    height_t,
                    proj_at,
                    third_deg,
                });
                converged = true;
                break;
            }
            _ => rows.push(TraceRow {
                label,
                ix,
                cx,
                height_t,
                proj_at,
                third_deg,
            }),
        }
        // X = sight line from A through T, cut by the bisector at x = -unit/2
        ix = half * height_t / proj_at;
        cx = half.hypot(ix);
    }

    let last = rows.last().expect("at least the seed row");
    let final_third = Angle::from_degrees(last.third_deg);
    Ok(TrisectionTrace {
        theta,
        unit,
        rows,
        converged,
        final_third,
    })
}

/// One verified angle identity of the limit configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Multiple of the converged third this angle must equal.
    pub multiple: u32,
    pub expected_rad: f64,
    pub actual_rad: f64,
    pub error_rad: f64,
    pub pass: bool,
}

/// Report of the limit-configuration identities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArchimedesReport {
    pub theta: Angle,
    pub third: Angle,
    pub checks: Vec<IdentityCheck>,
    pub all_pass: bool,
}

/// Absolute tolerance, in radians, for the limit identities.
pub const ARCHIMEDES_TOL_RAD: f64 = 1e-6;

/// Verifies the five angle identities of the limit (neusis) configuration:
/// with `a` the converged third, ∠XAI = ∠XCI = a, ∠TXC = 2a, ∠TCL = 4a,
/// ∠DCL = a and ∠TCD = 3a, where L is taken vertically opposite X across C.
pub fn archimedes_limit_check(theta: Angle) -> Result<ArchimedesReport, ClassicalError> {
    let trace = trisect_iterative(theta, 1.0, 1e-11, 200)?;
    if !trace.converged {
        return Err(ClassicalError::NotConverged {
            theta_deg: theta.degrees(),
            max_iter: 200,
        });
    }
    let last = trace.rows.last().expect("converged trace has rows");
    let (sin_t, cos_t) = theta.radians().sin_cos();

    let a_pt = Point::new(-1.0, 0.0);
    let c = Point::new(0.0, 0.0);
    let i = Point::new(-0.5, 0.0);
    let d = Point::new(1.0, 0.0);
    let t = Point::new(last.cx * cos_t, last.cx * sin_t);
    // X: the sight line from A through T, cut by the bisector at x = -1/2
    let x = Point::new(-0.5, 0.5 * last.height_t / last.proj_at);
    // L: vertically opposite X across C
    let l = Point::new(-x.x, -x.y);

    let third = trace.final_third;
    let a = third.radians();
    let angles = [
        ("XAI = a", 1, geom::angle_at(a_pt, x, i)),
        ("XCI = a", 1, geom::angle_at(c, x, i)),
        ("TXC = 2a", 2, geom::angle_at(x, t, c)),
        ("TCL = 4a", 4, geom::angle_at(c, t, l)),
        ("DCL = a", 1, geom::angle_at(c, d, l)),
        ("TCD = 3a", 3, geom::angle_at(c, t, d)),
    ];
    let checks: Vec<IdentityCheck> = angles
        .into_iter()
        .map(|(name, multiple, measured)| {
            let actual_rad = measured.expect("limit configuration is non-degenerate").radians();
            let expected_rad = f64::from(multiple) * a;
            let error_rad = (actual_rad - expected_rad).abs();
            IdentityCheck {
                name,
                multiple,
                expected_rad,
                actual_rad,
                error_rad,
                pass: error_rad <= ARCHIMEDES_TOL_RAD,
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(ArchimedesReport {
        theta,
        third,
        checks,
        all_pass,
    })
}

/// A Pythagorean triple with consecutive legs (`b = a + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Triple {
    /// Exact integer check of `a² + b² = c²`.
    pub fn is_pythagorean(&self) -> bool {
        let a = u128::from(self.a);
        let b = u128::from(self.b);
        let c = u128::from(self.c);
        a * a + b * b == c * c
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// First `n` consecutive-leg triples, generated by the recurrence
/// `a' = 3a + 2c + 1`, `c' = 4a + 3c + 2` seeded at (3, 4, 5).
///
/// Equivalent formulation: `a² + (a+1)² = c²` rearranges to
/// `x² − 2c² = −1` with `x = 2a + 1`, the negative Pell equation, whose
/// solutions (x, c) = (7, 5), (41, 29), (239, 169), … advance by
/// `x' = 3x + 4c`, `c' = 2x + 3c`; the closed recurrence used here is that
/// step rewritten in terms of the leg. Integer-exact and O(n).
pub fn consecutive_leg_triples(n: usize) -> Result<Vec<Triple>, ClassicalError> {
    if n < 1 {
        return Err(ClassicalError::EmptyCount);
    }
    let mut out = Vec::with_capacity(n);
    let (mut a, mut c) = (3u64, 5u64);
    for k in 1..=n {
        let triple = Triple { a, b: a + 1, c };
        debug_assert!(triple.is_pythagorean());
        out.push(triple);
        if k == n {
            break;
        }
        let next_a = (|| 3u64.checked_mul(a)?.checked_add(2u64.checked_mul(c)?)?.checked_add(1))();
        let next_c = (|| 4u64.checked_mul(a)?.checked_add(3u64.checked_mul(c)?)?.checked_add(2))();
        match (next_a, next_c) {
            (Some(na), Some(nc)) => {
                a = na;
                c = nc;
            }
            _ => return Err(ClassicalError::TripleOverflow(k + 1)),
        }
    }
    Ok(out)
}
