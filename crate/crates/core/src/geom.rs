//! 2D Euclidean geometry kernel: points, lines, circles, angles and the
//! intersection predicates every construction is assembled from.
//!
//! All types are immutable after construction and every operation is a pure
//! function, so the whole module is safe to share across threads. Decisions
//! about near-degenerate input (parallel lines, tangent circles) go through
//! an explicit [`Tolerance`] instead of scattered epsilons.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use thiserror::Error;

/// Errors raised by kernel constructors and predicates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("points coincide")]
    CoincidentPoints,
    #[error("direction vector has zero length")]
    ZeroDirection,
    #[error("radius must be strictly positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("circles coincide: the intersection is the whole circle")]
    CoincidentCircles,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("minutes and seconds must lie in [0, 60), got {min}:{sec}")]
    DmsOutOfRange { min: u32, sec: f64 },
    #[error("tolerance components must be strictly positive")]
    NonPositiveTolerance,
}

/// A point of the construction plane, in unitless construction units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn distance_to(&self, other: Point) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// An infinite line stored as an anchor plus a unit direction.
///
/// The parameterization `anchor + t * direction` is what orders the results
/// of [`intersect_line_circle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    anchor: Point,
    dx: f64,
    dy: f64,
}

impl Line {
    /// Line through two points; coincident points are rejected.
    pub fn through(a: Point, b: Point) -> Result<Line, GeomError> {
        if !a.is_finite() || !b.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if a == b {
            return Err(GeomError::CoincidentPoints);
        }
        Line::new(a, b.x - a.x, b.y - a.y)
    }

    /// Line through `anchor` along `(dx, dy)`; the direction is normalized
    /// at construction.
    pub fn new(anchor: Point, dx: f64, dy: f64) -> Result<Line, GeomError> {
        if !anchor.is_finite() || !dx.is_finite() || !dy.is_finite() {
            return Err(GeomError::NonFinite);
        }
        let norm = dx.hypot(dy);
        if norm == 0.0 {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Line {
            anchor,
            dx: dx / norm,
            dy: dy / norm,
        })
    }

    /// Ray-style constructor: anchored at `origin`, inclined by `angle`
    /// against the positive x axis.
    pub fn from_angle(origin: Point, angle: Angle) -> Line {
        let (dy, dx) = angle.radians().sin_cos();
        Line {
            anchor: origin,
            dx,
            dy,
        }
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    /// Unit direction vector.
    pub fn direction(&self) -> (f64, f64) {
        (self.dx, self.dy)
    }

    pub fn point_at(&self, t: f64) -> Point {
        Point::new(self.anchor.x + t * self.dx, self.anchor.y + t * self.dy)
    }

    /// Line parameter of the orthogonal projection of `p`.
    pub fn project(&self, p: Point) -> f64 {
        (p.x - self.anchor.x) * self.dx + (p.y - self.anchor.y) * self.dy
    }

    /// Orthogonal distance from `p` to the line.
    pub fn distance_to(&self, p: Point) -> f64 {
        ((p.x - self.anchor.x) * self.dy - (p.y - self.anchor.y) * self.dx).abs()
    }
}

/// A circle with strictly positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    center: Point,
    radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Circle, GeomError> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(GeomError::NonFinite);
        }
        if radius <= 0.0 {
            return Err(GeomError::NonPositiveRadius(radius));
        }
        Ok(Circle { center, radius })
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Signed residual of the circle equation at `p` (zero on the circle).
    pub fn residual(&self, p: Point) -> f64 {
        self.center.distance_to(p) - self.radius
    }
}

/// An angle normalized to `[0, 2π)` radians, with conversions to decimal
/// degrees and to degrees-minutes-seconds for presentation.
///
/// Serializes as decimal degrees.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle {
    radians: f64,
}

impl Angle {
    pub fn from_radians(radians: f64) -> Angle {
        let mut r = radians.rem_euclid(TAU);
        if r.is_nan() || r >= TAU {
            // rem_euclid of a tiny negative value can round up to TAU itself
            r = 0.0;
        }
        Angle { radians: r }
    }

    pub fn from_degrees(degrees: f64) -> Angle {
        Angle::from_radians(degrees.to_radians())
    }

    pub fn from_dms(deg: u32, min: u32, sec: f64) -> Result<Angle, GeomError> {
        if min >= 60 || !(0.0..60.0).contains(&sec) {
            return Err(GeomError::DmsOutOfRange { min, sec });
        }
        Ok(Angle::from_degrees(
            f64::from(deg) + f64::from(min) / 60.0 + sec / 3600.0,
        ))
    }

    pub fn radians(&self) -> f64 {
        self.radians
    }

    pub fn degrees(&self) -> f64 {
        self.radians.to_degrees()
    }

    /// Decompose into (degrees, minutes, seconds).
    ///
    /// Seconds are snapped to a micro-arcsecond grid first, so any angle
    /// built from whole seconds round-trips exactly through
    /// [`Angle::from_dms`].
    pub fn to_dms(&self) -> (u32, u32, f64) {
        let total_sec = (self.degrees() * 3600.0 * 1e6).round() / 1e6;
        let mut d = (total_sec / 3600.0).floor();
        let rem = total_sec - d * 3600.0;
        let mut m = (rem / 60.0).floor();
        let mut s = rem - m * 60.0;
        if s >= 60.0 {
            s -= 60.0;
            m += 1.0;
        }
        if m >= 60.0 {
            m -= 60.0;
            d += 1.0;
        }
        if d >= 360.0 {
            d -= 360.0;
        }
        (d as u32, m as u32, s)
    }
}

impl Serialize for Angle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.degrees())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Angle, D::Error> {
        f64::deserialize(deserializer).map(Angle::from_degrees)
    }
}

/// Shorthand for [`Angle::from_dms`].
pub fn dms(deg: u32, min: u32, sec: f64) -> Result<Angle, GeomError> {
    Angle::from_dms(deg, min, sec)
}

/// Comparison policy: `absolute` bounds residuals in construction units,
/// `relative` scales with the magnitudes involved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
}

impl Default for Tolerance {
    fn default() -> Tolerance {
        Tolerance {
            absolute: 1e-9,
            relative: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64) -> Result<Tolerance, GeomError> {
        if absolute > 0.0 && relative > 0.0 {
            Ok(Tolerance { absolute, relative })
        } else {
            Err(GeomError::NonPositiveTolerance)
        }
    }

    /// `|a - b| <= absolute + relative * max(|a|, |b|)`.
    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.absolute + self.relative * a.abs().max(b.abs())
    }
}

/// Intersection point of two lines, or `None` when they are parallel within
/// tolerance.
pub fn intersect_line_line(a: &Line, b: &Line, tol: &Tolerance) -> Option<Point> {
    let cross = a.dx * b.dy - a.dy * b.dx;
    if cross.abs() <= tol.absolute {
        return None;
    }
    let rx = b.anchor.x - a.anchor.x;
    let ry = b.anchor.y - a.anchor.y;
    let t = (rx * b.dy - ry * b.dx) / cross;
    Some(a.point_at(t))
}

/// Intersection of a line and a circle: zero, one (tangent) or two points,
/// ordered by the parameter along the line.
///
/// A discriminant within `absolute²` of zero collapses to a single tangency
/// point, so the output arity is deterministic near tangency.
pub fn intersect_line_circle(l: &Line, c: &Circle, tol: &Tolerance) -> Vec<Point> {
    let t_mid = l.project(c.center);
    let foot = l.point_at(t_mid);
    let offset = foot.distance_to(c.center);
    let disc = c.radius * c.radius - offset * offset;
    let collapse = tol.absolute * tol.absolute;
    if disc.abs() <= collapse {
        vec![foot]
    } else if disc < 0.0 {
        Vec::new()
    } else {
        let h = disc.sqrt();
        vec![l.point_at(t_mid - h), l.point_at(t_mid + h)]
    }
}

/// Intersection of two circles. Coincident circles are an error (the
/// intersection would be the whole circle). Two-point results are ordered
/// with the point counterclockwise of the center-to-center axis first.
pub fn intersect_circle_circle(
    a: &Circle,
    b: &Circle,
    tol: &Tolerance,
) -> Result<Vec<Point>, GeomError> {
    let d = a.center.distance_to(b.center);
    if d <= tol.absolute {
        return if (a.radius - b.radius).abs() <= tol.absolute {
            Err(GeomError::CoincidentCircles)
        } else {
            // concentric with distinct radii: disjoint
            Ok(Vec::new())
        };
    }
    let x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    let h2 = a.radius * a.radius - x * x;
    let collapse = tol.absolute * tol.absolute;
    let ux = (b.center.x - a.center.x) / d;
    let uy = (b.center.y - a.center.y) / d;
    let mid = Point::new(a.center.x + x * ux, a.center.y + x * uy);
    if h2.abs() <= collapse {
        Ok(vec![mid])
    } else if h2 < 0.0 {
        Ok(Vec::new())
    } else {
        let h = h2.sqrt();
        Ok(vec![
            Point::new(mid.x - h * uy, mid.y + h * ux),
            Point::new(mid.x + h * uy, mid.y - h * ux),
        ])
    }
}

/// Midpoint of two distinct points.
pub fn midpoint(p: Point, q: Point) -> Result<Point, GeomError> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    Ok(Point::new((p.x + q.x) / 2.0, (p.y + q.y) / 2.0))
}

/// Perpendicular to `l` through `p` (which need not lie on `l`).
pub fn perpendicular_at(l: &Line, p: Point) -> Line {
    Line {
        anchor: p,
        dx: -l.dy,
        dy: l.dx,
    }
}

/// Perpendicular bisector of the segment `pq`.
pub fn perpendicular_bisector(p: Point, q: Point) -> Result<Line, GeomError> {
    let mid = midpoint(p, q)?;
    Line::new(mid, -(q.y - p.y), q.x - p.x)
}

/// Undirected angle ∠p-vertex-q: always the non-reflex value in `[0, π]`,
/// exactly symmetric in `p` and `q`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> Result<Angle, GeomError> {
    let ux = p.x - vertex.x;
    let uy = p.y - vertex.y;
    let wx = q.x - vertex.x;
    let wy = q.y - vertex.y;
    if (ux == 0.0 && uy == 0.0) || (wx == 0.0 && wy == 0.0) {
        return Err(GeomError::CoincidentPoints);
    }
    let dot = ux * wx + uy * wy;
    let cross = (ux * wy - uy * wx).abs();
    Ok(Angle::from_radians(cross.atan2(dot)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x_axis() -> Line {
        Line::through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap()
    }

    fn y_axis() -> Line {
        Line::through(Point::new(0.0, 0.0), Point::new(0.0, 1.0)).unwrap()
    }

    const TOL: Tolerance = Tolerance {
        absolute: 1e-9,
        relative: 1e-12,
    };

    #[test]
    fn axes_cross_at_origin() {
        let p = intersect_line_line(&x_axis(), &y_axis(), &TOL).unwrap();
        assert!(p.distance_to(Point::new(0.0, 0.0)) < 1e-12);
    }

    #[test]
    fn trisection_chord_meets_bisector() {
        // line from A(-100, 0) toward S on the 54°27'44" ray, cut by x = -50
        let theta = Angle::from_dms(54, 27, 44.0).unwrap();
        let s = Line::from_angle(Point::new(0.0, 0.0), theta).point_at(50.0);
        let sa = Line::through(Point::new(-100.0, 0.0), s).unwrap();
        let vertical = Line::new(Point::new(-50.0, 0.0), 0.0, 1.0).unwrap();
        let r = intersect_line_line(&sa, &vertical, &TOL).unwrap();
        assert!((r.y - 15.762435469580447).abs() < 1e-9);
        assert!((r.x + 50.0).abs() < 1e-9);
    }

    #[test]
    fn parallel_lines_do_not_intersect() {
        let a = Line::through(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).unwrap();
        let b = Line::through(Point::new(0.0, 1.0), Point::new(1.0, 1.0)).unwrap();
        assert_eq!(intersect_line_line(&a, &b, &TOL), None);
    }

    #[test]
    fn line_circle_two_points_ordered() {
        let unit = Circle::new(Point::new(0.0, 0.0), 1.0).unwrap();
        let pts = intersect_line_circle(&x_axis(), &unit, &TOL);
        assert_eq!(pts.len(), 2);
        assert!(pts[0].distance_to(Point::new(-1.0, 0.0)) < 1e-12);
        assert!(pts[1].distance_to(Point::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn ray_meets_half_unit_circle_at_s() {
        let theta = Angle::from_dms(54, 27, 44.0).unwrap();
        let ray = Line::from_angle(Point::new(0.0, 0.0), theta);
        let c = Circle::new(Point::new(0.0, 0.0), 50.0).unwrap();
        let pts = intersect_line_circle(&ray, &c, &TOL);
        assert_eq!(pts.len(), 2);
        // second point lies forward along the ray, at the surveyed seed height
        assert!((pts[1].y - 40.686622844874584).abs() < 1e-9);
    }

    #[test]
    fn disjoint_line_circle() {
        let unit = Circle::new(Point::new(0.0, 0.0), 1.0).unwrap();
        let l = Line::new(Point::new(0.0, 2.0), 1.0, 0.0).unwrap();
        assert!(intersect_line_circle(&l, &unit, &TOL).is_empty());
    }

    #[test]
    fn tangency_collapses_to_one_point() {
        let unit = Circle::new(Point::new(0.0, 0.0), 1.0).unwrap();
        let l = Line::new(Point::new(0.0, 1.0), 1.0, 0.0).unwrap();
        let pts = intersect_line_circle(&l, &unit, &TOL);
        assert_eq!(pts.len(), 1);
        assert!(pts[0].distance_to(Point::new(0.0, 1.0)) < 1e-12);
    }

    #[test]
    fn circle_circle_tangent_and_equilateral() {
        let a = Circle::new(Point::new(0.0, 0.0), 1.0).unwrap();
        let tangent = Circle::new(Point::new(2.0, 0.0), 1.0).unwrap();
        let pts = intersect_circle_circle(&a, &tangent, &TOL).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].distance_to(Point::new(1.0, 0.0)) < 1e-9);

        let b = Circle::new(Point::new(1.0, 0.0), 1.0).unwrap();
        let pts = intersect_circle_circle(&a, &b, &TOL).unwrap();
        assert_eq!(pts.len(), 2);
        let h = 3.0_f64.sqrt() / 2.0;
        assert!(pts[0].distance_to(Point::new(0.5, h)) < 1e-12);
        assert!(pts[1].distance_to(Point::new(0.5, -h)) < 1e-12);
    }

    #[test]
    fn circle_circle_disjoint_and_coincident() {
        let a = Circle::new(Point::new(0.0, 0.0), 1.0).unwrap();
        let far = Circle::new(Point::new(5.0, 0.0), 1.0).unwrap();
        assert!(intersect_circle_circle(&a, &far, &TOL).unwrap().is_empty());
        assert_eq!(
            intersect_circle_circle(&a, &a, &TOL),
            Err(GeomError::CoincidentCircles)
        );
        let concentric = Circle::new(Point::new(0.0, 0.0), 2.0).unwrap();
        assert!(intersect_circle_circle(&a, &concentric, &TOL)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn midpoint_and_bisector() {
        let i = midpoint(Point::new(-100.0, 0.0), Point::new(0.0, 0.0)).unwrap();
        assert_eq!(i, Point::new(-50.0, 0.0));
        assert_eq!(
            midpoint(Point::new(1.0, 2.0), Point::new(1.0, 2.0)),
            Err(GeomError::CoincidentPoints)
        );

        let bis = perpendicular_bisector(Point::new(0.0, 0.0), Point::new(2.0, 0.0)).unwrap();
        assert_eq!(bis.anchor(), Point::new(1.0, 0.0));
        let (dx, dy) = bis.direction();
        assert!(dx.abs() < 1e-12 && (dy.abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn perpendicular_at_origin_is_y_axis() {
        let perp = perpendicular_at(&x_axis(), Point::new(0.0, 0.0));
        let (dx, dy) = perp.direction();
        assert!(dx.abs() < 1e-12 && (dy - 1.0).abs() < 1e-12);
        assert_eq!(perp.anchor(), Point::new(0.0, 0.0));
    }

    #[test]
    fn right_angle() {
        let a = angle_at(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        assert!((a.degrees() - 90.0).abs() < 1e-12);
    }

    #[test]
    fn palier_sight_angle() {
        // A at the satellite pyramid, D along the ground, B on the axis at
        // the bend height: 92.15 cubits over a 280-cubit reach
        let a = angle_at(
            Point::new(-100.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(180.0, 92.15),
        )
        .unwrap();
        assert!((a.degrees() - 18.216744634846258).abs() < 1e-9);
        let (d, m, _) = a.to_dms();
        assert_eq!((d, m), (18, 13));
    }

    #[test]
    fn slope_of_the_lower_face() {
        let a = angle_at(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(180.0, 252.0))
            .unwrap();
        assert!((a.degrees() - 54.46232220802562).abs() < 1e-9);
        assert!((a.degrees() - 1.4_f64.atan().to_degrees()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_angle_vertex() {
        let v = Point::new(1.0, 1.0);
        assert_eq!(
            angle_at(v, v, Point::new(2.0, 2.0)),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn dms_values_from_the_slope_measurements() {
        assert!((dms(54, 27, 44.0).unwrap().degrees() - 54.46222222222222).abs() < 1e-12);
        assert!((dms(18, 9, 15.0).unwrap().degrees() - 18.154166666666665).abs() < 1e-12);
        assert_eq!(dms(0, 0, 0.0).unwrap().degrees(), 0.0);
    }

    #[test]
    fn dms_rejects_out_of_range_components() {
        assert!(dms(10, 60, 0.0).is_err());
        assert!(dms(10, 0, 60.0).is_err());
        assert!(dms(10, 0, -1.0).is_err());
    }

    #[test]
    fn angle_normalization() {
        assert_eq!(Angle::from_degrees(360.0).degrees(), 0.0);
        assert!((Angle::from_degrees(-90.0).degrees() - 270.0).abs() < 1e-12);
    }

    #[test]
    fn line_through_coincident_points_rejected() {
        let p = Point::new(3.0, 4.0);
        assert_eq!(Line::through(p, p), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn invalid_constructions() {
        assert_eq!(
            Circle::new(Point::new(0.0, 0.0), 0.0),
            Err(GeomError::NonPositiveRadius(0.0))
        );
        assert!(Circle::new(Point::new(0.0, 0.0), -2.0).is_err());
        assert!(Line::through(Point::new(f64::NAN, 0.0), Point::new(1.0, 0.0)).is_err());
        assert!(Tolerance::new(0.0, 1e-12).is_err());
        assert!(Tolerance::new(1e-9, -1.0).is_err());
    }

    proptest! {
        #[test]
        fn dms_round_trip_on_integer_seconds(d in 0u32..360, m in 0u32..60, s in 0u32..60) {
            let angle = Angle::from_dms(d, m, s as f64).unwrap();
            let (rd, rm, rs) = angle.to_dms();
            prop_assert_eq!((rd, rm, rs.round() as u32), (d, m, s));
            prop_assert!((rs - rs.round()).abs() < 1e-6);
        }

        #[test]
        fn angle_at_is_symmetric(
            vx in -100.0..100.0f64, vy in -100.0..100.0f64,
            px in -100.0..100.0f64, py in -100.0..100.0f64,
            qx in -100.0..100.0f64, qy in -100.0..100.0f64,
        ) {
            let v = Point::new(vx, vy);
            let p = Point::new(px, py);
            let q = Point::new(qx, qy);
            prop_assume!(p != v && q != v);
            let a = angle_at(v, p, q).unwrap();
            let b = angle_at(v, q, p).unwrap();
            prop_assert_eq!(a.radians(), b.radians());
            prop_assert!(a.radians() <= std::f64::consts::PI);
        }

        #[test]
        fn angle_at_rigid_motion_and_scale_invariant(
            vx in -10.0..10.0f64, vy in -10.0..10.0f64,
            px in -10.0..10.0f64, py in -10.0..10.0f64,
            qx in -10.0..10.0f64, qy in -10.0..10.0f64,
            tx in -50.0..50.0f64, ty in -50.0..50.0f64,
            rot in 0.0..std::f64::consts::TAU,
            scale in 0.1..10.0f64,
        ) {
            let v = Point::new(vx, vy);
            let p = Point::new(px, py);
            let q = Point::new(qx, qy);
            prop_assume!(v.distance_to(p) > 1e-6 && v.distance_to(q) > 1e-6);
            let map = |pt: Point| {
                let (s, c) = rot.sin_cos();
                Point::new(
                    scale * (c * pt.x - s * pt.y) + tx,
                    scale * (s * pt.x + c * pt.y) + ty,
                )
            };
            let before = angle_at(v, p, q).unwrap().radians();
            let after = angle_at(map(v), map(p), map(q)).unwrap().radians();
            prop_assert!((before - after).abs() < 1e-9);
        }

        #[test]
        fn bisector_passes_through_the_midpoint_at_right_angle(
            px in -100.0..100.0f64, py in -100.0..100.0f64,
            qx in -100.0..100.0f64, qy in -100.0..100.0f64,
        ) {
            let p = Point::new(px, py);
            let q = Point::new(qx, qy);
            prop_assume!(p.distance_to(q) > 1e-6);
            let bis = perpendicular_bisector(p, q).unwrap();
            let mid = midpoint(p, q).unwrap();
            prop_assert!(bis.distance_to(mid) <= 1e-9);
            let base = Line::through(p, q).unwrap();
            let (bx, by) = base.direction();
            let (dx, dy) = bis.direction();
            // unit directions: |dot| = |cos| of the crossing angle
            prop_assert!((bx * dx + by * dy).abs() <= 1e-9);
        }

        #[test]
        fn line_circle_points_satisfy_both_loci(
            ax in -50.0..50.0f64, ay in -50.0..50.0f64,
            dx in -1.0..1.0f64, dy in -1.0..1.0f64,
            cx in -50.0..50.0f64, cy in -50.0..50.0f64,
            r in 0.1..50.0f64,
        ) {
            prop_assume!(dx.hypot(dy) > 1e-3);
            let l = Line::new(Point::new(ax, ay), dx, dy).unwrap();
            let c = Circle::new(Point::new(cx, cy), r).unwrap();
            for p in intersect_line_circle(&l, &c, &TOL) {
                prop_assert!(l.distance_to(p) <= 1e-9);
                prop_assert!(c.residual(p).abs() <= 1e-6 * r.max(1.0));
            }
        }
    }
}
