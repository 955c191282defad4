//! SVG 1.1 rendering of an evaluated environment: every bound point, line
//! and circle becomes an element labeled with its identifier, in binding
//! order, so output is deterministic.

use super::eval::{Env, Value};
use crate::geom::{Line, Point};
use std::fmt::Write;

/// World-coordinate window to render. SVG y runs downward, so the renderer
/// flips the y axis internally; callers think in ordinary plane coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Viewport {
    pub fn new(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Option<Viewport> {
        (min_x < max_x && min_y < max_y && [min_x, min_y, max_x, max_y].iter().all(|v| v.is_finite()))
            .then_some(Viewport {
                min_x,
                min_y,
                max_x,
                max_y,
            })
    }

    /// Smallest window containing every point and circle of the environment,
    /// padded by `margin` (a fraction of the span). Line anchors count as
    /// points. Falls back to the unit square around the origin.
    pub fn fit(env: &Env, margin: f64) -> Viewport {
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        let mut cover = |x: f64, y: f64| {
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        };
        for (_, value) in env.iter() {
            match value {
                Value::Point(p) => cover(p.x, p.y),
                Value::Line(l) => cover(l.anchor().x, l.anchor().y),
                Value::Circle(c) => {
                    cover(c.center().x - c.radius(), c.center().y - c.radius());
                    cover(c.center().x + c.radius(), c.center().y + c.radius());
                }
                _ => {}
            }
        }
        if min_x > max_x {
            return Viewport {
                min_x: -1.0,
                min_y: -1.0,
                max_x: 1.0,
                max_y: 1.0,
            };
        }
        let pad_x = ((max_x - min_x).max(1e-9) * margin).max(1e-3);
        let pad_y = ((max_y - min_y).max(1e-9) * margin).max(1e-3);
        Viewport {
            min_x: min_x - pad_x,
            min_y: min_y - pad_y,
            max_x: max_x + pad_x,
            max_y: max_y + pad_y,
        }
    }

    fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    /// Flip world y into SVG y within this window.
    fn flip_y(&self, y: f64) -> f64 {
        self.min_y + self.max_y - y
    }
}

/// Clip the infinite line to the viewport rectangle; returns the visible
/// segment endpoints in world coordinates, if any.
fn clip_line(l: &Line, vp: &Viewport) -> Option<(Point, Point)> {
    let (dx, dy) = l.direction();
    let a = l.anchor();
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (p, q) in [
        (-dx, a.x - vp.min_x),
        (dx, vp.max_x - a.x),
        (-dy, a.y - vp.min_y),
        (dy, vp.max_y - a.y),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
            continue;
        }
        let r = q / p;
        if p < 0.0 {
            t0 = t0.max(r);
        } else {
            t1 = t1.min(r);
        }
    }
    (t0 <= t1).then(|| (l.point_at(t0), l.point_at(t1)))
}

fn fmt_coord(v: f64) -> String {
    // shortest round-trip representation keeps the output deterministic
    format!("{v}")
}

/// Render the environment as an SVG 1.1 document.
pub fn render_svg(env: &Env, vp: &Viewport) -> String {
    let dim = vp.width().max(vp.height());
    let stroke = dim * 0.004;
    let point_r = dim * 0.007;
    let font = dim * 0.03;
    let offset = dim * 0.012;

    let mut body = String::new();
    for (name, value) in env.iter() {
        match value {
            Value::Point(p) => {
                let (x, y) = (p.x, vp.flip_y(p.y));
                let _ = writeln!(
                    body,
                    r##"  <circle cx="{}" cy="{}" r="{}" fill="#1d3557"/>"##,
                    fmt_coord(x),
                    fmt_coord(y),
                    fmt_coord(point_r)
                );
                let _ = writeln!(
                    body,
                    r##"  <text x="{}" y="{}" font-size="{}" fill="#1d3557">{}</text>"##,
                    fmt_coord(x + offset),
                    fmt_coord(y - offset),
                    fmt_coord(font),
                    name
                );
            }
            Value::Line(l) => {
                if let Some((p, q)) = clip_line(l, vp) {
                    let (x1, y1) = (p.x, vp.flip_y(p.y));
                    let (x2, y2) = (q.x, vp.flip_y(q.y));
                    let _ = writeln!(
                        body,
                        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#457b9d" stroke-width="{}"/>"##,
                        fmt_coord(x1),
                        fmt_coord(y1),
                        fmt_coord(x2),
                        fmt_coord(y2),
                        fmt_coord(stroke)
                    );
                    let _ = writeln!(
                        body,
                        r##"  <text x="{}" y="{}" font-size="{}" fill="#457b9d">{}</text>"##,
                        fmt_coord((x1 + x2) / 2.0 + offset),
                        fmt_coord((y1 + y2) / 2.0 - offset),
                        fmt_coord(font),
                        name
                    );
                }
            }
            Value::Circle(c) => {
                let (x, y) = (c.center().x, vp.flip_y(c.center().y));
                let _ = writeln!(
                    body,
                    r##"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="#e63946" stroke-width="{}"/>"##,
                    fmt_coord(x),
                    fmt_coord(y),
                    fmt_coord(c.radius()),
                    fmt_coord(stroke)
                );
                let _ = writeln!(
                    body,
                    r##"  <text x="{}" y="{}" font-size="{}" fill="#e63946">{}</text>"##,
                    fmt_coord(x + offset),
                    fmt_coord(y - c.radius() - offset),
                    fmt_coord(font),
                    name
                );
            }
            _ => {}
        }
    }

    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n\
         <desc>ruler-and-compass construction</desc>\n\
         {}</svg>\n",
        fmt_coord(vp.min_x),
        fmt_coord(vp.min_y),
        fmt_coord(vp.width()),
        fmt_coord(vp.height()),
        body
    )
}

#[cfg(test)]
mod tests {
    use super::super::{evaluate, parse};
    use super::*;

    #[test]
    fn empty_program_renders_a_valid_empty_svg() {
        let ev = evaluate(&parse("").unwrap()).unwrap();
        let vp = Viewport::fit(&ev.env, 0.1);
        let svg = render_svg(&ev.env, &vp);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn circle_radius_appears_as_an_attribute() {
        let ev = evaluate(&parse("num r = 50 * 280 / 226\ncircle eq = circle((0, 0), r)").unwrap())
            .unwrap();
        let svg = render_svg(&ev.env, &Viewport::fit(&ev.env, 0.1));
        assert!(svg.contains("r=\"61.94690265486726\""));
        assert!(svg.contains(">eq</text>"));
    }

    #[test]
    fn binding_order_is_element_order() {
        let ev = evaluate(&parse("point B = (1, 0)\npoint A = (0, 1)").unwrap()).unwrap();
        let svg = render_svg(&ev.env, &Viewport::fit(&ev.env, 0.1));
        let b_at = svg.find(">B</text>").unwrap();
        let a_at = svg.find(">A</text>").unwrap();
        assert!(b_at < a_at);
    }

    #[test]
    fn lines_are_clipped_to_the_viewport() {
        let ev = evaluate(&parse("line l = line((0, 0), (1, 1))").unwrap()).unwrap();
        let vp = Viewport::new(-1.0, -1.0, 1.0, 1.0).unwrap();
        let svg = render_svg(&ev.env, &vp);
        assert!(svg.contains("<line"));
        // outside the window: nothing drawn
        let far = Viewport::new(10.0, -1.0, 12.0, 1.0).unwrap();
        let svg = render_svg(&ev.env, &far);
        assert!(!svg.contains("<line"));
    }

    #[test]
    fn viewport_rejects_degenerate_windows() {
        assert!(Viewport::new(0.0, 0.0, 0.0, 1.0).is_none());
        assert!(Viewport::new(0.0, 2.0, 1.0, 1.0).is_none());
    }
}
