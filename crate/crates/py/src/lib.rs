//! Python module `pyramidion`: the geometry kernel, the classical-problem
//! operations, the construction-script interpreter and the claim suite,
//! exposed with plain Python-friendly signatures.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyramidion_core::{bundled, classical, dsl, geom, metrology};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Point")]
struct PyPoint {
    inner: geom::Point,
}

#[pymethods]
impl PyPoint {
    #[new]
    fn new(x: f64, y: f64) -> PyPoint {
        PyPoint {
            inner: geom::Point::new(x, y),
        }
    }

    #[getter]
    fn x(&self) -> f64 {
        self.inner.x
    }

    #[getter]
    fn y(&self) -> f64 {
        self.inner.y
    }

    fn distance_to(&self, other: &PyPoint) -> f64 {
        self.inner.distance_to(other.inner)
    }

    fn __repr__(&self) -> String {
        format!("Point({}, {})", self.inner.x, self.inner.y)
    }
}

#[pyclass(name = "Angle")]
struct PyAngle {
    inner: geom::Angle,
}

#[pymethods]
impl PyAngle {
    #[staticmethod]
    fn from_degrees(degrees: f64) -> PyAngle {
        PyAngle {
            inner: geom::Angle::from_degrees(degrees),
        }
    }

    #[staticmethod]
    fn from_radians(radians: f64) -> PyAngle {
        PyAngle {
            inner: geom::Angle::from_radians(radians),
        }
    }

    #[staticmethod]
    fn from_dms(deg: u32, min: u32, sec: f64) -> PyResult<PyAngle> {
        geom::Angle::from_dms(deg, min, sec)
            .map(|inner| PyAngle { inner })
            .map_err(value_err)
    }

    fn degrees(&self) -> f64 {
        self.inner.degrees()
    }

    fn radians(&self) -> f64 {
        self.inner.radians()
    }

    fn to_dms(&self) -> (u32, u32, f64) {
        self.inner.to_dms()
    }

    fn __repr__(&self) -> String {
        format!("Angle({} deg)", self.inner.degrees())
    }
}

#[pyclass(name = "Line")]
struct PyLine {
    inner: geom::Line,
}

#[pymethods]
impl PyLine {
    #[staticmethod]
    fn through(a: &PyPoint, b: &PyPoint) -> PyResult<PyLine> {
        geom::Line::through(a.inner, b.inner)
            .map(|inner| PyLine { inner })
            .map_err(value_err)
    }

    #[staticmethod]
    fn ray(origin: &PyPoint, angle: &PyAngle) -> PyLine {
        PyLine {
            inner: geom::Line::from_angle(origin.inner, angle.inner),
        }
    }

    #[getter]
    fn anchor(&self) -> PyPoint {
        PyPoint {
            inner: self.inner.anchor(),
        }
    }

    #[getter]
    fn direction(&self) -> (f64, f64) {
        self.inner.direction()
    }

    fn point_at(&self, t: f64) -> PyPoint {
        PyPoint {
            inner: self.inner.point_at(t),
        }
    }
}

#[pyclass(name = "Circle")]
struct PyCircle {
    inner: geom::Circle,
}

#[pymethods]
impl PyCircle {
    #[new]
    fn new(center: &PyPoint, radius: f64) -> PyResult<PyCircle> {
        geom::Circle::new(center.inner, radius)
            .map(|inner| PyCircle { inner })
            .map_err(value_err)
    }

    #[getter]
    fn center(&self) -> PyPoint {
        PyPoint {
            inner: self.inner.center(),
        }
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius()
    }
}

#[pyfunction]
fn dms(deg: u32, min: u32, sec: f64) -> PyResult<PyAngle> {
    PyAngle::from_dms(deg, min, sec)
}

#[pyfunction]
fn midpoint(p: &PyPoint, q: &PyPoint) -> PyResult<PyPoint> {
    geom::midpoint(p.inner, q.inner)
        .map(|inner| PyPoint { inner })
        .map_err(value_err)
}

#[pyfunction]
fn perpendicular_at(l: &PyLine, p: &PyPoint) -> PyLine {
    PyLine {
        inner: geom::perpendicular_at(&l.inner, p.inner),
    }
}

#[pyfunction]
fn perpendicular_bisector(p: &PyPoint, q: &PyPoint) -> PyResult<PyLine> {
    geom::perpendicular_bisector(p.inner, q.inner)
        .map(|inner| PyLine { inner })
        .map_err(value_err)
}

#[pyfunction]
fn angle_at(vertex: &PyPoint, p: &PyPoint, q: &PyPoint) -> PyResult<PyAngle> {
    geom::angle_at(vertex.inner, p.inner, q.inner)
        .map(|inner| PyAngle { inner })
        .map_err(value_err)
}

#[pyfunction]
fn intersect_line_line(a: &PyLine, b: &PyLine) -> Option<PyPoint> {
    geom::intersect_line_line(&a.inner, &b.inner, &geom::Tolerance::default())
        .map(|inner| PyPoint { inner })
}

#[pyfunction]
fn intersect_line_circle(l: &PyLine, c: &PyCircle) -> Vec<PyPoint> {
    geom::intersect_line_circle(&l.inner, &c.inner, &geom::Tolerance::default())
        .into_iter()
        .map(|inner| PyPoint { inner })
        .collect()
}

#[pyfunction]
fn intersect_circle_circle(a: &PyCircle, b: &PyCircle) -> PyResult<Vec<PyPoint>> {
    geom::intersect_circle_circle(&a.inner, &b.inner, &geom::Tolerance::default())
        .map(|points| points.into_iter().map(|inner| PyPoint { inner }).collect())
        .map_err(value_err)
}

#[pyclass(name = "SphereMetrics")]
struct PySphereMetrics {
    inner: classical::SphereMetrics,
}

#[pymethods]
impl PySphereMetrics {
    #[getter]
    fn radius(&self) -> f64 {
        self.inner.radius
    }

    #[getter]
    fn circumference(&self) -> f64 {
        self.inner.circumference
    }

    #[getter]
    fn area(&self) -> f64 {
        self.inner.area
    }

    #[getter]
    fn volume(&self) -> f64 {
        self.inner.volume
    }

    fn __repr__(&self) -> String {
        format!(
            "SphereMetrics(radius={}, circumference={}, area={}, volume={})",
            self.inner.radius, self.inner.circumference, self.inner.area, self.inner.volume
        )
    }
}

#[pyfunction]
fn sphere_metrics(radius: f64) -> PyResult<PySphereMetrics> {
    classical::sphere_metrics(radius)
        .map(|inner| PySphereMetrics { inner })
        .map_err(value_err)
}

/// Returns `(ratio, rel_err_vs_2)`.
#[pyfunction]
fn duplication_check(edge_small: f64, edge_large: f64) -> PyResult<(f64, f64)> {
    classical::duplication_check(edge_small, edge_large)
        .map(|c| (c.ratio, c.rel_err_vs_2))
        .map_err(value_err)
}

#[pyfunction]
fn cubature_radius_exact(edge: f64) -> PyResult<f64> {
    classical::cubature_radius_exact(edge).map_err(value_err)
}

/// Returns `(radius, rel_err_vs_exact, volume_rel_err)`.
#[pyfunction]
fn cubature_radius_egyptian() -> (f64, f64, f64) {
    let e = classical::cubature_radius_egyptian();
    (e.radius, e.rel_err_vs_exact, e.volume_rel_err)
}

#[pyclass(name = "TrisectionTrace")]
struct PyTrisectionTrace {
    inner: classical::TrisectionTrace,
}

#[pymethods]
impl PyTrisectionTrace {
    #[getter]
    fn theta_degrees(&self) -> f64 {
        self.inner.theta.degrees()
    }

    #[getter]
    fn unit(&self) -> f64 {
        self.inner.unit
    }

    #[getter]
    fn converged(&self) -> bool {
        self.inner.converged
    }

    #[getter]
    fn final_third_degrees(&self) -> f64 {
        self.inner.final_third_degrees()
    }

    /// Rows as `(label, ix, cx, height_t, proj_at, third_deg)` tuples.
    fn rows(&self) -> Vec<(String, f64, f64, f64, f64, f64)> {
        self.inner
            .rows
            .iter()
            .map(|r| (r.label.clone(), r.ix, r.cx, r.height_t, r.proj_at, r.third_deg))
            .collect()
    }

    fn table(&self) -> String {
        self.inner.table()
    }
}

#[pyfunction]
#[pyo3(signature = (theta, unit = 100.0, eps_deg = 1e-7, max_iter = 100))]
fn trisect_iterative(
    theta: &PyAngle,
    unit: f64,
    eps_deg: f64,
    max_iter: usize,
) -> PyResult<PyTrisectionTrace> {
    classical::trisect_iterative(theta.inner, unit, eps_deg, max_iter)
        .map(|inner| PyTrisectionTrace { inner })
        .map_err(value_err)
}

/// One identity row: `(name, expected_rad, actual_rad, error_rad, pass)`.
type IdentityRow = (String, f64, f64, f64, bool);

/// Returns `(all_pass, third_degrees, checks)` with one [`IdentityRow`]
/// per identity.
#[pyfunction]
fn archimedes_limit_check(
    theta: &PyAngle,
) -> PyResult<(bool, f64, Vec<IdentityRow>)> {
    let report = classical::archimedes_limit_check(theta.inner).map_err(value_err)?;
    let checks = report
        .checks
        .iter()
        .map(|c| {
            (
                c.name.to_string(),
                c.expected_rad,
                c.actual_rad,
                c.error_rad,
                c.pass,
            )
        })
        .collect();
    Ok((report.all_pass, report.third.degrees(), checks))
}

#[pyfunction]
fn consecutive_leg_triples(n: usize) -> PyResult<Vec<(u64, u64, u64)>> {
    classical::consecutive_leg_triples(n)
        .map(|ts| ts.into_iter().map(|t| (t.a, t.b, t.c)).collect())
        .map_err(value_err)
}

#[pyclass(name = "ScriptResult")]
struct PyScriptResult {
    evaluation: dsl::Evaluation,
}

#[pymethods]
impl PyScriptResult {
    #[getter]
    fn all_passed(&self) -> bool {
        self.evaluation.all_passed()
    }

    /// Assertions as `(line, lhs, rhs, tol, passed)` tuples, in source order.
    fn assertions(&self) -> Vec<(u32, f64, f64, f64, bool)> {
        self.evaluation
            .assertions
            .iter()
            .map(|a| (a.line, a.lhs, a.rhs, a.tol, a.passed))
            .collect()
    }

    /// Bindings as `(name, type)` pairs, in binding order.
    fn bindings(&self) -> Vec<(String, String)> {
        self.evaluation
            .env
            .iter()
            .map(|(name, value)| (name.to_string(), value.type_name().to_string()))
            .collect()
    }

    /// Render the construction as an SVG document (auto-fitted viewport).
    fn svg(&self) -> String {
        let viewport = dsl::Viewport::fit(&self.evaluation.env, 0.08);
        dsl::render_svg(&self.evaluation.env, &viewport)
    }
}

/// Parse and evaluate a construction script; raises ValueError with a
/// `line:col: message` diagnostic on malformed input.
#[pyfunction]
fn run_script(source: &str) -> PyResult<PyScriptResult> {
    let program = dsl::parse(source).map_err(value_err)?;
    let evaluation = dsl::evaluate(&program).map_err(value_err)?;
    Ok(PyScriptResult { evaluation })
}

#[pyfunction]
#[pyo3(signature = (value, from_unit, to_unit, cubit_in_meters = None))]
fn convert(value: f64, from_unit: &str, to_unit: &str, cubit_in_meters: Option<f64>) -> PyResult<f64> {
    let from: metrology::Unit = from_unit.parse().map_err(value_err)?;
    let to: metrology::Unit = to_unit.parse().map_err(value_err)?;
    Ok(metrology::convert(
        value,
        from,
        to,
        cubit_in_meters.unwrap_or(metrology::DEFAULT_CUBIT_IN_METERS),
    ))
}

/// Run the claim suite and return the JSON report as a string.
/// Defaults to the bundled dataset and registry.
#[pyfunction]
#[pyo3(signature = (dataset_json = None, claims_json = None))]
fn run_claim_suite(dataset_json: Option<&str>, claims_json: Option<&str>) -> PyResult<String> {
    let dataset = match dataset_json {
        Some(text) => metrology::Dataset::from_json(text).map_err(value_err)?,
        None => bundled::dataset(),
    };
    let claims = match claims_json {
        Some(text) => metrology::claims_from_json(text).map_err(value_err)?,
        None => bundled::claims(),
    };
    Ok(metrology::run_suite(&claims, &dataset).to_json())
}

#[pyfunction]
fn bundled_dataset_json() -> &'static str {
    bundled::DATASET_JSON
}

#[pyfunction]
fn bundled_claims_json() -> &'static str {
    bundled::CLAIMS_JSON
}

#[pyfunction]
fn bundled_script(name: &str) -> Option<&'static str> {
    bundled::script(name)
}

#[pyfunction]
fn bundled_script_names() -> Vec<&'static str> {
    bundled::SCRIPTS.iter().map(|(name, _)| *name).collect()
}

#[pymodule]
fn pyramidion(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoint>()?;
    m.add_class::<PyAngle>()?;
    m.add_class::<PyLine>()?;
    m.add_class::<PyCircle>()?;
    m.add_class::<PySphereMetrics>()?;
    m.add_class::<PyTrisectionTrace>()?;
    m.add_class::<PyScriptResult>()?;
    m.add_function(wrap_pyfunction!(dms, m)?)?;
    m.add_function(wrap_pyfunction!(midpoint, m)?)?;
    m.add_function(wrap_pyfunction!(perpendicular_at, m)?)?;
    m.add_function(wrap_pyfunction!(perpendicular_bisector, m)?)?;
    m.add_function(wrap_pyfunction!(angle_at, m)?)?;
    m.add_function(wrap_pyfunction!(intersect_line_line, m)?)?;
    m.add_function(wrap_pyfunction!(intersect_line_circle, m)?)?;
    m.add_function(wrap_pyfunction!(intersect_circle_circle, m)?)?;
    m.add_function(wrap_pyfunction!(sphere_metrics, m)?)?;
    m.add_function(wrap_pyfunction!(duplication_check, m)?)?;
    m.add_function(wrap_pyfunction!(cubature_radius_exact, m)?)?;
    m.add_function(wrap_pyfunction!(cubature_radius_egyptian, m)?)?;
    m.add_function(wrap_pyfunction!(trisect_iterative, m)?)?;
    m.add_function(wrap_pyfunction!(archimedes_limit_check, m)?)?;
    m.add_function(wrap_pyfunction!(consecutive_leg_triples, m)?)?;
    m.add_function(wrap_pyfunction!(run_script, m)?)?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(run_claim_suite, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_dataset_json, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_claims_json, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_script, m)?)?;
    m.add_function(wrap_pyfunction!(bundled_script_names, m)?)?;
    Ok(())
}
