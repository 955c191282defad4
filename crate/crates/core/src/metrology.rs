//! Monument measurements and the claim evaluation engine.
//!
//! A [`Dataset`] holds dimension values keyed by monument, dimension, source
//! and unit; conflicting published values (Lehner vs Petrie vs Edwards vs
//! Maragioglio) coexist as separate rows, and claims name the source they
//! rely on. A [`Claim`] pairs two expressions in the construction-script
//! expression language, extended with `monument.dimension[Source]`
//! references, against a claimed relative error.
//!
//! Conventions, applied uniformly and stated per claim in its description:
//! the relative-error denominator is the right-hand side (the geometric
//! ideal — the cube, the exact third, 1000π); a claim passes when the
//! recomputed error stays within [`PASS_SLACK`] times the claimed one, since
//! published precisions are rounded to one significant figure.

use crate::dsl::{self, Resolver};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Length units of the datasets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Meter,
    Cubit,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Meter => write!(f, "meter"),
            Unit::Cubit => write!(f, "cubit"),
        }
    }
}

impl FromStr for Unit {
    type Err = MetrologyError;

    fn from_str(s: &str) -> Result<Unit, MetrologyError> {
        match s {
            "meter" | "m" => Ok(Unit::Meter),
            "cubit" | "c" => Ok(Unit::Cubit),
            other => Err(MetrologyError::UnknownUnit(other.to_string())),
        }
    }
}

/// Royal cubit length adopted throughout the bundled dataset, in meters.
/// (Numerically close to pi/6 by coincidence; clippy notices.)
#[allow(clippy::approx_constant)]
pub const DEFAULT_CUBIT_IN_METERS: f64 = 0.5235;

/// Exact linear unit conversion.
pub fn convert(value: f64, from: Unit, to: Unit, cubit_in_meters: f64) -> f64 {
    match (from, to) {
        (Unit::Meter, Unit::Cubit) => value / cubit_in_meters,
        (Unit::Cubit, Unit::Meter) => value * cubit_in_meters,
        _ => value,
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetrologyError {
    #[error("unknown unit `{0}` (expected meter or cubit)")]
    UnknownUnit(String),
    #[error("missing measurement `{key}`")]
    MissingMeasurement { key: String },
    #[error("measurement `{key}` exists under several sources ({sources}); the claim must bind one")]
    AmbiguousSource { key: String, sources: String },
    #[error("duplicate measurement `{0}`")]
    DuplicateMeasurement(String),
    #[error("measurement `{key}`: {problem}")]
    InvalidMeasurement { key: String, problem: String },
    #[error("claim `{id}`: {problem}")]
    InvalidClaim { id: String, problem: String },
    #[error("dataset: {0}")]
    DatasetSchema(String),
    #[error("claims file: {0}")]
    ClaimsSchema(String),
    #[error("claim `{id}` {side} expression: {diagnostic}")]
    Expression {
        id: String,
        side: &'static str,
        diagnostic: String,
    },
    #[error("claim `{id}`: right-hand side evaluates to zero; relative error is undefined")]
    ZeroDenominator { id: String },
}

/// One published dimension value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub monument: String,
    pub dimension: String,
    pub value: f64,
    pub unit: Unit,
    pub source: String,
    #[serde(default)]
    pub paper_ref: String,
}

impl Measurement {
    fn key(&self) -> String {
        format!(
            "{}.{}[{}] ({})",
            self.monument, self.dimension, self.source, self.unit
        )
    }
}

/// A measurement collection with its cubit constant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    #[serde(default = "default_cubit")]
    pub cubit_in_meters: f64,
    pub measurements: Vec<Measurement>,
}

fn default_cubit() -> f64 {
    DEFAULT_CUBIT_IN_METERS
}

impl Dataset {
    /// Parse and validate a dataset from its JSON form.
    pub fn from_json(text: &str) -> Result<Dataset, MetrologyError> {
        let dataset: Dataset = serde_json::from_str(text)
            .map_err(|e| MetrologyError::DatasetSchema(e.to_string()))?;
        dataset.validate()?;
        Ok(dataset)
    }

    pub fn validate(&self) -> Result<(), MetrologyError> {
        if self.cubit_in_meters.is_nan() || self.cubit_in_meters <= 0.0 {
            return Err(MetrologyError::DatasetSchema(
                "cubit_in_meters must be strictly positive".to_string(),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for m in &self.measurements {
            if !(m.value > 0.0 && m.value.is_finite()) {
                return Err(MetrologyError::InvalidMeasurement {
                    key: m.key(),
                    problem: format!("value must be strictly positive, got {}", m.value),
                });
            }
            if m.source.trim().is_empty() {
                return Err(MetrologyError::InvalidMeasurement {
                    key: m.key(),
                    problem: "source must be non-empty".to_string(),
                });
            }
            if !seen.insert((
                m.monument.clone(),
                m.dimension.clone(),
                m.source.clone(),
                m.unit,
            )) {
                return Err(MetrologyError::DuplicateMeasurement(m.key()));
            }
        }
        Ok(())
    }

    /// Value of `monument.dimension` in `unit`, converted on demand when the
    /// source published it in the other unit. With no source given, a single
    /// publishing source is required.
    pub fn lookup(
        &self,
        monument: &str,
        dimension: &str,
        source: Option<&str>,
        unit: Unit,
    ) -> Result<f64, MetrologyError> {
        let candidates: Vec<&Measurement> = self
            .measurements
            .iter()
            .filter(|m| {
                m.monument == monument
                    && m.dimension == dimension
                    && source.is_none_or(|s| m.source == s)
            })
            .collect();
        if candidates.is_empty() {
            let key = match source {
                Some(s) => format!("{monument}.{dimension}[{s}]"),
                None => format!("{monument}.{dimension}"),
            };
            return Err(MetrologyError::MissingMeasurement { key });
        }
        if source.is_none() {
            let mut sources: Vec<&str> = candidates.iter().map(|m| m.source.as_str()).collect();
            sources.sort_unstable();
            sources.dedup();
            if sources.len() > 1 {
                return Err(MetrologyError::AmbiguousSource {
                    key: format!("{monument}.{dimension}"),
                    sources: sources.join(", "),
                });
            }
        }
        match candidates.iter().find(|m| m.unit == unit) {
            Some(m) => Ok(m.value),
            None => {
                let m = candidates[0];
                Ok(convert(m.value, m.unit, unit, self.cubit_in_meters))
            }
        }
    }
}

/// Multiplier applied to the claimed relative error when deciding pass/fail;
/// absorbs the one-significant-figure rounding of published precisions while
/// still failing on implementation mistakes, which shift errors by orders of
/// magnitude.
pub const PASS_SLACK: f64 = 1.5;

/// A testable hypothesis: two expressions expected to agree within a claimed
/// relative error, evaluated in a fixed unit system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub description: String,
    pub lhs: String,
    pub rhs: String,
    pub unit_system: Unit,
    pub claimed_rel_err: f64,
    #[serde(default)]
    pub source_bindings: BTreeMap<String, String>,
    #[serde(default)]
    pub paper_ref: String,
}

#[derive(Debug, Deserialize)]
struct ClaimsFile {
    claims: Vec<Claim>,
}

/// Parse and validate a claim registry from its JSON form.
pub fn claims_from_json(text: &str) -> Result<Vec<Claim>, MetrologyError> {
    let file: ClaimsFile =
        serde_json::from_str(text).map_err(|e| MetrologyError::ClaimsSchema(e.to_string()))?;
    let mut seen = std::collections::BTreeSet::new();
    for claim in &file.claims {
        if claim.claimed_rel_err.is_nan() || claim.claimed_rel_err <= 0.0 {
            return Err(MetrologyError::InvalidClaim {
                id: claim.id.clone(),
                problem: "claimed_rel_err must be strictly positive".to_string(),
            });
        }
        if !seen.insert(claim.id.clone()) {
            return Err(MetrologyError::InvalidClaim {
                id: claim.id.clone(),
                problem: "duplicate id".to_string(),
            });
        }
        for (side, text) in [("lhs", &claim.lhs), ("rhs", &claim.rhs)] {
            dsl::parse_expression(text).map_err(|d| MetrologyError::Expression {
                id: claim.id.clone(),
                side,
                diagnostic: d.to_string(),
            })?;
        }
    }
    Ok(file.claims)
}

/// Evaluation outcome of one claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub rel_err: f64,
    pub claimed_rel_err: f64,
    pub pass: bool,
    /// Headroom left under the slack policy: `claimed × slack − rel_err`.
    pub margin: f64,
}

struct DatasetResolver<'a> {
    dataset: &'a Dataset,
    unit: Unit,
    bindings: &'a BTreeMap<String, String>,
}

impl Resolver for DatasetResolver<'_> {
    fn resolve(
        &self,
        monument: &str,
        dimension: &str,
        source: Option<&str>,
    ) -> Result<f64, String> {
        let bound = self
            .bindings
            .get(&format!("{monument}.{dimension}"))
            .map(String::as_str);
        let source = source.or(bound);
        self.dataset
            .lookup(monument, dimension, source, self.unit)
            .map_err(|e| e.to_string())
    }
}

fn eval_side(
    claim: &Claim,
    dataset: &Dataset,
    side: &'static str,
    text: &str,
) -> Result<f64, MetrologyError> {
    let expr = dsl::parse_expression(text).map_err(|d| MetrologyError::Expression {
        id: claim.id.clone(),
        side,
        diagnostic: d.to_string(),
    })?;
    let resolver = DatasetResolver {
        dataset,
        unit: claim.unit_system,
        bindings: &claim.source_bindings,
    };
    let env = dsl::Env::default();
    let value =
        dsl::eval_expression(&expr, &env, &resolver).map_err(|d| MetrologyError::Expression {
            id: claim.id.clone(),
            side,
            diagnostic: d.to_string(),
        })?;
    value.as_number().ok_or_else(|| MetrologyError::Expression {
        id: claim.id.clone(),
        side,
        diagnostic: format!("expression yields a {}, not a number", value.type_name()),
    })
}

/// Evaluate one claim against a dataset.
pub fn evaluate_claim(claim: &Claim, dataset: &Dataset) -> Result<ClaimResult, MetrologyError> {
    let lhs_value = eval_side(claim, dataset, "lhs", &claim.lhs)?;
    let rhs_value = eval_side(claim, dataset, "rhs", &claim.rhs)?;
    if rhs_value == 0.0 {
        return Err(MetrologyError::ZeroDenominator {
            id: claim.id.clone(),
        });
    }
    let rel_err = (lhs_value - rhs_value).abs() / rhs_value.abs();
    let bound = claim.claimed_rel_err * PASS_SLACK;
    Ok(ClaimResult {
        id: claim.id.clone(),
        lhs_value,
        rhs_value,
        rel_err,
        claimed_rel_err: claim.claimed_rel_err,
        pass: rel_err <= bound,
        margin: bound - rel_err,
    })
}

/// Per-claim entry of a suite report: a result, or the error that kept the
/// claim from evaluating (other claims still run).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SuiteEntry {
    Result(ClaimResult),
    Error { id: String, error: String },
}

impl SuiteEntry {
    pub fn id(&self) -> &str {
        match self {
            SuiteEntry::Result(r) => &r.id,
            SuiteEntry::Error { id, .. } => id,
        }
    }
}

/// Deterministic report over a claim list, in declaration order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errored == 0 && self.passed == self.entries.len()
    }

    /// Aligned human-readable table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<26} {:>16} {:>16} {:>11} {:>9}  {}\n",
            "claim", "lhs", "rhs", "rel_err", "claimed", "status"
        ));
        for entry in &self.entries {
            match entry {
                SuiteEntry::Result(r) => {
                    out.push_str(&format!(
                        "{:<26} {:>16.6} {:>16.6} {:>11.4e} {:>9.1e}  {}\n",
                        r.id,
                        r.lhs_value,
                        r.rhs_value,
                        r.rel_err,
                        r.claimed_rel_err,
                        if r.pass { "pass" } else { "FAIL" }
                    ));
                }
                SuiteEntry::Error { id, error } => {
                    out.push_str(&format!("{:<26} ERROR: {}\n", id, error));
                }
            }
        }
        out.push_str(&format!(
            "{} claims: {} passed, {} failed, {} errored\n",
            self.entries.len(),
            self.passed,
            self.failed,
            self.errored
        ));
        out
    }

    /// CSV form: `id,lhs,rhs,rel_err,claimed,pass` (errored claims keep only
    /// id and claimed, with `error` in the pass column).
    pub fn to_csv(&self, claims: &[Claim]) -> String {
        let claimed_of = |id: &str| {
            claims
                .iter()
                .find(|c| c.id == id)
                .map(|c| c.claimed_rel_err)
        };
        let mut out = String::from("id,lhs,rhs,rel_err,claimed,pass\n");
        for entry in &self.entries {
            match entry {
                SuiteEntry::Result(r) => {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        r.id, r.lhs_value, r.rhs_value, r.rel_err, r.claimed_rel_err, r.pass
                    ));
                }
                SuiteEntry::Error { id, .. } => {
                    let claimed = claimed_of(id).map(|c| c.to_string()).unwrap_or_default();
                    out.push_str(&format!("{id},,,,{claimed},error\n"));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Evaluate every claim in order; per-claim failures become report entries
/// instead of aborting the suite.
pub fn run_suite(claims: &[Claim], dataset: &Dataset) -> SuiteReport {
    let mut entries = Vec::with_capacity(claims.len());
    let mut passed = 0;
    let mut failed = 0;
    let mut errored = 0;
    for claim in claims {
        match evaluate_claim(claim, dataset) {
            Ok(result) => {
                if result.pass {
                    passed += 1;
                } else {
                    failed += 1;
                }
                entries.push(SuiteEntry::Result(result));
            }
            Err(err) => {
                errored += 1;
                entries.push(SuiteEntry::Error {
                    id: claim.id.clone(),
                    error: err.to_string(),
                });
            }
        }
    }
    SuiteReport {
        entries,
        passed,
        failed,
        errored,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;
    use proptest::prelude::*;

    fn claim(id: &str, lhs: &str, rhs: &str, unit: Unit, claimed: f64) -> Claim {
        Claim {
            id: id.to_string(),
            description: String::new(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            unit_system: unit,
            claimed_rel_err: claimed,
            source_bindings: BTreeMap::new(),
            paper_ref: String::new(),
        }
    }

    #[test]
    fn conversions_match_the_cubit_constant() {
        let k = DEFAULT_CUBIT_IN_METERS;
        assert!((convert(440.0, Unit::Cubit, Unit::Meter, k) - 230.34).abs() < 1e-12);
        assert!((convert(k, Unit::Meter, Unit::Cubit, k) - 1.0).abs() < 1e-15);
        assert!((convert(105.0, Unit::Meter, Unit::Cubit, k) - 200.5730659025788).abs() < 1e-12);
        assert_eq!(convert(7.0, Unit::Meter, Unit::Meter, k), 7.0);
    }

    #[test]
    fn unknown_unit_is_rejected() {
        assert!(matches!(
            "furlong".parse::<Unit>(),
            Err(MetrologyError::UnknownUnit(_))
        ));
        assert_eq!("meter".parse::<Unit>().unwrap(), Unit::Meter);
        assert_eq!("cubit".parse::<Unit>().unwrap(), Unit::Cubit);
    }

    #[test]
    fn lookup_prefers_the_exact_unit_and_converts_otherwise() {
        let dataset = bundled::dataset();
        // stored in both units: the cubit row wins in the cubit system
        let base = dataset.lookup("kheops", "base", None, Unit::Cubit).unwrap();
        assert_eq!(base, 440.0);
        // stored in meters only: converted on demand
        let diagonal = dataset
            .lookup("giza", "rect_diagonal", None, Unit::Cubit)
            .unwrap();
        assert!((diagonal - 1170.8 / DEFAULT_CUBIT_IN_METERS).abs() < 1e-9);
    }

    #[test]
    fn lookup_demands_a_source_when_several_published() {
        let dataset = bundled::dataset();
        assert!(matches!(
            dataset.lookup("khephren", "height", None, Unit::Cubit),
            Err(MetrologyError::AmbiguousSource { .. })
        ));
        let h = dataset
            .lookup("khephren", "height", Some("Maragioglio"), Unit::Cubit)
            .unwrap();
        assert_eq!(h, 273.0);
    }

    #[test]
    fn missing_measurement_names_the_key() {
        let dataset = bundled::dataset();
        let err = dataset
            .lookup("sphinx", "height", None, Unit::Meter)
            .unwrap_err();
        assert!(err.to_string().contains("sphinx.height"));
    }

    #[test]
    fn dataset_validation_catches_duplicates_and_bad_rows() {
        let mut ds = bundled::dataset();
        let row = ds.measurements[0].clone();
        ds.measurements.push(row);
        assert!(matches!(
            ds.validate(),
            Err(MetrologyError::DuplicateMeasurement(_))
        ));

        let mut ds = bundled::dataset();
        ds.measurements[0].value = -3.0;
        assert!(matches!(
            ds.validate(),
            Err(MetrologyError::InvalidMeasurement { .. })
        ));

        let mut ds = bundled::dataset();
        ds.measurements[0].source = String::new();
        assert!(ds.validate().is_err());
    }

    #[test]
    fn montel_claim_reproduces_the_oracle_error() {
        let dataset = bundled::dataset();
        let claims = bundled::claims();
        let montel = claims.iter().find(|c| c.id == "C-MONTEL").unwrap();
        let result = evaluate_claim(montel, &dataset).unwrap();
        assert!((result.lhs_value - 1760.0).abs() < 1e-12);
        assert!((result.rhs_value - 1759.291886010284).abs() < 1e-9);
        assert!((result.rel_err - 4.024994347707533e-4).abs() < 1e-12);
        assert!(result.pass);
        assert!(result.margin > 0.0);
    }

    #[test]
    fn khephren_and_mykerinos_spot_errors() {
        let dataset = bundled::dataset();
        let claims = bundled::claims();
        let by_id = |id: &str| {
            let c = claims.iter().find(|c| c.id == id).unwrap();
            evaluate_claim(c, &dataset).unwrap()
        };
        assert!((by_id("C-KHEPHREN-273").rel_err - 5.032897269359218e-4).abs() < 1e-12);
        assert!((by_id("C-MYK-AREA").rel_err - 1.0337070144777652e-3).abs() < 1e-12);
        assert!((by_id("C-TRISECT-PALIER").rel_err - 3.450306356666282e-3).abs() < 1e-10);
    }

    #[test]
    fn the_whole_bundled_registry_passes() {
        let report = run_suite(&bundled::claims(), &bundled::dataset());
        assert_eq!(report.entries.len(), 21);
        assert!(report.all_passed(), "{}", report.to_text());
    }

    #[test]
    fn empty_claim_list_gives_an_empty_report() {
        let report = run_suite(&[], &bundled::dataset());
        assert!(report.entries.is_empty());
        assert_eq!((report.passed, report.failed, report.errored), (0, 0, 0));
    }

    #[test]
    fn claim_errors_do_not_abort_the_suite() {
        let dataset = bundled::dataset();
        let claims = vec![
            claim("GOOD", "kheops.base", "440", Unit::Cubit, 1e-9),
            claim("BAD", "sphinx.height", "1", Unit::Meter, 1e-3),
            claim("ALSO-GOOD", "2 + 2", "4", Unit::Meter, 1e-9),
        ];
        let report = run_suite(&claims, &dataset);
        assert_eq!(report.passed, 2);
        assert_eq!(report.errored, 1);
        match &report.entries[1] {
            SuiteEntry::Error { id, error } => {
                assert_eq!(id, "BAD");
                assert!(error.contains("sphinx.height"));
            }
            other => panic!("expected an error entry, got {other:?}"),
        }
        let csv = report.to_csv(&claims);
        assert!(csv.contains("BAD,,,,0.001,error"));
    }

    #[test]
    fn zero_denominator_is_a_named_error() {
        let dataset = bundled::dataset();
        let c = claim("Z", "1", "0", Unit::Meter, 1e-3);
        assert!(matches!(
            evaluate_claim(&c, &dataset),
            Err(MetrologyError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn reports_are_byte_identical_across_runs() {
        let dataset = bundled::dataset();
        let claims = bundled::claims();
        let a = run_suite(&claims, &dataset);
        let b = run_suite(&claims, &dataset);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_csv(&claims), b.to_csv(&claims));
        assert_eq!(a.to_json(), b.to_json());
    }

    /// Dimension-consistent claims keep their relative error when the unit
    /// system flips, provided every referenced value actually goes through
    /// the conversion (single-unit dataset).
    #[test]
    fn rel_err_is_invariant_under_unit_switch() {
        let mut dataset = bundled::dataset();
        dataset.measurements.retain(|m| m.unit == Unit::Cubit);
        let claims = bundled::claims();
        for id in ["C-MONTEL", "C-DUP-CUBIT"] {
            let template = claims.iter().find(|c| c.id == id).unwrap();
            let mut as_meter = template.clone();
            as_meter.unit_system = Unit::Meter;
            let in_cubits = evaluate_claim(template, &dataset).unwrap();
            let in_meters = evaluate_claim(&as_meter, &dataset).unwrap();
            assert!(
                (in_cubits.rel_err - in_meters.rel_err).abs() <= 1e-12,
                "{id}: {} vs {}",
                in_cubits.rel_err,
                in_meters.rel_err
            );
        }
    }

    #[test]
    fn claims_json_validation() {
        assert!(claims_from_json("{\"claims\": []}").unwrap().is_empty());
        let bad_expr = r#"{"claims": [{"id": "X", "description": "", "lhs": "1 +", "rhs": "1",
            "unit_system": "meter", "claimed_rel_err": 1e-3}]}"#;
        assert!(matches!(
            claims_from_json(bad_expr),
            Err(MetrologyError::Expression { .. })
        ));
        let bad_claimed = r#"{"claims": [{"id": "X", "description": "", "lhs": "1", "rhs": "1",
            "unit_system": "meter", "claimed_rel_err": 0.0}]}"#;
        assert!(matches!(
            claims_from_json(bad_claimed),
            Err(MetrologyError::InvalidClaim { .. })
        ));
        let bad_unit = r#"{"claims": [{"id": "X", "description": "", "lhs": "1", "rhs": "1",
            "unit_system": "furlong", "claimed_rel_err": 1e-3}]}"#;
        assert!(matches!(
            claims_from_json(bad_unit),
            Err(MetrologyError::ClaimsSchema(_))
        ));
    }

    proptest! {
        #[test]
        fn conversion_round_trip_is_exact_enough(
            value in 0.001..1e6f64,
            cubit in 0.3..0.8f64,
        ) {
            let there = convert(value, Unit::Meter, Unit::Cubit, cubit);
            let back = convert(there, Unit::Cubit, Unit::Meter, cubit);
            prop_assert!((back - value).abs() <= 1e-15 * value);
        }
    }
}
