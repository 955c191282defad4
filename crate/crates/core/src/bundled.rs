//! Reference data compiled into the binary: the published-measurement
//! dataset, the claim registry, and the `.geo` construction corpus. The same
//! files ship under `crates/core/data/` for use with explicit CLI flags.

use crate::metrology::{claims_from_json, Claim, Dataset};

pub const DATASET_JSON: &str = include_str!("../data/giza_dataset.json");
pub const CLAIMS_JSON: &str = include_str!("../data/claims.json");

/// Bundled construction scripts, by file name.
pub const SCRIPTS: &[(&str, &str)] = &[
    ("trisection.geo", include_str!("../data/scripts/trisection.geo")),
    ("cubature.geo", include_str!("../data/scripts/cubature.geo")),
    ("montel.geo", include_str!("../data/scripts/montel.geo")),
    ("duplication.geo", include_str!("../data/scripts/duplication.geo")),
];

/// The bundled measurement dataset (valid by construction; checked in tests).
pub fn dataset() -> Dataset {
    Dataset::from_json(DATASET_JSON).expect("bundled dataset is valid")
}

/// The bundled claim registry (valid by construction; checked in tests).
pub fn claims() -> Vec<Claim> {
    claims_from_json(CLAIMS_JSON).expect("bundled claims are valid")
}

/// Source text of a bundled script, by file name.
pub fn script(name: &str) -> Option<&'static str> {
    SCRIPTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}
