//! JSON certificates produced by extremal searches.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::search::SearchSpec;
use crate::spectral::RootInterval;

/// Version written into every certificate; readers refuse anything else.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunnerUp {
    pub graph6: String,
    pub rho: RootInterval,
    /// Certified lower bound on `ρ(winner) − ρ(runner-up)`.
    pub gap_lower_bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub spec: SearchSpec,
    /// Isomorphism classes enumerated (after the connectivity filter).
    pub examined: usize,
    /// Classes satisfying the constraint.
    pub feasible: usize,
    /// graph6 of the reported winner; `None` when nothing is feasible.
    pub winner: Option<String>,
    /// Every class tied with the winner, winner included, sorted.
    pub co_winners: Vec<String>,
    pub rho: Option<RootInterval>,
    pub runner_up: Option<RunnerUp>,
    /// True iff there is a single winner and a positive certified gap to every other feasible class.
    pub unique: bool,
    /// True when the majorization dominance filter (a heuristic) removed candidates.
    pub heuristic: bool,
    /// SHA-256 of the canonical JSON of `spec`.
    pub config_hash: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Parses a certificate, rejecting unknown schema versions.
    pub fn from_json(text: &str) -> Result<Certificate> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Validation(format!("certificate is not JSON: {e}")))?;
        match v.get("schema").and_then(|s| s.as_u64()) {
            Some(s) if s == SCHEMA_VERSION as u64 => {}
            Some(s) => return Err(Error::Validation(format!("unsupported certificate schema {s} (expected {SCHEMA_VERSION})"))),
            None => return Err(Error::Validation("certificate has no schema field".into())),
        }
        serde_json::from_value(v).map_err(|e| Error::Validation(format!("malformed certificate: {e}")))
    }
}

pub fn config_hash(spec: &SearchSpec) -> String {
    let text = serde_json::to_string(spec).expect("spec serializes");
    hex::encode(Sha256::digest(text.as_bytes()))
}
