//! The uniform JSON report emitted on stdout.
//!
//! One document per invocation. Object keys inside `inputs`/`results` are
//! sorted (serde_json maps), struct fields keep declaration order, and no
//! wall-clock data enters the document, so identical command lines produce
//! byte-identical output. The runtime goes to stderr instead.

use serde::{Deserialize, Serialize};

use opcalc_core::Scalar;

/// Largest residual of the run: exact for algebraic suites, floating-point
/// for trajectory diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ResidualValue {
    Exact(Scalar),
    Float(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: serde_json::Value,
    pub all_passed: bool,
    pub max_residual: ResidualValue,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl RunReport {
    pub fn to_pretty_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}
