//! JSON report shapes shared by the CLI commands, and the witness
//! serializers that turn library witnesses into JSON objects.

use binact_core::{
    ActionError, BiequivarianceWitness, DistributivityWitness, PairWitness,
    TransitivityWitness,
};
use serde::Serialize;
use serde_json::{json, Value};

/// One entry of the `check` battery: a named claim, its verdict, and on
/// failure a witness.
#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: &'static str,
    pub claim: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: &'static str, claim: &'static str, detail: String) -> Self {
        CheckEntry {
            name,
            claim,
            pass: true,
            witness: None,
            detail: Some(detail),
        }
    }

    pub fn fail(name: &'static str, claim: &'static str, witness: Value) -> Self {
        CheckEntry {
            name,
            claim,
            pass: false,
            witness: Some(witness),
            detail: None,
        }
    }
}

#[derive(Serialize)]
pub struct BatteryReport {
    pub checks: Vec<CheckEntry>,
    pub passed: usize,
    pub failed: usize,
    pub status: &'static str,
}

impl BatteryReport {
    pub fn new(checks: Vec<CheckEntry>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        BatteryReport {
            checks,
            passed,
            failed,
            status: if failed == 0 { "pass" } else { "fail" },
        }
    }
}

pub fn distributivity_witness_json(w: &DistributivityWitness) -> Value {
    json!({
        "g": w.g, "h": w.h, "x": w.x, "y": w.y, "z": w.z,
        "lhs": w.lhs, "rhs": w.rhs,
    })
}

pub fn transitivity_witness_json(w: &TransitivityWitness) -> Value {
    json!({ "x": w.x, "orbit": w.orbit })
}

pub fn pair_witness_json(w: &PairWitness) -> Value {
    json!({ "x": w.x, "y": w.y, "z": w.z, "lhs": w.lhs, "rhs": w.rhs })
}

pub fn biequivariance_witness_json(w: &BiequivarianceWitness) -> Value {
    json!({ "g": w.g, "x": w.x, "y": w.y, "lhs": w.lhs, "rhs": w.rhs })
}

/// Action-axiom and construction failures as `{"kind": ..., fields...}`.
pub fn action_error_json(e: &ActionError) -> Value {
    match *e {
        ActionError::BadShape { expected, got } => {
            json!({ "kind": "bad-shape", "expected": expected, "got": got })
        }
        ActionError::EntryOutOfRange { g, x, y, value, size } => json!({
            "kind": "entry-out-of-range",
            "g": g, "x": x, "y": y, "value": value, "size": size,
        }),
        ActionError::IdentityAxiom { x, y, value } => {
            json!({ "kind": "identity-axiom", "x": x, "y": y, "value": value })
        }
        ActionError::Cocycle { g, h, x, y, lhs, rhs } => json!({
            "kind": "composition-axiom",
            "g": g, "h": h, "x": x, "y": y, "lhs": lhs, "rhs": rhs,
        }),
        ActionError::NonInvertibleLayer { g, x } => {
            json!({ "kind": "non-invertible-layer", "g": g, "x": x })
        }
        ActionError::GroupIndexOutOfRange { index, size } => {
            json!({ "kind": "group-index-out-of-range", "index": index, "size": size })
        }
        ActionError::PointOutOfRange { index, size } => {
            json!({ "kind": "point-out-of-range", "index": index, "size": size })
        }
        ActionError::GroupMismatch => json!({ "kind": "group-mismatch" }),
        ActionError::MapShape { expected, got } => {
            json!({ "kind": "map-shape", "expected": expected, "got": got })
        }
        ActionError::MapOutOfRange { x, value, size } => {
            json!({ "kind": "map-out-of-range", "x": x, "value": value, "size": size })
        }
        ActionError::NotWellDefined { g, k, m, l, n } => json!({
            "kind": "not-well-defined",
            "g": g, "k": k, "m": m, "l": l, "n": n,
        }),
    }
}

/// The uniform error payload printed to stdout for exit-code-1 failures.
pub fn error_payload(kind: &str, message: String, witness: Option<Value>) -> String {
    let mut obj = json!({ "error": { "kind": kind, "message": message } });
    if let Some(w) = witness {
        obj["error"]["witness"] = w;
    }
    to_stdout_json(&obj)
}

/// All stdout JSON goes through one serializer so output stays
/// byte-identical run to run: pretty, two-space indent, trailing newline.
pub fn to_stdout_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}
