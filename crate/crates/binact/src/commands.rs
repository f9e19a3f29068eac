//! Command implementations. Each returns the exact stdout payload (so
//! output stays byte-identical across runs) or a [`CmdFailure`] carrying
//! the exit code; printing and process exit happen in `main`.
//!
//! Exit codes: 0 success, 1 mathematical failure (with a witness on
//! stdout), 2 resource bound exceeded, 3 input or parse error.

use std::path::Path;
use std::time::Instant;

use binact_core::{
    classify, enumerate_h2_bounded, ActionError, BinaryAction, ClassifyError,
};
use serde_json::json;

use crate::battery::{battery_context, checks};
use crate::formats::{action_to_file, carrier, load_action, resolve_group};
use crate::report::{
    action_error_json, distributivity_witness_json, error_payload, to_stdout_json,
    transitivity_witness_json, BatteryReport,
};

pub struct CmdFailure {
    pub code: i32,
    /// JSON payload for mathematical failures; parse and bound errors keep
    /// stdout empty.
    pub stdout: Option<String>,
    pub stderr: Option<String>,
}

impl CmdFailure {
    fn parse(message: String) -> Self {
        CmdFailure {
            code: 3,
            stdout: None,
            stderr: Some(message),
        }
    }

    fn bound(message: String) -> Self {
        CmdFailure {
            code: 2,
            stdout: None,
            stderr: Some(message),
        }
    }

    fn math(payload: String) -> Self {
        CmdFailure {
            code: 1,
            stdout: Some(payload),
            stderr: None,
        }
    }
}

pub type CmdResult = Result<String, CmdFailure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum MakeKind {
    /// g(x,y) = x·g·x⁻¹·y on the group itself
    Conj,
    /// g(x,y) = x⁻¹·g·x·y, generally not distributive
    InvConj,
    /// g(kH, lH) = (k·g·k⁻¹·l)H on the cosets of a normal subgroup
    Coset,
}

/// `h2`: count or list the invertible binary operation tables on `size`
/// points. Listing at size 4 already produces 331 776 tables, hence the
/// `max_n` gate (exit 2 when exceeded).
pub fn cmd_h2(size: usize, list: bool, max_n: usize) -> CmdResult {
    if !(1..=4).contains(&max_n) {
        return Err(CmdFailure::parse(format!(
            "--max-n must be between 1 and 4, got {max_n}"
        )));
    }
    if size == 0 {
        return Err(CmdFailure::parse("--size must be at least 1".into()));
    }
    if size > max_n {
        return Err(CmdFailure::bound(format!(
            "size {size} exceeds the enumeration bound {max_n}; raise it with --max-n (limit 4)"
        )));
    }
    let ops = enumerate_h2_bounded(carrier(size), max_n)
        .map_err(|e| CmdFailure::bound(e.to_string()))?;
    if list {
        let tables: Vec<Vec<Vec<usize>>> = ops
            .iter()
            .map(|f| {
                (0..size)
                    .map(|x| (0..size).map(|y| f.at(x, y)).collect())
                    .collect()
            })
            .collect();
        Ok(to_stdout_json(&tables))
    } else {
        Ok(format!("{}\n", ops.len()))
    }
}

/// `verify`: validate an action file against the axioms and report its
/// properties. Exit 0 iff the axioms hold; distributivity and transitivity
/// are reported, not enforced.
pub fn cmd_verify(path: &Path) -> CmdResult {
    let loaded = load_action(path).map_err(|e| CmdFailure::parse(e.to_string()))?;
    let mut report = json!({
        "group_order": loaded.group.order(),
        "space_size": loaded.space_size,
        "relabeled": loaded.relabeled,
    });
    let space = carrier(loaded.space_size);
    match BinaryAction::validate(loaded.group, space, loaded.table) {
        Err(e) => {
            report["axioms"] = json!({ "pass": false, "witness": action_error_json(&e) });
            report["status"] = json!("fail");
            Err(CmdFailure::math(to_stdout_json(&report)))
        }
        Ok(action) => {
            report["axioms"] = json!({ "pass": true });
            report["distributive"] = match action.distributivity().witness() {
                None => json!({ "pass": true }),
                Some(w) => json!({ "pass": false, "witness": distributivity_witness_json(w) }),
            };
            report["transitive"] = match action.transitivity().witness() {
                None => json!({ "pass": true }),
                Some(w) => json!({ "pass": false, "witness": transitivity_witness_json(w) }),
            };
            report["kernel"] = json!(action.kernel().members());
            report["effective"] = json!(action.is_effective());
            report["status"] = json!("pass");
            Ok(to_stdout_json(&report))
        }
    }
}

/// `make`: construct one of the built-in actions over a named or file-based
/// group and emit it in the action file schema.
pub fn cmd_make(
    kind: MakeKind,
    group_spec: &str,
    subgroup: Option<&[usize]>,
    out: Option<&Path>,
) -> CmdResult {
    let group = resolve_group(group_spec).map_err(CmdFailure::parse)?;
    let action = match kind {
        MakeKind::Conj => BinaryAction::conjugate_translation(group),
        MakeKind::InvConj => BinaryAction::inverse_conjugation(group),
        MakeKind::Coset => {
            let members = subgroup
                .ok_or_else(|| CmdFailure::parse("kind coset requires --subgroup".into()))?;
            let sub = group
                .subgroup(members)
                .map_err(|e| CmdFailure::parse(format!("--subgroup {members:?}: {e}")))?;
            match BinaryAction::coset(&group, &sub) {
                Ok(built) => built.action,
                Err(e @ ActionError::NotWellDefined { .. }) => {
                    return Err(CmdFailure::math(error_payload(
                        "not-well-defined",
                        e.to_string(),
                        Some(action_error_json(&e)),
                    )));
                }
                Err(other) => return Err(CmdFailure::parse(other.to_string())),
            }
        }
    };
    let payload = to_stdout_json(&action_to_file(&action));
    match out {
        Some(path) => {
            std::fs::write(path, &payload).map_err(|e| {
                CmdFailure::parse(format!("cannot write {}: {e}", path.display()))
            })?;
            Ok(String::new())
        }
        None => Ok(payload),
    }
}

/// `classify`: recover the coset model of a distributive transitive action
/// from a file, reporting the subgroup, the relabeling, and the verified
/// model.
pub fn cmd_classify(path: &Path, basepoint: usize) -> CmdResult {
    let loaded = load_action(path).map_err(|e| CmdFailure::parse(e.to_string()))?;
    let space = carrier(loaded.space_size);
    let action = BinaryAction::validate(loaded.group, space, loaded.table).map_err(|e| {
        CmdFailure::math(error_payload(
            "invalid-action",
            e.to_string(),
            Some(action_error_json(&e)),
        ))
    })?;
    let result = classify(&action, basepoint).map_err(|e| match e {
        ClassifyError::NotDistributive(w) => CmdFailure::math(error_payload(
            "not-distributive",
            e.to_string(),
            Some(distributivity_witness_json(&w)),
        )),
        ClassifyError::NotTransitive(ref w) => CmdFailure::math(error_payload(
            "not-transitive",
            e.to_string(),
            Some(transitivity_witness_json(w)),
        )),
        ClassifyError::BasepointOutOfRange { .. } => CmdFailure::parse(e.to_string()),
        other => CmdFailure::math(error_payload("classification-failed", other.to_string(), None)),
    })?;
    let payload = json!({
        "basepoint": result.basepoint,
        "subgroup": result.subgroup.members(),
        "coset_count": result.cosets.count(),
        "iso": result.iso,
        "checks": {
            "subgroup_is_stabilizer": result.checks.subgroup_is_stabilizer,
            "subgroup_normal": result.checks.subgroup_normal,
            "iso_well_defined": result.checks.iso_well_defined,
            "iso_bijective": result.checks.iso_bijective,
            "iso_biequivariant": result.checks.iso_biequivariant,
        },
        "model": action_to_file(&result.model),
    });
    Ok(to_stdout_json(&payload))
}

/// `check`: run the full verification battery on the built-in fixtures.
/// Per-entry progress and timings go to stderr so stdout stays
/// byte-identical across runs; exit 0 iff every entry passes.
pub fn cmd_check(closure_cap: usize) -> CmdResult {
    let started = Instant::now();
    let ctx = battery_context(closure_cap);
    let mut entries = Vec::new();
    for check in checks() {
        let t = Instant::now();
        let entry = check(&ctx);
        eprintln!(
            "{} {} ({} ms)",
            if entry.pass { "ok  " } else { "FAIL" },
            entry.name,
            t.elapsed().as_millis()
        );
        entries.push(entry);
    }
    eprintln!(
        "battery: {} checks in {} ms",
        entries.len(),
        started.elapsed().as_millis()
    );
    let report = BatteryReport::new(entries);
    let payload = to_stdout_json(&report);
    if report.failed == 0 {
        Ok(payload)
    } else {
        Err(CmdFailure::math(payload))
    }
}
