//! JSON file formats for groups and actions.
//!
//! A group file is `{"order": m, "cayley": [[...]]}`; an action file wraps
//! one as `{"group": {...}, "space_size": n, "table": [[[...]]]}` with the
//! table indexed `[g][x][y]`. Group tables may number their elements any
//! way they like: validation renumbers so the identity is 0 and, for
//! action files, permutes the layer axis to match.

use std::fs;
use std::path::Path;

use binact_core::{validate_group, BinaryAction, FinSet, FiniteGroup};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionFile {
    pub group: GroupFile,
    pub space_size: usize,
    pub table: Vec<Vec<Vec<usize>>>,
}

/// File and schema problems (exit code 3 territory). Mathematical failures
/// inside a well-formed file are not format errors and are reported by the
/// commands themselves.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: not valid JSON for this schema: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {detail}")]
    Shape { path: String, detail: String },
    #[error("{path}: group table invalid: {detail}")]
    Group { path: String, detail: String },
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A validated group plus the renumbering applied to the file's element
/// indices, if any (`relabeling[old] = new`).
pub struct LoadedGroup {
    pub group: FiniteGroup,
    pub relabeling: Option<Vec<usize>>,
}

fn group_from_file(file: &GroupFile, path: &Path) -> Result<LoadedGroup, FormatError> {
    if file.cayley.len() != file.order {
        return Err(FormatError::Shape {
            path: path.display().to_string(),
            detail: format!(
                "declared order {} but the table has {} rows",
                file.order,
                file.cayley.len()
            ),
        });
    }
    let validated = validate_group(&file.cayley).map_err(|e| FormatError::Group {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    Ok(LoadedGroup {
        group: validated.group,
        relabeling: validated.relabeling,
    })
}

pub fn load_group(path: &Path) -> Result<LoadedGroup, FormatError> {
    let text = read(path)?;
    let file: GroupFile = serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: path.display().to_string(),
        source,
    })?;
    group_from_file(&file, path)
}

/// A parsed action file, flattened and with the layer axis renumbered to
/// the canonical group numbering. The result is NOT yet validated against
/// the action axioms — commands do that so axiom failures can be reported
/// as mathematical findings rather than parse errors.
pub struct LoadedAction {
    pub group: FiniteGroup,
    pub space_size: usize,
    pub table: Vec<usize>,
    pub relabeled: bool,
}

pub fn load_action(path: &Path) -> Result<LoadedAction, FormatError> {
    let text = read(path)?;
    let file: ActionFile = serde_json::from_str(&text).map_err(|source| FormatError::Json {
        path: path.display().to_string(),
        source,
    })?;
    let LoadedGroup { group, relabeling } = group_from_file(&file.group, path)?;
    let m = group.order();
    let n = file.space_size;
    if n == 0 {
        return Err(FormatError::Shape {
            path: path.display().to_string(),
            detail: "space_size must be at least 1".into(),
        });
    }
    if file.table.len() != m {
        return Err(FormatError::Shape {
            path: path.display().to_string(),
            detail: format!("table has {} layers, expected {m}", file.table.len()),
        });
    }
    let mut table = vec![0usize; m * n * n];
    for (g_old, layer) in file.table.iter().enumerate() {
        if layer.len() != n {
            return Err(FormatError::Shape {
                path: path.display().to_string(),
                detail: format!("layer {g_old} has {} rows, expected {n}", layer.len()),
            });
        }
        let g_new = relabeling.as_ref().map_or(g_old, |r| r[g_old]);
        for (x, row) in layer.iter().enumerate() {
            if row.len() != n {
                return Err(FormatError::Shape {
                    path: path.display().to_string(),
                    detail: format!(
                        "layer {g_old}, row {x} has {} entries, expected {n}",
                        row.len()
                    ),
                });
            }
            for (y, &value) in row.iter().enumerate() {
                table[(g_new * n + x) * n + y] = value;
            }
        }
    }
    Ok(LoadedAction {
        group,
        space_size: n,
        table,
        relabeled: relabeling.is_some(),
    })
}

/// Serializes a validated action back into the nested file schema.
pub fn action_to_file(action: &BinaryAction) -> ActionFile {
    let group = action.group();
    let n = action.space_size();
    let table = group
        .elements()
        .map(|g| {
            (0..n)
                .map(|x| (0..n).map(|y| action.at(g, x, y)).collect())
                .collect()
        })
        .collect();
    ActionFile {
        group: GroupFile {
            order: group.order(),
            cayley: group.cayley_rows(),
        },
        space_size: n,
        table,
    }
}

/// Resolves `--group` arguments: an existing path is loaded as a group
/// file; otherwise the string must be a built-in name (Zk, V4, S3, S4, D4,
/// Q8).
pub fn resolve_group(spec: &str) -> Result<FiniteGroup, String> {
    let path = Path::new(spec);
    if path.exists() {
        return load_group(path)
            .map(|loaded| loaded.group)
            .map_err(|e| e.to_string());
    }
    binact_core::named_group(spec)
        .map_err(|e| format!("{spec}: not a file, and not a known group name ({e})"))
}

/// Carrier wrapper for command code.
pub fn carrier(n: usize) -> FinSet {
    FinSet::new(n).expect("sizes are validated before this point")
}

#[cfg(test)]
mod tests {
    use super::*;
    use binact_core::{symmetric, BinaryAction};
    use std::io::Write;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn round_trip_through_the_file_schema() {
        let action = BinaryAction::conjugate_translation(symmetric(3));
        let file = action_to_file(&action);
        let text = serde_json::to_string(&file).unwrap();
        let temp = write_temp(&text);
        let loaded = load_action(temp.path()).unwrap();
        assert!(!loaded.relabeled);
        let rebuilt = BinaryAction::validate(
            loaded.group,
            carrier(loaded.space_size),
            loaded.table,
        )
        .unwrap();
        assert_eq!(rebuilt, action);
    }

    #[test]
    fn displaced_identities_are_renumbered_consistently() {
        // Z2 written with the identity at position 1, acting by the flip
        // action: layer for the non-identity element swaps the carrier.
        // Old numbering: element 0 is the flip, element 1 the identity.
        let text = r#"{
            "group": {"order": 2, "cayley": [[1, 0], [0, 1]]},
            "space_size": 2,
            "table": [[[1, 0], [1, 0]], [[0, 1], [0, 1]]]
        }"#;
        let temp = write_temp(text);
        let loaded = load_action(temp.path()).unwrap();
        assert!(loaded.relabeled);
        let action = BinaryAction::validate(
            loaded.group,
            carrier(loaded.space_size),
            loaded.table,
        )
        .unwrap();
        // After renumbering, layer 0 is the unit and layer 1 flips.
        assert_eq!(action.at(0, 0, 0), 0);
        assert_eq!(action.at(1, 0, 0), 1);
    }

    #[test]
    fn schema_violations_are_format_errors() {
        let bad_json = write_temp("{");
        assert!(matches!(
            load_action(bad_json.path()),
            Err(FormatError::Json { .. })
        ));

        let wrong_layers = write_temp(
            r#"{"group": {"order": 2, "cayley": [[0,1],[1,0]]},
                "space_size": 1, "table": [[[0]]]}"#,
        );
        assert!(matches!(
            load_action(wrong_layers.path()),
            Err(FormatError::Shape { .. })
        ));

        let not_a_group = write_temp(
            r#"{"group": {"order": 2, "cayley": [[0,1],[1,1]]},
                "space_size": 1, "table": [[[0]], [[0]]]}"#,
        );
        assert!(matches!(
            load_action(not_a_group.path()),
            Err(FormatError::Group { .. })
        ));
    }

    #[test]
    fn group_resolution_prefers_files_then_names() {
        assert_eq!(resolve_group("Z4").unwrap().order(), 4);
        assert_eq!(resolve_group("q8").unwrap().order(), 8);
        assert!(resolve_group("nonsense").is_err());

        let temp = write_temp(r#"{"order": 3, "cayley": [[0,1,2],[1,2,0],[2,0,1]]}"#);
        let group = resolve_group(temp.path().to_str().unwrap()).unwrap();
        assert_eq!(group.order(), 3);
    }
}
