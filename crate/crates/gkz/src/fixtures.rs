//! Golden fixtures: a command line, an input document and the expected JSON report.

use std::path::{Path, PathBuf};

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands::{execute, Cli, Command};
use crate::error::CliError;
use crate::input::InputDocument;
use crate::report::{FixtureCaseDoc, FixturesDoc};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureCase {
    /// Arguments after the program name, e.g. `["factors", "dmod"]`.
    pub args: Vec<String>,
    pub input: InputDocument,
    pub expected: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub cases: Vec<FixtureCase>,
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load(path: &Path) -> Result<Fixture, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid fixture {}: {e}", path.display())))
}

fn fixture_paths(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::Io(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    Ok(paths)
}

/// Runs one case and returns the actual JSON value.
pub fn evaluate(case: &FixtureCase) -> Result<Value, CliError> {
    let argv = std::iter::once("gkz".to_string()).chain(case.args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Input(format!("bad fixture arguments: {e}")))?;
    if matches!(cli.command, Command::Verify { .. }) {
        return Err(CliError::Input("fixtures cannot run verify".into()));
    }
    let report = execute(&cli.command, Some(&case.input))?;
    Ok(serde_json::to_value(&report).expect("reports serialize"))
}

fn show(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

/// Differences between two JSON values as `path: expected X, found Y` lines.
pub fn diff(expected: &Value, actual: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff_at("$", expected, actual, &mut out);
    out
}

fn diff_at(path: &str, e: &Value, a: &Value, out: &mut Vec<String>) {
    match (e, a) {
        (Value::Object(em), Value::Object(am)) => {
            for (k, ev) in em {
                match am.get(k) {
                    Some(av) => diff_at(&format!("{path}.{k}"), ev, av, out),
                    None => out.push(format!("{path}.{k}: expected {}, missing", show(ev))),
                }
            }
            for (k, av) in am {
                if !em.contains_key(k) {
                    out.push(format!("{path}.{k}: unexpected {}", show(av)));
                }
            }
        }
        (Value::Array(ev), Value::Array(av)) => {
            for (i, (x, y)) in ev.iter().zip(av).enumerate() {
                diff_at(&format!("{path}[{i}]"), x, y, out);
            }
            if ev.len() != av.len() {
                out.push(format!("{path}: expected {} items, found {}", ev.len(), av.len()));
            }
        }
        _ if e != a => out.push(format!("{path}: expected {}, found {}", show(e), show(a))),
        _ => {}
    }
}

/// Runs every fixture in `dir` whose name contains `filter`; with `bless`, rewrites expectations.
pub fn run_dir(dir: &Path, filter: Option<&str>, bless: bool) -> Result<FixturesDoc, CliError> {
    let mut names = Vec::new();
    let mut cases = Vec::new();
    for path in fixture_paths(dir)? {
        let mut fx = load(&path)?;
        if filter.is_some_and(|f| !fx.name.contains(f)) {
            continue;
        }
        names.push(fx.name.clone());
        for (i, case) in fx.cases.iter_mut().enumerate() {
            let d = match evaluate(case) {
                Ok(actual) if bless => {
                    case.expected = actual;
                    Vec::new()
                }
                Ok(actual) => diff(&case.expected, &actual),
                Err(e) => vec![format!("error: {e}")],
            };
            cases.push(FixtureCaseDoc {
                fixture: fx.name.clone(),
                case: i,
                args: case.args.clone(),
                passed: d.is_empty(),
                diff: d,
            });
        }
        if bless {
            let mut text = serde_json::to_string_pretty(&fx).expect("fixtures serialize");
            text.push('\n');
            std::fs::write(&path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    if let Some(f) = filter {
        if names.is_empty() {
            return Err(CliError::Input(format!("no fixture matches {f:?}")));
        }
    }
    let passed = cases.iter().all(|c| c.passed);
    Ok(FixturesDoc { passed, fixtures: names, cases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn diff_reports_paths() {
        let e = json!({"a": [1, 2], "b": {"c": "x"}});
        let a = json!({"a": [1, 3, 4], "b": {"c": "x", "d": true}});
        let d = diff(&e, &a);
        assert_eq!(
            d,
            vec![
                "$.a[1]: expected 2, found 3".to_string(),
                "$.a: expected 2 items, found 3".to_string(),
                "$.b.d: unexpected true".to_string(),
            ]
        );
        assert!(diff(&e, &e).is_empty());
    }
}
