//! Input documents: the matrix `A`, an optional parameter and class, and search bounds.

use std::path::Path;

use gkz_core::arith::{fmt_rat, parse_rat};
use gkz_core::resonance::Bounds;
use gkz_core::{Configuration, IntMatrix, Int, Rat};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Environment variable overriding the enumeration budget.
pub const BUDGET_VAR: &str = "GKZ_BUDGET";

/// A rational given either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatInput {
    Int(i64),
    Text(String),
}

impl RatInput {
    pub fn to_rat(&self) -> Result<Rat, CliError> {
        match self {
            RatInput::Int(v) => Ok(Rat::from_integer(Int::from(*v))),
            RatInput::Text(s) => parse_rat(s).map_err(|_| CliError::Input(format!("cannot parse rational {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputBounds {
    #[serde(rename = "K_max", alias = "k_max", default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(rename = "W", alias = "window", default, skip_serializing_if = "Option::is_none")]
    pub window: Option<u32>,
    #[serde(rename = "R", alias = "radius", default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certify: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<RatInput>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<RatInput>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<InputBounds>,
}

/// A validated document with everything converted to exact types.
#[derive(Clone, Debug)]
pub struct Problem {
    /// The document with rationals rewritten in canonical `"p/q"` form.
    pub document: InputDocument,
    pub config: Configuration,
    pub gamma: Option<Vec<Rat>>,
    pub character: Option<Vec<Rat>>,
    pub bounds: Bounds,
}

impl Problem {
    pub fn gamma(&self) -> Result<&[Rat], CliError> {
        self.gamma.as_deref().ok_or_else(|| CliError::Input("this command needs \"gamma\"".into()))
    }
}

pub fn parse_document(text: &str) -> Result<InputDocument, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid input document: {e}")))
}

pub fn read_document(path: Option<&Path>) -> Result<InputDocument, CliError> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    parse_document(&text)
}

fn budget_override() -> Result<Option<u64>, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| CliError::Input(format!("{BUDGET_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn rats(v: &Option<Vec<RatInput>>, rows: usize, what: &str) -> Result<Option<Vec<Rat>>, CliError> {
    let Some(v) = v else { return Ok(None) };
    if v.len() != rows {
        return Err(CliError::Input(format!("\"{what}\" has length {}, expected {rows}", v.len())));
    }
    v.iter().map(RatInput::to_rat).collect::<Result<Vec<_>, _>>().map(Some)
}

fn canonical(v: &Option<Vec<Rat>>) -> Option<Vec<RatInput>> {
    v.as_ref().map(|v| v.iter().map(|r| RatInput::Text(fmt_rat(r))).collect())
}

pub fn validate(doc: &InputDocument) -> Result<Problem, CliError> {
    let rows = doc.matrix.len();
    if rows == 0 {
        return Err(CliError::Input("\"matrix\" has no rows".into()));
    }
    let cols = doc.matrix[0].len();
    if let Some(bad) = doc.matrix.iter().position(|r| r.len() != cols) {
        return Err(CliError::Input(format!("\"matrix\" is not rectangular: row {bad} has {} entries", doc.matrix[bad].len())));
    }
    let gamma = rats(&doc.gamma, rows, "gamma")?;
    let character = rats(&doc.character, rows, "character")?;
    let ib = doc.bounds.clone().unwrap_or_default();
    let defaults = Bounds::default();
    let bounds = Bounds {
        k_max: ib.k_max,
        window: ib.window.unwrap_or(defaults.window),
        radius: ib.radius.unwrap_or(defaults.radius),
        certify: ib.certify.unwrap_or(defaults.certify),
    };
    let matrix_rows: Vec<Vec<Int>> = doc.matrix.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
    let matrix = IntMatrix::from_rows(&matrix_rows)?;
    let mut config = Configuration::new(matrix)?;
    if let Some(b) = budget_override()? {
        config.set_budget(b);
    }
    let document = InputDocument {
        matrix: doc.matrix.clone(),
        gamma: canonical(&gamma),
        character: canonical(&character),
        bounds: doc.bounds.clone(),
    };
    Ok(Problem { document, config, gamma, character, bounds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_rationals() {
        let doc = parse_document(r#"{"matrix": [[1, 0], [0, 1]], "gamma": [2, "-1/2"]}"#).unwrap();
        let p = validate(&doc).unwrap();
        assert_eq!(p.gamma.unwrap()[1], Rat::new(Int::from(-1), Int::from(2)));
        assert_eq!(p.document.gamma.unwrap()[0], RatInput::Text("2".into()));
    }

    #[test]
    fn rejects_bad_documents() {
        for text in [
            r#"{"matrix": []}"#,
            r#"{"matrix": [[1, 2], [3]]}"#,
            r#"{"matrix": [[1, 2]], "gamma": ["1", "2"]}"#,
            r#"{"matrix": [[1, 2]], "gamma": ["1/0"]}"#,
            r#"{"matrix": [[1, 2]], "extra": 1}"#,
            r#"{"matrix": [[1, 2]"#,
        ] {
            let r = parse_document(text).and_then(|d| validate(&d));
            assert!(matches!(r, Err(CliError::Input(_))), "{text}");
        }
    }

    #[test]
    fn bounds_accept_both_spellings() {
        let a = parse_document(r#"{"matrix": [[1]], "bounds": {"K_max": 3, "W": 2, "R": 5}}"#).unwrap();
        let b = parse_document(r#"{"matrix": [[1]], "bounds": {"k_max": 3, "window": 2, "radius": 5}}"#).unwrap();
        assert_eq!(a, b);
        let p = validate(&a).unwrap();
        assert_eq!((p.bounds.k_max, p.bounds.window, p.bounds.radius), (Some(3), 2, 5));
    }
}
