//! Command-line front end for `gkz-core`: JSON input documents, text and JSON reports,
//! region grids, golden fixtures and the oracle property suite.

pub mod commands;
pub mod error;
pub mod fixtures;
pub mod input;
pub mod render;
pub mod report;

use commands::{execute, Cli};
use error::{EXIT_FAILED, EXIT_INDEFINITE, EXIT_OK};

/// Rendered output, diagnostics and process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    let doc = match cli.command.input_path() {
        Some(path) => match input::read_document(path.map(|p| p.as_path())) {
            Ok(d) => Some(d),
            Err(e) => return Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
        },
        None => None,
    };
    match execute(&cli.command, doc.as_ref()) {
        Ok(report) => {
            let stdout = if cli.json { report.to_json() } else { render::render(&report) };
            let (code, stderr) = if report.is_failure() {
                (EXIT_FAILED, String::new())
            } else if cli.strict && report.is_indefinite() {
                (EXIT_INDEFINITE, "error: result is only known up to bounds\n".to_string())
            } else {
                (EXIT_OK, String::new())
            };
            Outcome { stdout, stderr, code }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}
