//! Report documents and their rendering.

use std::time::Instant;

use serde_json::{json, Map, Value};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable or malformed files, exceeded budgets.
    Input(String),
}

impl From<nlgame::Error> for CliError {
    fn from(e: nlgame::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Output of one command. `passed` is false when a check the command
/// performs fails; the process then exits with status 1.
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    /// Summary lines for `--plain`.
    pub summary: Vec<String>,
    /// Printed verbatim in place of the report.
    pub raw: Option<String>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            results: Map::new(),
            summary: Vec::new(),
            raw: None,
            passed: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.summary.push(line.into());
    }

    pub fn document(&self, started: Instant) -> Value {
        json!({
            "command": self.command,
            "artifact_version": env!("CARGO_PKG_VERSION"),
            "inputs": self.inputs,
            "results": self.results,
            "elapsed_ms": started.elapsed().as_millis() as u64,
        })
    }
}
