//! The JSON report printed by every subcommand.

use std::time::Duration;

use serde_json::{json, Value};

pub const SCHEMA: u64 = 1;

/// A finished report. Keys come out sorted because `serde_json::Map` is
/// ordered, so two runs on the same inputs differ only in `timing`.
pub struct Report {
    pub command: Vec<String>,
    pub inputs_digest: String,
    pub results: Value,
    pub pass: bool,
}

impl Report {
    pub fn render(&self, elapsed: Duration) -> String {
        let doc = json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "pass": self.pass,
            "results": self.results,
            "timing": { "elapsed_ms": elapsed.as_secs_f64() * 1000.0 },
        });
        serde_json::to_string_pretty(&doc).expect("report values serialize") + "\n"
    }
}
