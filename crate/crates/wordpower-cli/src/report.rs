//! The structured output document every subcommand prints.
//!
//! A report always carries the same four fields in the same order, so scripted
//! consumers can parse any subcommand's output with one schema. The JSON
//! rendering round-trips losslessly; the text rendering is a flat, keyed view
//! of the same data for reading in a terminal.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One invocation's complete output: the echoed inputs, the result payload,
/// and any qualifiers on how far the result can be trusted.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub caveats: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Self {
            command: command.to_string(),
            inputs,
            result,
            caveats: Vec::new(),
        }
    }

    pub fn caveat(mut self, text: impl Into<String>) -> Self {
        self.caveats.push(text.into());
        self
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("a report serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        render_value(&mut out, "inputs", &self.inputs, 0);
        render_value(&mut out, "result", &self.result, 0);
        if self.caveats.is_empty() {
            out.push_str("caveats: []\n");
        } else {
            out.push_str("caveats:\n");
            for caveat in &self.caveats {
                out.push_str(&format!("  - {caveat}\n"));
            }
        }
        out
    }
}

fn render_value(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                render_value(out, k, v, indent + 1);
            }
        }
        Value::String(text) if text.contains('\n') => {
            out.push_str(&format!("{pad}{key}: |\n"));
            for line in text.lines() {
                out.push_str(&format!("{pad}  {line}\n"));
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let rendered: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", rendered.join(", ")));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                render_value(out, &i.to_string(), item, indent + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(text) => text.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_rendering_round_trips() {
        let report = Report::new(
            "pex",
            json!({ "word": "aabb", "max_exp": 6 }),
            json!({ "observed_pex": [1], "complete": "proven-complete" }),
        )
        .caveat("example caveat");
        let parsed: Report = serde_json::from_str(&report.render_json()).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn text_rendering_keys_every_line() {
        let report = Report::new(
            "solve",
            json!({ "system": "vars:x\nconsts:\nx = x\n" }),
            json!({ "status": "sat", "witness": null }),
        );
        let text = report.render_text();
        assert!(text.starts_with("command: solve\n"));
        assert!(text.contains("  system: |\n"));
        assert!(text.contains("    vars:x\n"));
        assert!(text.contains("  status: sat\n"));
        assert!(text.ends_with("caveats: []\n"));
    }
}
