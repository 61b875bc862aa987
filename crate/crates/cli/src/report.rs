//! Report document: one per invocation, renderable as aligned text or as
//! JSON with a stable schema. The machine form round-trips losslessly.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Exit code contract: 0 success, 1 negative check verdict, 2 input error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub seed: u64,
    pub items: Vec<Item>,
    pub verdict: String,
    pub exit_code: i32,
    /// File-format output produced by the command (quotient, export,
    /// normalize5), printed verbatim after the report in text mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub artifact: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub name: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub witness: Option<String>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            seed,
            items: Vec::new(),
            verdict: String::new(),
            exit_code: EXIT_OK,
            artifact: None,
        }
    }

    pub fn push(&mut self, name: &str, value: impl Into<String>) {
        self.items.push(Item {
            name: name.to_string(),
            value: value.into(),
            witness: None,
        });
    }

    pub fn push_with_witness(&mut self, name: &str, value: impl Into<String>, witness: String) {
        self.items.push(Item {
            name: name.to_string(),
            value: value.into(),
            witness: Some(witness),
        });
    }

    pub fn finish(&mut self, verdict: impl Into<String>, exit_code: i32) {
        self.verdict = verdict.into();
        self.exit_code = exit_code;
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .items
            .iter()
            .map(|i| i.name.len())
            .max()
            .unwrap_or(0)
            .max("verdict".len());
        for item in &self.items {
            let mut line = format!("{:width$}  {}", item.name, item.value, width = width);
            if let Some(w) = &item.witness {
                if w.contains('\n') {
                    line.push('\n');
                    for l in w.lines() {
                        line.push_str(&format!("{:width$}    {l}\n", "", width = width));
                    }
                    line.pop();
                } else {
                    line.push_str(&format!("  [{w}]"));
                }
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "{:width$}  {}\n",
            "verdict",
            self.verdict,
            width = width
        ));
        if let Some(artifact) = &self.artifact {
            out.push('\n');
            out.push_str(artifact);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
