//! JSON run reports. Output is deterministic: sections are keyed maps with
//! sorted keys, and numbers use the shortest round-trip representation.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::config::Config;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: String,
    pub config: Config,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub sections: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NoRoot,
}

impl Report {
    pub fn new(command: &str, input: &str, config: &Config) -> Self {
        Self {
            tool: "maxsurf",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input: input.to_string(),
            config: config.clone(),
            verdict: Verdict::Pass,
            error: None,
            sections: BTreeMap::new(),
        }
    }

    pub fn section(&mut self, name: &str, value: Value) {
        self.sections.insert(name.to_string(), value);
    }

    pub fn fail(&mut self, verdict: Verdict, error: impl ToString) {
        self.verdict = verdict;
        self.error = Some(error.to_string());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// JSON has no infinity; unbounded radii are written as `null`.
pub fn radius(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::Null
    }
}
