//! Output envelope shared by every subcommand.

use std::collections::BTreeMap;

use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// What a subcommand produced: a JSON payload, integer counts and the
/// human-readable rendering.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub result: serde_json::Value,
    pub counts: BTreeMap<String, u64>,
    pub toolversion: &'static str,
    pub schema: u32,
    #[serde(skip)]
    pub text: String,
    /// Set when the command found a failure that should end the process
    /// with status 1.
    #[serde(skip)]
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            result: serde_json::Value::Null,
            counts: BTreeMap::new(),
            toolversion: env!("CARGO_PKG_VERSION"),
            schema: SCHEMA,
            text: String::new(),
            failure: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Report {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn count(mut self, key: &str, value: usize) -> Report {
        self.counts.insert(key.to_string(), value as u64);
        self
    }

    pub fn result<T: Serialize>(mut self, value: &T) -> anyhow::Result<Report> {
        self.result = serde_json::to_value(value)?;
        Ok(self)
    }

    pub fn text(mut self, text: String) -> Report {
        self.text = text;
        self
    }

    pub fn render(&self, json: bool) -> anyhow::Result<String> {
        if json {
            let mut s = serde_json::to_string_pretty(self)?;
            s.push('\n');
            Ok(s)
        } else {
            Ok(self.text.clone())
        }
    }
}

/// Joins Pauli strings or labels with single spaces.
pub fn words<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
