//! Command reports with canonical serialization.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// Input name to content hash.
    pub inputs: BTreeMap<String, String>,
    /// False whenever the result depends on an incomplete window.
    pub exact: bool,
    pub payload: serde_json::Value,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, inputs: BTreeMap<String, String>, exact: bool, payload: impl Serialize) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            exact,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// Pretty JSON with object keys sorted, so identical inputs give identical bytes.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }
}
