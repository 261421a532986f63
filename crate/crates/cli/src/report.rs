use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Machine-readable output of one command invocation.
///
/// Output keys are flattened into the top level next to `command`,
/// `inputs` and `verdicts`. Maps are ordered by key, so emission is stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub inputs: Map<String, Value>,
    #[serde(flatten)]
    pub outputs: Map<String, Value>,
    pub verdicts: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
}

impl Timings {
    pub fn from_duration(d: Duration) -> Self {
        Timings {
            total_ms: d.as_secs_f64() * 1e3,
        }
    }
}

impl ReportRecord {
    pub fn new(command: &str) -> Self {
        ReportRecord {
            command: command.to_string(),
            inputs: Map::new(),
            outputs: Map::new(),
            verdicts: Vec::new(),
            timings: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) {
        self.outputs.insert(key.to_string(), to_value(value));
    }

    pub fn verdict(&mut self, v: impl Into<String>) {
        self.verdicts.push(v.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }
}

fn to_value(v: impl Serialize) -> Value {
    // non-finite floats become null
    serde_json::to_value(v).unwrap_or(Value::Null)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_json() {
        let mut r = ReportRecord::new("verify").input("beta", 0.8).input("case", "T4b");
        r.output("endpoint_gap_plus", 0.125);
        r.output("worst", serde_json::json!({"theta": 0.0, "re": 1.5}));
        r.verdict("Contained");
        r.timings = Some(Timings { total_ms: 3.5 });
        let text = r.to_json();
        let back: ReportRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn outputs_sit_at_top_level_in_key_order() {
        let mut r = ReportRecord::new("constants");
        r.output("U", 2.0);
        r.output("L", 0.5);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["U"], 2.0);
        assert!(v.get("timings").is_none());
        let text = r.to_json();
        assert!(text.find("\"L\"").unwrap() < text.find("\"U\"").unwrap());
    }

    #[test]
    fn non_finite_values_become_null() {
        let mut r = ReportRecord::new("x");
        r.output("gap", f64::NAN);
        assert!(r.to_json().contains("\"gap\": null"));
    }
}
