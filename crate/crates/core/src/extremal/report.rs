use serde::Serialize;
use serde_json::Value;

use super::Certificate;
use crate::spectra::AlphaValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Findings,
    Fail,
}

impl Status {
    /// The more severe of the two.
    pub fn and(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Findings => "FINDINGS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WinnerEntry {
    pub canonical: String,
    pub graph6: String,
    pub family_match: Vec<String>,
    pub lambda: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaEntry {
    pub n: usize,
    pub scope: String,
    pub alpha: AlphaValue,
    pub expected: Vec<String>,
    pub winners: Vec<WinnerEntry>,
    pub class_size: usize,
    pub runner_up: Option<f64>,
    pub margin: Option<f64>,
    pub max_residual: f64,
    pub max_trace_error: f64,
    pub verdict: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub wall_time: f64,
}

impl AlphaEntry {
    pub fn from_certificate(cert: &Certificate, expected: Vec<String>, verdict: Status, wall_time: f64) -> Self {
        Self {
            n: cert.class.n,
            scope: cert.class.scope.to_string(),
            alpha: cert.alpha.clone(),
            expected,
            winners: cert
                .winners
                .iter()
                .map(|w| WinnerEntry {
                    canonical: w.canonical.clone(),
                    graph6: w.graph6.clone(),
                    family_match: w.family_match.iter().map(|f| f.to_string()).collect(),
                    lambda: w.lambda,
                })
                .collect(),
            class_size: cert.evaluated_count,
            runner_up: cert.runner_up,
            margin: cert.margin(),
            max_residual: cert.max_residual,
            max_trace_error: cert.max_trace_error,
            verdict,
            note: None,
            wall_time,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Value,
    pub alpha_grid: Vec<AlphaValue>,
    pub status: Status,
    pub per_alpha: Vec<AlphaEntry>,
    pub findings: Vec<String>,
    pub details: Value,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every `wall_time` field removed, for reproducibility checks.
    pub fn to_json_without_timing(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        strip_key(&mut v, "wall_time");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

fn strip_key(v: &mut Value, key: &str) {
    match v {
        Value::Object(map) => {
            map.remove(key);
            map.values_mut().for_each(|x| strip_key(x, key));
        }
        Value::Array(items) => items.iter_mut().for_each(|x| strip_key(x, key)),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_severity() {
        assert_eq!(Status::Pass.and(Status::Findings), Status::Findings);
        assert_eq!(Status::Fail.and(Status::Findings), Status::Fail);
        assert_eq!(serde_json::to_string(&Status::Findings).unwrap(), "\"FINDINGS\"");
    }

    #[test]
    fn timing_is_stripped_recursively() {
        let mut v = serde_json::json!({"a": {"wall_time": 1.0, "b": [{"wall_time": 2.0, "c": 3}]}});
        strip_key(&mut v, "wall_time");
        assert_eq!(v, serde_json::json!({"a": {"b": [{"c": 3}]}}));
    }
}
