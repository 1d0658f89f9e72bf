//! Structured outcome of a verification run.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// One checked identity. `pass` holds iff `residual <= params["tol"]`;
/// exact checks use tolerance 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub residual: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            params: BTreeMap::new(),
            residual: f64::NAN,
            pass: false,
            runtime_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.params.insert(key.to_string(), v);
    }

    /// Closes the report with a tolerance test.
    pub fn within(mut self, residual: f64, tol: f64) -> Self {
        self.set("tol", tol);
        self.residual = residual;
        self.pass = residual <= tol;
        self
    }

    /// Closes an exact check; residual must be exactly zero.
    pub fn exact(self, residual: f64) -> Self {
        self.within(residual, 0.0)
    }

    /// Closes a check decided by a predicate rather than a magnitude.
    pub fn verdict(self, ok: bool) -> Self {
        self.exact(if ok { 0.0 } else { 1.0 })
    }

    pub fn tolerance(&self) -> Option<f64> {
        self.params.get("tol").and_then(Value::as_f64)
    }
}

/// Runs `f` and stores its wall time on the returned report.
pub fn timed<F: FnOnce() -> Report>(f: F) -> Report {
    let start = Instant::now();
    let mut r = f();
    r.runtime_ms = Some(start.elapsed().as_millis() as u64);
    r
}

/// Versioned top-level document emitted with `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool_version: String,
    pub reports: Vec<Report>,
}

impl ReportDocument {
    pub fn new(reports: Vec<Report>) -> Self {
        ReportDocument {
            schema: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            reports,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_within_tolerance() {
        assert!(Report::new("a").within(1e-10, 1e-9).pass);
        assert!(!Report::new("a").within(1e-8, 1e-9).pass);
        assert!(!Report::new("a").within(f64::NAN, 1e-9).pass);
        assert!(Report::new("a").exact(0.0).pass);
        assert!(!Report::new("a").verdict(false).pass);
        assert_eq!(Report::new("a").exact(0.0).tolerance(), Some(0.0));
    }

    #[test]
    fn json_round_trip() {
        let doc = ReportDocument::new(vec![Report::new("x").param("k", 3).within(0.5, 1.0)]);
        let s = serde_json::to_string(&doc).unwrap();
        assert!(!s.contains("runtime_ms"));
        let back: ReportDocument = serde_json::from_str(&s).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.schema, 1);
    }
}
