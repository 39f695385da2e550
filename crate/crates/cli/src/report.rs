//! Machine-readable command reports.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, value: None, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check { name: name.into(), status: Status::Fail, value: None, witness: Some(witness) }
    }

    /// Pass when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, witness: Option<Value>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    pub fn with_value(mut self, value: Value) -> Self {
        self.value = Some(value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub status: Status,
    pub checks: Vec<Check>,
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Self {
        let status = Status::from_bool(checks.iter().all(|c| c.status == Status::Pass));
        Report { status, checks, timing_ms: None }
    }

    /// A failed report for an input or precondition error.
    pub fn error(message: impl Into<String>) -> Self {
        Report::new(vec![Check::fail("input", Value::String(message.into()))])
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("status: {}\n", self.status.label());
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}", c.status.label(), c.name));
            if let Some(v) = &c.value {
                out.push_str(&format!(" = {}", compact(v)));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!("      witness: {}\n", compact(w)));
            }
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("timing_ms: {ms}\n"));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
