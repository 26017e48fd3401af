//! The JSON report every command emits.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One asserted metric.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub metrics: BTreeMap<String, i64>,
    pub artifacts: Vec<String>,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl Report {
    pub fn info(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: Status::Info,
            metrics: BTreeMap::new(),
            artifacts: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_owned(),
            details: None,
        }
    }

    pub fn metric(mut self, name: &str, value: impl TryInto<i64>) -> Self {
        self.metrics.insert(name.to_owned(), value.try_into().unwrap_or(i64::MAX));
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

/// Collects asserted metrics and turns them into a pass/fail report.
#[derive(Default)]
pub struct Checks {
    checks: Vec<Check>,
}

impl Checks {
    pub fn expect(&mut self, name: &str, expected: i64, actual: impl TryInto<i64>) {
        self.checks.push(Check {
            name: name.to_owned(),
            expected,
            actual: actual.try_into().unwrap_or(i64::MAX),
        });
    }

    pub fn expect_true(&mut self, name: &str, actual: bool) {
        self.expect(name, 1, i64::from(actual));
    }

    pub fn extend(&mut self, other: Checks) {
        self.checks.extend(other.checks);
    }

    pub fn into_report(self, command: &str) -> Report {
        let failed: Vec<&Check> = self.checks.iter().filter(|c| !c.holds()).collect();
        let mut report = Report::info(command);
        report.status = if failed.is_empty() { Status::Pass } else { Status::Fail };
        for c in &self.checks {
            report.metrics.insert(c.name.clone(), c.actual);
        }
        report.details = Some(serde_json::json!({
            "checks": self.checks.len(),
            "failed": failed,
        }));
        report
    }
}
