use std::collections::BTreeMap;
use std::fmt;

use exact_core::CheckOutcome;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be evaluated (singular point, size limit, ...).
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The identity being verified, as a formula.
    pub identity: String,
    pub status: Status,
    /// Worst deviation; `null` in JSON when infinite.
    pub deviation: Option<f64>,
    pub detail: String,
}

impl CheckRecord {
    pub fn from_result<E: fmt::Display>(name: String, identity: &str, result: Result<CheckOutcome, E>) -> Self {
        let identity = identity.to_string();
        match result {
            Ok(o) => Self {
                name,
                identity,
                status: if o.passed { Status::Pass } else { Status::Fail },
                deviation: o.deviation.is_finite().then_some(o.deviation),
                detail: o.detail,
            },
            Err(e) => Self { name, identity, status: Status::Error, deviation: None, detail: e.to_string() },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }

    pub fn worst_deviation(&self) -> Option<f64> {
        self.checks.iter().try_fold(0.0f64, |acc, c| c.deviation.map(|d| acc.max(d)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for (k, v) in &self.params {
            writeln!(f, "  {k} = {v}")?;
        }
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let dev = c.deviation.map_or("inf".to_string(), |d| format!("{d:.3e}"));
            writeln!(f, "{status:5} {} [dev {dev}] {}", c.name, c.detail)?;
        }
        let total = self.checks.len();
        let bad = self.failures().count();
        write!(f, "{}: {} of {total} checks passed", if bad == 0 { "PASS" } else { "FAIL" }, total - bad)
    }
}
