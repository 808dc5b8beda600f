use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A concrete counterexample: which case failed and what was observed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

/// Outcome of one check. `advisory` reports never fail a suite run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub seed: Option<u64>,
    pub millis: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub advisory: bool,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Whether this report counts against a suite run.
    pub fn is_blocking_failure(&self) -> bool {
        !self.passed() && !self.advisory
    }

    pub fn summary_line(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{verdict} {} ({}) cases={}", self.name, params.join(" "), self.cases);
        if let Some(seed) = self.seed {
            line.push_str(&format!(" seed={seed}"));
        }
        if let Some(ms) = self.millis {
            line.push_str(&format!(" millis={ms}"));
        }
        if self.advisory {
            line.push_str(" [probe]");
        }
        line
    }
}

/// Accumulates cases and failures while a check runs.
pub(crate) struct ReportBuilder {
    name: &'static str,
    params: Map<String, Value>,
    seed: Option<u64>,
    cases: u64,
    failures: Vec<Failure>,
    observations: Vec<String>,
    advisory: bool,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(name: &'static str) -> Self {
        ReportBuilder {
            name,
            params: Map::new(),
            seed: None,
            cases: 0,
            failures: Vec::new(),
            observations: Vec::new(),
            advisory: false,
            start: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn advisory(mut self) -> Self {
        self.advisory = true;
        self
    }

    /// Records one case; `ok == false` files a failure built lazily.
    pub fn check(&mut self, ok: bool, case: impl FnOnce() -> (String, String)) -> bool {
        self.cases += 1;
        if !ok {
            let (case, detail) = case();
            self.failures.push(Failure { case, detail });
        }
        ok
    }

    pub fn observe(&mut self, note: String) {
        self.observations.push(note);
    }

    pub fn finish(self) -> CheckReport {
        let verdict = if self.failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        CheckReport {
            name: self.name.to_string(),
            params: self.params,
            verdict,
            cases: self.cases,
            failures: self.failures,
            seed: self.seed,
            millis: Some(self.start.elapsed().as_millis() as u64),
            observations: self.observations,
            advisory: self.advisory,
        }
    }
}
