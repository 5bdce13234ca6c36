use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
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
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Outcome of one command. Exact values are rendered as strings so that
/// identical runs produce identical bytes; timing goes to stderr instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub values: Vec<(String, String)>,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

impl RunReport {
    pub fn new(command: impl Into<String>, seed: Option<u64>) -> Self {
        RunReport { command: command.into(), seed, checks: Vec::new(), values: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), status: Status::from_bool(ok), detail });
    }

    pub fn error(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Error, detail: Some(detail.into()) });
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl ToString) {
        self.values.push((key.into(), value.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "seed: {seed}").unwrap();
        }
        for c in &self.checks {
            match &c.detail {
                Some(d) => writeln!(out, "[{}] {}: {d}", c.status.label(), c.name).unwrap(),
                None => writeln!(out, "[{}] {}", c.status.label(), c.name).unwrap(),
            }
        }
        for (k, v) in &self.values {
            writeln!(out, "{k}: {v}").unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "result: {verdict}").unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Json<'a> {
            command: &'a str,
            seed: Option<u64>,
            passed: bool,
            checks: &'a [Check],
            values: serde_json::Map<String, serde_json::Value>,
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let json = Json {
            command: &self.command,
            seed: self.seed,
            passed: self.passed(),
            checks: &self.checks,
            values,
        };
        serde_json::to_string_pretty(&json).expect("reports serialize") + "\n"
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.render_json()
        } else {
            self.render_text()
        }
    }
}
