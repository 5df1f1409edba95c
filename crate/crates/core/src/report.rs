//! Machine-readable reports: per-check verdicts, dimension tables and
//! matrices, serialized as versioned JSON. Identical jobs produce
//! byte-identical reports apart from the wall-clock field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub message: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub bounds: (usize, usize),
    pub checks: Vec<Check>,
    /// Dimension tables, matrices and other structured payloads, keyed
    /// by a stable name; `BTreeMap` keeps the serialization canonical.
    pub tables: BTreeMap<String, serde_json::Value>,
    /// Milliseconds per stage; excluded from the determinism contract.
    pub wall_clock_ms: BTreeMap<String, u128>,
}

impl Report {
    pub fn new(command: &str, bounds: (usize, usize)) -> Report {
        Report {
            schema: REPORT_SCHEMA,
            command: command.to_string(),
            bounds,
            checks: Vec::new(),
            tables: BTreeMap::new(),
            wall_clock_ms: BTreeMap::new(),
        }
    }

    pub fn check(&mut self, name: &str, verdict: Verdict, message: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            verdict,
            message: message.into(),
        });
    }

    pub fn pass(&mut self, name: &str, message: impl Into<String>) {
        self.check(name, Verdict::Pass, message);
    }

    pub fn fail(&mut self, name: &str, message: impl Into<String>) {
        self.check(name, Verdict::Fail, message);
    }

    pub fn assert(&mut self, name: &str, ok: bool, message: impl Into<String>) {
        self.check(name, if ok { Verdict::Pass } else { Verdict::Fail }, message);
    }

    pub fn table(&mut self, name: &str, value: serde_json::Value) {
        self.tables.insert(name.to_string(), value);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass)
    }

    /// Exit status contract: 0 all pass, 1 some verification failed.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    /// Human-readable rendering for standard output.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} (bounds N={}, D={})\n",
            self.command, self.bounds.0, self.bounds.1
        ));
        for c in &self.checks {
            let tag = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "????",
            };
            out.push_str(&format!("  [{tag}] {}: {}\n", c.name, c.message));
        }
        for (name, value) in &self.tables {
            out.push_str(&format!("  {name} = {value}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

/// A bigraded dimension table as a canonical JSON value.
pub fn dims_json(dims: &BTreeMap<(usize, i64), usize>) -> serde_json::Value {
    serde_json::Value::Array(
        dims.iter()
            .map(|(&(n, d), &v)| serde_json::json!({ "n": n, "delta": d, "dim": v }))
            .collect(),
    )
}

/// A matrix as a canonical JSON value, entries formatted exactly.
pub fn matrix_json(m: &crate::matrix::Matrix) -> serde_json::Value {
    let f = m.field;
    serde_json::Value::Array(
        (0..m.rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..m.cols)
                        .map(|j| serde_json::Value::String(f.format(m.get(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}
