//! Reports: one entry per check plus named outputs, in text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use hvdc_core::{CheckResult, Verdict};

use crate::doc::Document;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckEntry {
    pub name: String,
    pub verdict: String,
    pub detail: String,
    /// A self-contained document holding the counterexample cell `witness`
    /// and its verticals as the context `witness`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Document>,
}

impl CheckEntry {
    pub fn holds(&self) -> bool {
        self.verdict != "fails"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: Vec<String>,
    pub checks: Vec<CheckEntry>,
    pub outputs: BTreeMap<String, Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            command,
            checks: Vec::new(),
            outputs: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.checks.push(CheckEntry {
            name: name.into(),
            verdict: verdict.to_string(),
            detail: detail.into(),
            witness: None,
        });
    }

    pub fn check_bool(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let v = if ok { Verdict::HoldsExact } else { Verdict::Fails };
        self.check(name, v, detail);
    }

    pub fn check_result(&mut self, name: impl Into<String>, r: &CheckResult, witness: Option<Document>) {
        self.checks.push(CheckEntry {
            name: name.into(),
            verdict: r.verdict.to_string(),
            detail: r.detail.clone(),
            witness,
        });
    }

    pub fn output(&mut self, key: impl Into<String>, v: impl Serialize) {
        self.outputs.insert(key.into(), serde_json::to_value(v).expect("outputs serialize"));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(CheckEntry::holds)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command.join(" "));
        for c in &self.checks {
            let _ = writeln!(s, "check {}: {}", c.name, c.verdict);
            if !c.detail.is_empty() {
                let _ = writeln!(s, "  {}", c.detail);
            }
            if let Some(w) = &c.witness {
                let _ = write!(s, "  witness:\n{}", indent(&w.to_json(), 4));
            }
        }
        for (k, v) in &self.outputs {
            match v {
                Value::String(t) => {
                    let _ = writeln!(s, "{k}: {t}");
                }
                _ => {
                    let body = serde_json::to_string_pretty(v).expect("values serialize");
                    let _ = writeln!(s, "{k}:\n{}", indent(&body, 2).trim_end());
                }
            }
        }
        let _ = writeln!(s, "elapsed: {} ms", self.elapsed_ms);
        s
    }
}

fn indent(text: &str, n: usize) -> String {
    let pad = " ".repeat(n);
    text.lines().map(|l| format!("{pad}{l}\n")).collect()
}
