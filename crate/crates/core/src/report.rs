//! Verification reports and their JSON/CSV forms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One verified property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub max_abs_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Case {
    /// A case passing iff `residual < tol`. Non-finite residuals fail.
    pub fn new(name: impl Into<String>, residual: f64, tol: f64, samples: usize, seed: u64) -> Self {
        let max_abs_residual = if residual.is_nan() { f64::MAX } else { residual.min(f64::MAX) };
        Case { name: name.into(), max_abs_residual, tol, pass: max_abs_residual < tol, samples, seed, detail: None }
    }

    /// A case that could not be evaluated.
    pub fn error(name: impl Into<String>, err: &crate::Error, tol: f64, samples: usize, seed: u64) -> Self {
        Case::new(name, f64::MAX, tol, samples, seed).with_detail(err.to_string())
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub env: BTreeMap<String, String>,
    pub cases: Vec<Case>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), ..Default::default() }
    }

    pub fn env(mut self, key: &str, value: impl ToString) -> Self {
        self.env.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
        for (k, v) in other.env {
            self.env.entry(k).or_insert(v);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// `pass` recomputed from residual and tolerance agrees with the stored flag.
    pub fn is_consistent(&self) -> bool {
        self.cases.iter().all(|c| c.pass == (c.max_abs_residual < c.tol))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One row per case: `name,max_abs_residual,tol,pass,samples,seed`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,max_abs_residual,tol,pass,samples,seed\n");
        for c in &self.cases {
            let name = if c.name.contains([',', '"']) {
                format!("\"{}\"", c.name.replace('"', "\"\""))
            } else {
                c.name.clone()
            };
            let _ = writeln!(out, "{name},{:?},{:?},{},{},{}", c.max_abs_residual, c.tol, c.pass, c.samples, c.seed);
        }
        out
    }
}
