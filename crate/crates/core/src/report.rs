//! Structured suite reports with a stable JSON schema.
//!
//! ```json
//! {"schema": 1, "suite": "...", "field": "q", "seed": 0, "params": {...},
//!  "claims": [{"name": "...", "claim": "...", "status": "pass", "witness": {...}}]}
//! ```
//!
//! Witness values are text-grammar strings. Maps are ordered, so equal runs serialize to
//! identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::field::Field;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported data without a verdict.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub claim: String,
    pub status: Status,
    pub witness: BTreeMap<String, String>,
}

impl Claim {
    pub fn new(name: impl Into<String>, claim: impl Into<String>, status: Status) -> Claim {
        Claim { name: name.into(), claim: claim.into(), status, witness: BTreeMap::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Claim {
        self.witness.insert(key.into(), value.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub field: String,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(suite: impl Into<String>, field: Field, seed: u64) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            suite: suite.into(),
            field: field.to_string(),
            seed,
            params: BTreeMap::new(),
            claims: Vec::new(),
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Report {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn push(&mut self, claim: Claim) -> &mut Claim {
        self.claims.push(claim);
        self.claims.last_mut().unwrap()
    }

    /// Adds a pass/fail claim and returns its verdict.
    pub fn check(&mut self, name: &str, claim: &str, ok: bool) -> &mut Claim {
        self.push(Claim::new(name, claim, Status::from_bool(ok)))
    }

    pub fn info(&mut self, name: &str, claim: &str) -> &mut Claim {
        self.push(Claim::new(name, claim, Status::Info))
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    /// Concatenates the claims of `other`, prefixing their names with its suite name.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.claims {
            c.name = format!("{}/{}", other.suite, c.name);
            self.claims.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (field {}, seed {})", self.suite, self.field, self.seed);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.claims {
            let _ = writeln!(out, "{} {}: {}", c.status.label(), c.name, c.claim);
            for (k, v) in &c.witness {
                let _ = writeln!(out, "    {k} = {v}");
            }
        }
        let verdict = if self.passed() { "all claims pass" } else { "some claims fail" };
        let _ = writeln!(out, "{verdict}");
        out
    }
}

/// `[a, b, c]` rendering for witness values.
pub fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_verdict() {
        let mut r = Report::new("demo", Field::Prime(7), 3).param("b", 2);
        r.check("one", "1 = 1", true).witness.insert("x".into(), "y".into());
        r.info("data", "something");
        assert!(r.passed());
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        r.check("two", "1 = 2", false);
        assert!(!r.passed());
        assert!(r.to_text().contains("FAIL two: 1 = 2"));
    }
}
