//! Theorem reports: both sides of a relation, a verdict and provenance.

use serde::{Serialize, Serializer};
use serde_json::json;
use sha2::{Digest, Sha256};

/// An integer or `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Value(pub Option<i64>);

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str("-inf"),
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "-inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails { witness: serde_json::Value },
    NotApplicable { reason: String },
    Inconclusive { reason: String },
    /// Data collected for an open question; no claim either way.
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    /// SHA-256 of the canonical inputs.
    pub inputs: String,
    pub left: Value,
    pub relation: String,
    pub right: Value,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub notes: Vec<String>,
    /// Some input profile was asserted rather than computed.
    pub tainted: bool,
    /// Depends on randomized coordinates.
    pub probabilistic: bool,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        matches!(self.verdict, Verdict::Fails { .. })
    }

    pub fn note(mut self, s: impl Into<String>) -> TheoremReport {
        self.notes.push(s.into());
        self
    }

    /// One-line summary used by the CLI and the acceptance suite.
    pub fn line(&self) -> String {
        let v = match &self.verdict {
            Verdict::Holds => "holds".to_string(),
            Verdict::Fails { .. } => "FAILS".to_string(),
            Verdict::NotApplicable { reason } => format!("n/a ({reason})"),
            Verdict::Inconclusive { reason } => format!("inconclusive ({reason})"),
            Verdict::Recorded => "recorded".to_string(),
        };
        format!("{}: {} {} {} -> {}", self.theorem, self.left, self.relation, self.right, v)
    }
}

pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

/// Builds reports sharing one inputs digest and provenance.
#[derive(Clone, Debug)]
pub struct Reporter {
    pub inputs: String,
    pub tainted: bool,
    pub probabilistic: bool,
}

impl Reporter {
    fn make(&self, theorem: &str, left: Option<i64>, relation: &str, right: Option<i64>, verdict: Verdict) -> TheoremReport {
        TheoremReport {
            theorem: theorem.into(),
            inputs: self.inputs.clone(),
            left: Value(left),
            relation: relation.into(),
            right: Value(right),
            verdict,
            notes: Vec::new(),
            tainted: self.tainted,
            probabilistic: self.probabilistic,
        }
    }

    fn witness(&self, left: Option<i64>, right: Option<i64>) -> serde_json::Value {
        json!({ "inputs": self.inputs, "left": Value(left), "right": Value(right) })
    }

    pub fn leq(&self, theorem: &str, left: Option<i64>, right: Option<i64>) -> TheoremReport {
        let v = if left <= right {
            Verdict::Holds
        } else {
            Verdict::Fails {
                witness: self.witness(left, right),
            }
        };
        self.make(theorem, left, "<=", right, v)
    }

    pub fn eq(&self, theorem: &str, left: Option<i64>, right: Option<i64>) -> TheoremReport {
        let v = if left == right {
            Verdict::Holds
        } else {
            Verdict::Fails {
                witness: self.witness(left, right),
            }
        };
        self.make(theorem, left, "=", right, v)
    }

    /// `premise => left = right`.
    pub fn implies_eq(&self, theorem: &str, premise: bool, why_not: &str, left: Option<i64>, right: Option<i64>) -> TheoremReport {
        if !premise {
            return self.make(
                theorem,
                left,
                "=",
                right,
                Verdict::NotApplicable {
                    reason: why_not.into(),
                },
            );
        }
        self.eq(theorem, left, right)
    }

    /// `premise => conclusion`, with the values that decide the conclusion.
    pub fn implies(
        &self,
        theorem: &str,
        premise: bool,
        why_not: &str,
        conclusion: bool,
        left: Option<i64>,
        right: Option<i64>,
    ) -> TheoremReport {
        let v = if !premise {
            Verdict::NotApplicable {
                reason: why_not.into(),
            }
        } else if conclusion {
            Verdict::Holds
        } else {
            Verdict::Fails {
                witness: self.witness(left, right),
            }
        };
        self.make(theorem, left, "=>", right, v)
    }

    pub fn record(&self, theorem: &str, left: Option<i64>, relation: &str, right: Option<i64>) -> TheoremReport {
        self.make(theorem, left, relation, right, Verdict::Recorded)
    }

    pub fn not_applicable(&self, theorem: &str, reason: &str) -> TheoremReport {
        self.make(
            theorem,
            None,
            "",
            None,
            Verdict::NotApplicable {
                reason: reason.into(),
            },
        )
    }
}

pub fn any_fails(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| r.fails())
}

pub(crate) fn add(x: Option<i64>, c: i64) -> Option<i64> {
    x.map(|v| v + c)
}
