//! Suite report structures; deterministic for a fixed config and seed.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub identity: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    /// Comparison verdicts report mismatches without failing the suite.
    pub comparison: bool,
}

impl Verdict {
    pub fn hard(identity: impl Into<String>, pass: bool) -> Self {
        Verdict { identity: identity.into(), pass, detail: None, comparison: false }
    }

    pub fn hard_detail(identity: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            identity: identity.into(),
            pass,
            detail: Some(detail.into()),
            comparison: false,
        }
    }

    pub fn compare(identity: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            identity: identity.into(),
            pass,
            detail: Some(detail.into()),
            comparison: true,
        }
    }

    pub fn info(identity: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict {
            identity: identity.into(),
            pass: true,
            detail: Some(detail.into()),
            comparison: true,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseReport {
    pub input: String,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<serde_json::Value>,
}

impl CaseReport {
    pub fn new(input: impl Into<String>) -> Self {
        CaseReport { input: input.into(), verdicts: Vec::new(), counterexample: None }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    /// The identity family the suite exercises, in words.
    pub statement: String,
    pub seed: u64,
    pub max_n: u32,
    pub cases: Vec<CaseReport>,
    /// Hard verdicts that failed.
    pub failures: usize,
    /// Comparison verdicts that disagreed.
    pub mismatches: usize,
    pub passed: bool,
}

impl SuiteReport {
    pub fn assemble(
        suite: impl Into<String>,
        statement: impl Into<String>,
        seed: u64,
        max_n: u32,
        cases: Vec<CaseReport>,
    ) -> Self {
        let mut failures = 0;
        let mut mismatches = 0;
        for c in &cases {
            for v in &c.verdicts {
                if !v.pass {
                    if v.comparison {
                        mismatches += 1;
                    } else {
                        failures += 1;
                    }
                }
            }
        }
        SuiteReport {
            suite: suite.into(),
            statement: statement.into(),
            seed,
            max_n,
            cases,
            failures,
            mismatches,
            passed: failures == 0,
        }
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        out.push(format!(
            "suite {}: {} ({} cases, {} failures, {} mismatches)",
            self.suite,
            if self.passed { "pass" } else { "FAIL" },
            self.cases.len(),
            self.failures,
            self.mismatches
        ));
        for c in &self.cases {
            for v in &c.verdicts {
                if !v.pass {
                    out.push(format!(
                        "  {} [{}] {}: {}",
                        if v.comparison { "mismatch" } else { "FAIL" },
                        c.input,
                        v.identity,
                        v.detail.as_deref().unwrap_or("")
                    ));
                }
            }
        }
        out
    }
}
