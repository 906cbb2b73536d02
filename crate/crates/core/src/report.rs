//! Structured outcomes of named verification checks, and the versioned JSON
//! report they aggregate into. These types are the tool's public contract:
//! the CLI serializes them verbatim and tests round-trip them.

use serde::{Deserialize, Serialize};

/// Outcome of a single check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CheckStatus {
    /// Every expected value matched and every certificate was valid.
    #[serde(rename = "PASS")]
    Pass,
    /// A computed value disagreed with the expectation; evidence is attached.
    #[serde(rename = "FAIL")]
    Fail,
    /// The check did not apply under this configuration.
    #[serde(rename = "SKIP")]
    Skip,
    /// A precondition of the computation failed (e.g. the chosen pair of
    /// forms is not regular), so the expected values are meaningless here.
    #[serde(rename = "DEGENERATE")]
    Degenerate,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
            CheckStatus::Degenerate => "DEGENERATE",
        })
    }
}

/// Result of one named check: expectations vs. computed values plus free-form
/// evidence lines (certificate summaries, witnesses, notes).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// Citation and verbatim quote this check certifies; filled from the
    /// registry when the check is run.
    #[serde(default)]
    pub paper_anchor: String,
    pub status: CheckStatus,
    /// `(key, value)` pairs the check promised.
    pub expected: Vec<(String, String)>,
    /// `(key, value)` pairs actually computed.
    pub computed: Vec<(String, String)>,
    /// Free-form evidence: certificate summaries, witnesses, variant notes.
    pub evidence: Vec<String>,
    /// Human-readable description of the quartic(s) the check ran on.
    #[serde(default)]
    pub quartic: String,
    #[serde(default)]
    pub seed: u64,
    pub runtime_ms: u64,
}

impl CheckResult {
    pub fn new(id: &str) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            paper_anchor: String::new(),
            status: CheckStatus::Pass,
            expected: Vec::new(),
            computed: Vec::new(),
            evidence: Vec::new(),
            quartic: String::new(),
            seed: 0,
            runtime_ms: 0,
        }
    }

    /// Record an expected/computed pair and downgrade the status to FAIL on
    /// mismatch. Returns whether the pair matched.
    pub fn record<T: std::fmt::Display + PartialEq>(
        &mut self,
        key: &str,
        expected: T,
        computed: T,
    ) -> bool {
        let ok = expected == computed;
        self.expected.push((key.to_string(), expected.to_string()));
        self.computed.push((key.to_string(), computed.to_string()));
        if !ok {
            self.status = CheckStatus::Fail;
        }
        ok
    }

    /// Record a bare computed value that has no pinned expectation.
    pub fn note_computed<T: std::fmt::Display>(&mut self, key: &str, computed: T) {
        self.computed.push((key.to_string(), computed.to_string()));
    }

    pub fn push_evidence(&mut self, line: impl Into<String>) {
        self.evidence.push(line.into());
    }

    /// Mark the whole check degenerate, keeping any evidence collected.
    pub fn degenerate(&mut self, why: impl Into<String>) {
        self.status = CheckStatus::Degenerate;
        self.evidence.push(why.into());
    }

    /// Copy of the result with the runtime zeroed, for byte-identical
    /// determinism comparisons.
    pub fn without_runtime(&self) -> CheckResult {
        let mut c = self.clone();
        c.runtime_ms = 0;
        c
    }
}

/// Aggregated report over a set of checks, sorted by id.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    /// Schema version of this report format.
    pub version: u32,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
    /// `PASS` iff no result is `FAIL`.
    pub overall: CheckStatus,
}

/// Echo of the configuration a report was produced under.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportConfig {
    pub quartic: String,
    pub seed: u64,
    pub n_random: u32,
    pub primes: u32,
    pub exact: bool,
    pub cost: String,
}

impl Report {
    pub fn new(config: ReportConfig, mut results: Vec<CheckResult>) -> Report {
        results.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = if results.iter().any(|r| r.status == CheckStatus::Fail) {
            CheckStatus::Fail
        } else {
            CheckStatus::Pass
        };
        Report {
            version: 1,
            config,
            results,
            overall,
        }
    }
}
