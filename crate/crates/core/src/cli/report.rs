use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use super::config::{Suite, SuiteConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of one verification case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub suite: Suite,
    pub family: Option<char>,
    pub rank: Option<usize>,
    pub p: Option<u64>,
    pub n: Option<u32>,
    pub weight: Option<Vec<i64>>,
    /// Remaining parameters, e.g. `wall=1`, `check=braid`, `d=-3`.
    pub case: String,
    pub passed: bool,
    /// Diagnostic data, present only on failure.
    pub witness: Option<String>,
}

impl CaseRecord {
    #[allow(clippy::type_complexity)]
    fn sort_key(
        &self,
    ) -> (
        Suite,
        Option<char>,
        Option<usize>,
        Option<u64>,
        Option<u32>,
        &str,
        Option<&[i64]>,
    ) {
        (
            self.suite,
            self.family,
            self.rank,
            self.p,
            self.n,
            self.case.as_str(),
            self.weight.as_deref(),
        )
    }

    pub fn system_label(&self) -> String {
        match (self.family, self.rank) {
            (Some(f), Some(r)) => format!("{f}{r}"),
            _ => "-".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Result of `verify-all`. Serializes without the wall-clock duration so
/// that structured output is reproducible byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub config: SuiteConfig,
    pub cases: Vec<CaseRecord>,
    pub totals: Totals,
    #[serde(skip)]
    pub duration: Duration,
}

impl RunReport {
    pub fn new(config: SuiteConfig, mut cases: Vec<CaseRecord>, duration: Duration) -> Self {
        cases.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let passed = cases.iter().filter(|c| c.passed).count();
        let totals = Totals {
            cases: cases.len(),
            passed,
            failed: cases.len() - passed,
        };
        RunReport {
            schema_version: SCHEMA_VERSION,
            config,
            cases,
            totals,
            duration,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-suite summary table followed by every failing case.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<14} {:>8} {:>8} {:>8}", "suite", "cases", "passed", "failed");
        for suite in Suite::ALL {
            let rows: Vec<&CaseRecord> = self.cases.iter().filter(|c| c.suite == suite).collect();
            if rows.is_empty() {
                continue;
            }
            let passed = rows.iter().filter(|c| c.passed).count();
            let _ = writeln!(
                out,
                "{:<14} {:>8} {:>8} {:>8}",
                suite.name(),
                rows.len(),
                passed,
                rows.len() - passed
            );
        }
        let _ = writeln!(
            out,
            "{:<14} {:>8} {:>8} {:>8}",
            "total", self.totals.cases, self.totals.passed, self.totals.failed
        );
        for c in self.failures() {
            let _ = writeln!(
                out,
                "FAIL {} {} p={} n={} weight={} {}: {}",
                c.suite,
                c.system_label(),
                c.p.map_or("-".into(), |p| p.to_string()),
                c.n.map_or("-".into(), |n| n.to_string()),
                c.weight.as_ref().map_or("-".into(), |w| format!("{w:?}")),
                c.case,
                c.witness.as_deref().unwrap_or("")
            );
        }
        out
    }
}
