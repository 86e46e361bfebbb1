//! Check records and the report emitted by `verify`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wq_core::Check;

use crate::config::SuiteConfig;

pub const SCHEMA: &str = "wq/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub derived_constants: BTreeMap<String, String>,
    pub elapsed_ms: u64,
}

impl Record {
    pub fn from_check(suite: &str, check: Check, elapsed_ms: u64) -> Self {
        Record {
            suite: suite.to_string(),
            identity: check.identity,
            parameters: check.parameters,
            holds: check.holds,
            witness: check.witness,
            derived_constants: check.constants,
            elapsed_ms,
        }
    }

    fn key(&self) -> (&str, &str, &BTreeMap<String, String>) {
        (&self.suite, &self.identity, &self.parameters)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub version: String,
    pub config: SuiteConfig,
    pub records: Vec<Record>,
    pub verdict: Verdict,
}

impl Report {
    /// Sorts records by `(suite, identity, parameters)`; the verdict is
    /// `pass` iff every record holds.
    pub fn new(config: SuiteConfig, mut records: Vec<Record>) -> Self {
        records.sort_by(|a, b| a.key().cmp(&b.key()));
        let verdict = if records.iter().all(|r| r.holds) { Verdict::Pass } else { Verdict::Fail };
        Report {
            schema: SCHEMA.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            records,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.holds)
    }

    /// Values of `key` among the derived constants of `identity` records.
    pub fn constants(&self, identity: &str, key: &str) -> Vec<&str> {
        self.records
            .iter()
            .filter(|r| r.identity == identity)
            .filter_map(|r| r.derived_constants.get(key).map(String::as_str))
            .collect()
    }

    /// The report with every `elapsed_ms` zeroed, for reproducibility checks.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        for r in &mut out.records {
            r.elapsed_ms = 0;
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut per_identity: BTreeMap<(&str, &str), (usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let e = per_identity.entry((&r.suite, &r.identity)).or_default();
            e.0 += 1;
            if r.holds {
                e.1 += 1;
            }
        }
        for ((suite, identity), (total, ok)) in &per_identity {
            let mark = if ok == total { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {suite}/{identity}: {ok}/{total}\n"));
        }
        for r in self.failures() {
            let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "  failed {}/{} [{}]: {}\n",
                r.suite,
                r.identity,
                params.join(" "),
                r.witness.as_deref().unwrap_or("")
            ));
        }
        let mut constants: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for r in &self.records {
            for (k, v) in &r.derived_constants {
                let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                constants
                    .entry(format!("{}.{k}", r.identity))
                    .or_default()
                    .push(format!("{}: {v}", params.join(" ")));
            }
        }
        for (k, vs) in constants {
            out.push_str(&format!("{k}\n"));
            for v in vs {
                out.push_str(&format!("  {v}\n"));
            }
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        out.push_str(&format!("{} records, verdict: {verdict}\n", self.records.len()));
        out
    }
}
