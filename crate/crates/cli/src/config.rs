//! Verification-suite configuration.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Uh,
    Wgen,
    Modules,
    Yangian,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Uh, Suite::Wgen, Suite::Modules, Suite::Yangian];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Uh => "uh",
            Suite::Wgen => "wgen",
            Suite::Modules => "modules",
            Suite::Yangian => "yangian",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A comma-separated list of suite names, or `all`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuiteSelection(pub BTreeSet<Suite>);

impl FromStr for SuiteSelection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim) {
            match part {
                "all" => out.extend(Suite::ALL),
                "uh" => {
                    out.insert(Suite::Uh);
                }
                "wgen" => {
                    out.insert(Suite::Wgen);
                }
                "modules" => {
                    out.insert(Suite::Modules);
                }
                "yangian" => {
                    out.insert(Suite::Yangian);
                }
                other => return Err(format!("unknown suite {other:?}; expected uh, wgen, modules, yangian or all")),
            }
        }
        Ok(SuiteSelection(out))
    }
}

impl fmt::Display for SuiteSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|s| s.name()).collect();
        f.write_str(&names.join(","))
    }
}

impl Default for SuiteSelection {
    fn default() -> Self {
        SuiteSelection(Suite::ALL.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n_max: usize,
    /// Yangian truncation order; `2·n_max + 2` when absent.
    pub order: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub suites: SuiteSelection,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 6,
            order: None,
            seed: 0,
            trials: 20,
            suites: SuiteSelection::default(),
        }
    }
}

impl SuiteConfig {
    pub fn order(&self) -> usize {
        self.order.unwrap_or(2 * self.n_max + 2)
    }

    pub fn runs(&self, suite: Suite) -> bool {
        self.suites.0.contains(&suite)
    }
}
