//! Outcome records for identity checks.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// One evaluated identity instance.
///
/// `holds = false` is a finding, not an error; `witness` then describes the
/// first counterexample. `constants` carries values the check measured
/// rather than asserted (fitted constants, selected conventions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, String>,
}

impl Check {
    pub fn new(identity: impl Into<String>) -> Self {
        Check {
            identity: identity.into(),
            parameters: BTreeMap::new(),
            holds: true,
            witness: None,
            constants: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn constant(mut self, key: &str, value: impl Display) -> Self {
        self.constants.insert(key.to_string(), value.to_string());
        self
    }

    /// Marks the check failed; the first recorded witness wins.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.holds {
            self.witness = Some(witness.into());
        }
        self.holds = false;
    }

    /// Fails with `witness()` unless `ok`.
    pub fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }
}
