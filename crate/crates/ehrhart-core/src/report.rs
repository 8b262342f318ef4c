//! Check records and run reports for the end-to-end verification suite,
//! plus serde helpers shared by the JSON surfaces.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub(crate) fn serialize_bigint<S: Serializer>(
    b: &BigInt,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match i128::try_from(b) {
        Ok(v) => serializer.serialize_i128(v),
        Err(_) => serializer.serialize_str(&b.to_string()),
    }
}

/// Where an expected value comes from: the reproduced publication's printed
/// data, an independent derivation frozen into the suite, or elementary
/// arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Published,
    Derived,
    Trivial,
}

/// One expected-vs-actual comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub provenance: Provenance,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl CheckRecord {
    pub fn compare<T: PartialEq + std::fmt::Display>(
        name: impl Into<String>,
        provenance: Provenance,
        expected: T,
        actual: T,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            provenance,
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
            millis: None,
        }
    }

    pub fn boolean(
        name: impl Into<String>,
        provenance: Provenance,
        detail: &str,
        ok: bool,
    ) -> Self {
        CheckRecord {
            name: name.into(),
            provenance,
            expected: "holds".into(),
            actual: if ok {
                "holds".into()
            } else {
                detail.to_string()
            },
            passed: ok,
            millis: None,
        }
    }

    pub fn failure(name: impl Into<String>, provenance: Provenance, message: String) -> Self {
        CheckRecord {
            name: name.into(),
            provenance,
            expected: "no error".into(),
            actual: message,
            passed: false,
            millis: None,
        }
    }
}

/// A named group of checks with a wall-clock time.
#[derive(Clone, Debug, Serialize)]
pub struct CheckGroup {
    pub name: String,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl CheckGroup {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// The full verification run: every expected value carries its provenance,
/// and the exit status of the CLI reflects `all_passed`.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub groups: Vec<CheckGroup>,
    pub total_checks: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_millis: Option<u128>,
}

impl RunReport {
    pub fn from_groups(groups: Vec<CheckGroup>, total_millis: Option<u128>) -> Self {
        let total_checks = groups.iter().map(|g| g.checks.len()).sum();
        let passed = groups.iter().map(|g| g.passed()).sum();
        RunReport {
            failed: total_checks - passed,
            total_checks,
            passed,
            groups,
            total_millis,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// Strip all timing fields for byte-deterministic output.
    pub fn without_timing(mut self) -> Self {
        self.total_millis = None;
        for g in &mut self.groups {
            g.millis = None;
            for c in &mut g.checks {
                c.millis = None;
            }
        }
        self
    }
}
