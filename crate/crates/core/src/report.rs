use serde::{Deserialize, Serialize};

use crate::exactlin::{Rational, SparseVec};

/// Outcome of one machine check. A failing check carries a witness vector
/// in the coordinates of the ambient space the check lives in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(usize, Rational)>>,
}

impl CheckReport {
    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: true,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(name: &str, detail: impl Into<String>, witness: &SparseVec) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: false,
            detail: detail.into(),
            witness: Some(witness.entries().to_vec()),
        }
    }

    /// A failure with no single witness vector.
    pub fn fail_plain(name: &str, detail: impl Into<String>) -> Self {
        CheckReport {
            name: name.to_string(),
            passed: false,
            detail: detail.into(),
            witness: None,
        }
    }
}
