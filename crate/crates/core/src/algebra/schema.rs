//! The JSON triple description format.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactlin::{Rational, RationalMatrix};

use super::{FiniteDimAlgebra, Triple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<Rational>,
    pub mult: Vec<Vec<Vec<Rational>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleFile {
    #[serde(rename = "A")]
    pub a: AlgebraFile,
    #[serde(rename = "B")]
    pub b: AlgebraFile,
    pub epsilon: Vec<Vec<Rational>>,
}

impl AlgebraFile {
    fn into_algebra(self, field: &str) -> Result<FiniteDimAlgebra, Error> {
        if self.labels.len() != self.dim {
            return Err(Error::Malformed(format!(
                "{field}.labels has {} entries, expected dim = {}",
                self.labels.len(),
                self.dim
            )));
        }
        FiniteDimAlgebra::new(self.labels, self.unit, self.mult)
            .map_err(|e| Error::Malformed(format!("{field}: {e}")))
    }

    fn from_algebra(a: &FiniteDimAlgebra) -> Self {
        AlgebraFile {
            dim: a.dim(),
            labels: a.labels().to_vec(),
            unit: a.unit_dense(),
            mult: a.structure_constants().to_vec(),
        }
    }
}

impl TripleFile {
    pub fn into_triple(self) -> Result<Triple, Error> {
        let a = self.a.into_algebra("A")?;
        let b = self.b.into_algebra("B")?;
        if self.epsilon.len() != a.dim() {
            return Err(Error::Malformed(format!(
                "epsilon has {} rows, expected A.dim = {}",
                self.epsilon.len(),
                a.dim()
            )));
        }
        if let Some((r, row)) = self.epsilon.iter().enumerate().find(|(_, r)| r.len() != b.dim()) {
            return Err(Error::Malformed(format!(
                "epsilon[{r}] has {} entries, expected B.dim = {}",
                row.len(),
                b.dim()
            )));
        }
        let eps = RationalMatrix::from_dense(b.dim(), &self.epsilon)?;
        Triple::new(a, b, eps)
    }

    pub fn from_triple(t: &Triple) -> Self {
        TripleFile {
            a: AlgebraFile::from_algebra(t.a()),
            b: AlgebraFile::from_algebra(t.b()),
            epsilon: t.epsilon().matrix().to_dense(),
        }
    }
}

/// Parses a triple description; errors carry serde's line/column or the
/// offending field.
pub fn parse_triple(json: &str) -> Result<Triple, Error> {
    let file: TripleFile = serde_json::from_str(json)?;
    file.into_triple()
}

pub fn render_triple(t: &Triple) -> String {
    serde_json::to_string_pretty(&TripleFile::from_triple(t)).expect("plain data serializes")
}
