use std::path::Path;

use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Group input file:
/// `{"type":"permutation","degree":n,"generators":[[[1,2]],[[1,2,3]]]}` with
/// generators as lists of cycles on the points `1..=n`, or
/// `{"type":"cayley","table":[[...],...]}` with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Permutation {
        degree: usize,
        generators: Vec<Vec<Vec<usize>>>,
    },
    Cayley {
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("group file: {e}")))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                FiniteGroup::from_cycles(*degree, generators)
            }
            GroupSpec::Cayley { table } => FiniteGroup::from_cayley_table(table),
        }
    }
}
