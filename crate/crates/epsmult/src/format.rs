//! JSON file formats for ideals and semigroups.

use std::collections::{BTreeMap, BTreeSet};

use epsmult_core::okounkov::Semigroup;
use epsmult_core::{ExponentVector, MonomialIdeal, Result};
use serde::{Deserialize, Serialize};

/// `{"dim": d, "generators": [[e1, ..., ed], ...]}`. Generators need not be
/// minimal on input; [`IdealFile::from_ideal`] always writes the minimal set in
/// lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub dim: usize,
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealFile {
            dim: ideal.dim(),
            generators: ideal.generators().iter().map(|g| g.coords().to_vec()).collect(),
        }
    }

    pub fn into_ideal(self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.dim, self.generators.into_iter().map(ExponentVector::new))
    }
}

/// Either `{"dim": d, "generators": [[n1, ..., nd, i], ...]}` or
/// `{"dim": d, "levels": {"1": [[n1, ..., nd], ...], ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupFile {
    Generators { dim: usize, generators: Vec<Vec<u32>> },
    Levels { dim: usize, levels: BTreeMap<String, Vec<Vec<u32>>> },
}

impl SemigroupFile {
    pub fn into_semigroup(self) -> std::result::Result<Semigroup, String> {
        match self {
            SemigroupFile::Generators { dim, generators } => {
                Semigroup::from_generators(dim, generators).map_err(|e| e.to_string())
            }
            SemigroupFile::Levels { dim, levels } => {
                let mut parsed = BTreeMap::new();
                for (key, points) in levels {
                    let level: u32 = key.trim().parse().map_err(|_| format!("level key {key:?} is not a nonnegative integer"))?;
                    let set: BTreeSet<ExponentVector> = points.into_iter().map(ExponentVector::new).collect();
                    parsed.insert(level, set);
                }
                Semigroup::from_levels(dim, parsed).map_err(|e| e.to_string())
            }
        }
    }
}
