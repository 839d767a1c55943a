use std::path::Path;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::permcore::Permutation;

const BUNDLED: &str = include_str!("../../data/generators.json");

#[derive(Clone, Debug, Deserialize)]
struct Record {
    name: String,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

/// Generator records for groups that are not built from a formula.
#[derive(Clone, Debug)]
pub struct GeneratorData {
    records: Vec<Record>,
}

impl GeneratorData {
    /// The copy compiled into the library.
    pub fn bundled() -> &'static GeneratorData {
        static DATA: OnceLock<GeneratorData> = OnceLock::new();
        DATA.get_or_init(|| GeneratorData::parse(BUNDLED).expect("bundled data parses"))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let records: Vec<Record> = serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
        Ok(GeneratorData { records })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.iter().map(|r| r.name.as_str())
    }

    /// The generators of record `name`, which must have the given degree.
    pub fn generators(&self, name: &str, degree: usize) -> Result<Vec<Permutation>> {
        let rec = self
            .records
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| Error::Data(format!("no record named {name}")))?;
        if rec.degree != degree {
            return Err(Error::Data(format!(
                "{name}: degree {} in file, expected {degree}",
                rec.degree
            )));
        }
        rec.generators
            .iter()
            .map(|imgs| {
                if imgs.len() != degree {
                    return Err(Error::Data(format!("{name}: generator of wrong length")));
                }
                Permutation::from_images(imgs)
            })
            .collect()
    }
}
