//! The JSON code file:
//! `{ "q": 2, "k": 3, "n": 7, "generator": [[...], ...], "repair_sets": [[1,2,3], ...] }`
//! with 1-based repair-set coordinates; `repair_sets` is optional.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::coords::CoordSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub generator: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repair_sets: Option<Vec<Vec<usize>>>,
}

/// A code read from a file, with anything suspicious noted.
#[derive(Clone, Debug)]
pub struct LoadedCode {
    pub code: LinearCode,
    pub declared_k: usize,
    pub repair_sets: Vec<CoordSet>,
    pub warnings: Vec<String>,
}

impl CodeFile {
    pub fn from_code(code: &LinearCode, repair_sets: &[CoordSet]) -> Self {
        CodeFile {
            q: code.q(),
            k: code.k(),
            n: code.n(),
            generator: code.generator_u32(),
            repair_sets: (!repair_sets.is_empty())
                .then(|| repair_sets.iter().map(|s| s.to_one_based()).collect()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn load(self) -> Result<LoadedCode> {
        if self.generator.len() != self.k {
            return Err(Error::InvalidGenerator(format!(
                "field \"k\" is {} but \"generator\" has {} rows",
                self.k,
                self.generator.len()
            )));
        }
        if let Some((i, row)) = self.generator.iter().enumerate().find(|(_, r)| r.len() != self.n) {
            return Err(Error::InvalidGenerator(format!(
                "field \"n\" is {} but generator row {} has {} entries",
                self.n,
                i + 1,
                row.len()
            )));
        }
        let code = LinearCode::from_u32_rows(self.q, &self.generator)?;
        let mut warnings = Vec::new();
        if code.k() < self.k {
            warnings.push(format!(
                "generator has rank {} < declared k = {}; analysing the {}-dimensional code it spans",
                code.k(),
                self.k,
                code.k()
            ));
        }
        let repair_sets = self
            .repair_sets
            .unwrap_or_default()
            .iter()
            .map(|s| CoordSet::from_one_based(s, self.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(LoadedCode { code, declared_k: self.k, repair_sets, warnings })
    }
}

pub fn read_code_file(path: &Path) -> Result<LoadedCode> {
    let text = std::fs::read_to_string(path)?;
    CodeFile::parse(&text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let code = LinearCode::from_u32_rows(3, &[vec![1, 0, 2], vec![0, 1, 1]]).unwrap();
        let sets = vec![CoordSet::from_indices([0, 2])];
        let file = CodeFile::from_code(&code, &sets);
        let back = CodeFile::parse(&file.to_json()).unwrap().load().unwrap();
        assert_eq!(back.code.generator_u32(), code.generator_u32());
        assert_eq!(back.repair_sets, sets);
        assert!(back.warnings.is_empty());
        assert!(file.to_json().contains("\"repair_sets\""));
    }

    #[test]
    fn rank_deficiency_is_a_warning() {
        let text = r#"{"q":2,"k":2,"n":3,"generator":[[1,1,0],[1,1,0]]}"#;
        let loaded = CodeFile::parse(text).unwrap().load().unwrap();
        assert_eq!(loaded.code.k(), 1);
        assert_eq!(loaded.declared_k, 2);
        assert_eq!(loaded.warnings.len(), 1);
    }

    #[test]
    fn malformed_input_names_the_problem() {
        let err = CodeFile::parse(r#"{"q":2,"k":1,"generator":[[1]]}"#).unwrap_err();
        assert!(err.to_string().contains("missing field `n`"), "{err}");
        let err = CodeFile::parse(r#"{"q":2,"k":1,"n":2,"generator":[[1,0]],"extra":1}"#).unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
        let err = CodeFile::parse(r#"{"q":2,"k":1,"n":3,"generator":[[1,0]]}"#).unwrap().load().unwrap_err();
        assert!(err.to_string().contains("row 1"), "{err}");
        let err = CodeFile::parse(r#"{"q":2,"k":1,"n":2,"generator":[[1,0]],"repair_sets":[[0,1]]}"#)
            .unwrap()
            .load()
            .unwrap_err();
        assert!(matches!(err, Error::CoordinateOutOfRange { .. }), "{err}");
        let err = CodeFile::parse(r#"{"q":2,"k":1,"n":2,"generator":[[2,0]]}"#).unwrap().load().unwrap_err();
        assert!(matches!(err, Error::ElementOutOfRange { .. }), "{err}");
    }
}
