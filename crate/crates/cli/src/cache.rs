use std::fs;
use std::path::{Path, PathBuf};

use cubesym_core::io::family_params;
use cubesym_core::FamilySpec;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::param::ParamOutput;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Record {
    pub tool_version: String,
    pub output: ParamOutput,
}

/// One JSON file per (family, parameters, parameter name).
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn key(spec: &FamilySpec, parameter: &str) -> String {
        let (kind, params) = family_params(spec);
        let mut key = kind;
        for (name, value) in &params {
            key.push_str(&format!("-{name}{value}"));
        }
        format!("{key}-{parameter}")
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The stored record, unless missing, unreadable or from another version.
    pub fn get(&self, key: &str) -> Option<Record> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let record: Record = serde_json::from_str(&text).ok()?;
        (record.tool_version == TOOL_VERSION).then_some(record)
    }

    pub fn put(&self, key: &str, output: &ParamOutput) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(CliError::io(&self.dir))?;
        let record = Record { tool_version: TOOL_VERSION.into(), output: output.clone() };
        let path = self.path(key);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&record)?).map_err(CliError::io(&tmp))?;
        fs::rename(&tmp, &path).map_err(CliError::io(&path))
    }

    /// Current-version records, sorted by key.
    pub fn records(&self) -> Result<Vec<Record>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut paths: Vec<PathBuf> = fs::read_dir(&self.dir)
            .map_err(CliError::io(&self.dir))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        Ok(paths.iter().filter_map(|p| self.get(stem(p)?)).collect())
    }
}

fn stem(p: &Path) -> Option<&str> {
    p.file_stem()?.to_str()
}
