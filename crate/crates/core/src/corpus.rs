//! The golden corpus: named matroids with expected invariant values, shipped
//! as JSON files (`matroids/*.json` + `expected/*.json`, joined by name).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::GPolynomial;
use crate::json::{GPolyJson, JsonError, MatroidJson};
use crate::matroid::Matroid;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: JsonError },
    #[error("{path}: {source}")]
    Parse { path: String, source: serde_json::Error },
    #[error("expected values for `{0}` have no matching matroid file")]
    Dangling(String),
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub matroid: Matroid,
    pub expected_g: Option<GPolynomial>,
    pub expected_beta: Option<u64>,
    pub source: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MatroidFileJson {
    pub name: String,
    pub matroid: MatroidJson,
    pub source: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ExpectedFileJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<GPolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<u64>,
    pub source: String,
}

/// Loads `<dir>/matroids/*.json` and `<dir>/expected/*.json`, joining on the
/// `name` field. Entries come back sorted by name.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries: BTreeMap<String, CorpusEntry> = BTreeMap::new();
    for path in json_files(&dir.join("matroids"))? {
        let text = std::fs::read_to_string(&path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: MatroidFileJson = serde_json::from_str(&text).map_err(|source| CorpusError::Parse {
            path: path.display().to_string(),
            source,
        })?;
        let matroid = file.matroid.to_matroid().map_err(|source| CorpusError::Json {
            path: path.display().to_string(),
            source,
        })?;
        entries.insert(
            file.name.clone(),
            CorpusEntry {
                name: file.name,
                matroid,
                expected_g: None,
                expected_beta: None,
                source: file.source,
            },
        );
    }
    for path in json_files(&dir.join("expected"))? {
        let text = std::fs::read_to_string(&path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: ExpectedFileJson = serde_json::from_str(&text).map_err(|source| CorpusError::Parse {
            path: path.display().to_string(),
            source,
        })?;
        let Some(entry) = entries.get_mut(&file.name) else {
            return Err(CorpusError::Dangling(file.name));
        };
        if let Some(g) = file.g {
            let g = g.to_poly().map_err(|source| CorpusError::Json {
                path: path.display().to_string(),
                source,
            })?;
            entry.expected_g = Some(g);
        }
        entry.expected_beta = file.beta;
    }
    Ok(entries.into_values().collect())
}

fn json_files(dir: &Path) -> Result<Vec<std::path::PathBuf>, CorpusError> {
    let rd = std::fs::read_dir(dir).map_err(|source| CorpusError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut out: Vec<std::path::PathBuf> = rd
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    out.sort();
    Ok(out)
}
