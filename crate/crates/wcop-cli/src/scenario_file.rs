//! On-disk scenario format: a single JSON document with `labels`, `masses`,
//! `phi`, and `weight` fields. Complex numbers are always two-element
//! `[re, im]` arrays, which keeps the format unambiguous for any consumer.

use serde::Deserialize;
use std::path::Path;
use thiserror::Error;
use wcop::{Complex, Space64, Symbol64};

#[derive(Debug, Error)]
pub enum ScenarioFileError {
    #[error("cannot read scenario {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse scenario {path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("invalid scenario {path}: {source}")]
    Invalid {
        path: String,
        source: wcop::ValidationError,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    /// Optional identifier; defaults to the file stem.
    #[serde(default)]
    pub id: Option<String>,
    pub labels: Vec<String>,
    pub masses: Vec<f64>,
    pub phi: Vec<usize>,
    /// Complex weights as [re, im] pairs.
    pub weight: Vec<[f64; 2]>,
}

impl ScenarioFile {
    pub fn into_symbol(self, path: &Path) -> Result<(String, Symbol64), ScenarioFileError> {
        let wrap = |source: wcop::ValidationError| ScenarioFileError::Invalid {
            path: path.display().to_string(),
            source,
        };
        let space = Space64::new(self.labels, self.masses).map_err(wrap)?;
        let weight = self
            .weight
            .into_iter()
            .map(|[re, im]| Complex::new(re, im))
            .collect();
        let symbol = Symbol64::new(space, self.phi, weight).map_err(wrap)?;
        let id = self.id.unwrap_or_else(|| {
            path.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "scenario".to_string())
        });
        Ok((id, symbol))
    }
}

pub fn load(path: &Path) -> Result<(String, Symbol64), ScenarioFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: ScenarioFile =
        serde_json::from_str(&text).map_err(|source| ScenarioFileError::Parse {
            path: path.display().to_string(),
            source,
        })?;
    file.into_symbol(path)
}
