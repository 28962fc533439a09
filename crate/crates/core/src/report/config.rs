use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::ReportError;
use crate::degeneration::{build_configuration, TestConfiguration};
use crate::polyring::parse_polynomial;

/// Optional per-document limits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Caps {
    pub lmax: Option<usize>,
    pub kmax: Option<usize>,
    pub check_cap: Option<usize>,
}

/// Input document for `analyze` and `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub coordinates: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(rename = "W")]
    pub w: Vec<String>,
    pub weights: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
}

pub const DEFAULT_LMAX: usize = 12;
pub const DEFAULT_CHECK_CAP: usize = 12;

/// Names of the built-in examples.
pub const EXAMPLES: &[&str] = &["lixu-cubic", "conic-double-line"];

/// Source text of a built-in example.
pub fn fixture_source(name: &str) -> Option<&'static str> {
    match name {
        "lixu-cubic" => Some(include_str!("../../fixtures/lixu-cubic.json")),
        "conic-double-line" => Some(include_str!("../../fixtures/conic-double-line.json")),
        _ => None,
    }
}

pub fn fixture(name: &str) -> Result<ConfigDocument, ReportError> {
    let src = fixture_source(name)
        .ok_or_else(|| ReportError::UnknownExample { name: name.to_string(), available: EXAMPLES.join(", ") })?;
    parse_config(src)
}

pub fn load_config(path: &Path) -> Result<ConfigDocument, ReportError> {
    let bytes = std::fs::read(path)
        .map_err(|e| ReportError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let text = String::from_utf8(bytes)
        .map_err(|_| ReportError::Validation(format!("{} is not valid UTF-8", path.display())))?;
    parse_config(&text)
}

/// Parses and validates a document.
pub fn parse_config(text: &str) -> Result<ConfigDocument, ReportError> {
    let doc: ConfigDocument = serde_json::from_str(text).map_err(|e| ReportError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.validate()?;
    Ok(doc)
}

impl ConfigDocument {
    pub fn validate(&self) -> Result<(), ReportError> {
        let v = |m: String| Err(ReportError::Validation(m));
        let mut seen = BTreeSet::new();
        for c in &self.coordinates {
            if !seen.insert(c.as_str()) {
                return v(format!("duplicate coordinate '{c}'"));
            }
        }
        if self.coordinates.is_empty() {
            return v("no coordinates".into());
        }
        if self.ideal.is_empty() {
            return v("ideal has no generators".into());
        }
        let in_w: BTreeSet<&str> = self.w.iter().map(String::as_str).collect();
        for c in &self.w {
            if !seen.contains(c.as_str()) {
                return v(format!("unknown coordinate '{c}' in W"));
            }
        }
        for (c, &x) in &self.weights {
            if !seen.contains(c.as_str()) {
                return v(format!("unknown coordinate '{c}' in weights"));
            }
            if in_w.contains(c.as_str()) {
                if x != 0 {
                    return v(format!("coordinate '{c}' is in W and must have weight 0, got {x}"));
                }
            } else if x <= 0 {
                return v(format!("weight of '{c}' must be a positive integer, got {x}"));
            }
        }
        for c in &self.coordinates {
            if !in_w.contains(c.as_str()) && !self.weights.contains_key(c) {
                return v(format!("coordinate '{c}' is not in W and has no weight"));
            }
        }
        if let Some(caps) = &self.caps {
            if caps.lmax == Some(0) {
                return v("caps.lmax must be at least 1".into());
            }
            if caps.check_cap.is_some_and(|c| c < 2) {
                return v("caps.check_cap must be at least 2".into());
            }
        }
        Ok(())
    }

    pub fn lmax(&self) -> usize {
        self.caps.as_ref().and_then(|c| c.lmax).unwrap_or(DEFAULT_LMAX)
    }

    pub fn kmax(&self) -> Option<usize> {
        self.caps.as_ref().and_then(|c| c.kmax)
    }

    pub fn check_cap(&self) -> usize {
        self.caps.as_ref().and_then(|c| c.check_cap).unwrap_or(DEFAULT_CHECK_CAP)
    }

    /// Parses the generators and builds the test configuration.
    pub fn build(&self) -> Result<TestConfiguration, ReportError> {
        let gens = self
            .ideal
            .iter()
            .enumerate()
            .map(|(i, g)| {
                parse_polynomial(g, &self.coordinates).map_err(|e| ReportError::Validation(format!("ideal[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let weights: Vec<(String, u64)> = self.weights.iter().map(|(c, &x)| (c.clone(), x.max(0) as u64)).collect();
        build_configuration(&self.coordinates, gens, &self.w, &weights, self.dimension).map_err(ReportError::from)
    }
}
