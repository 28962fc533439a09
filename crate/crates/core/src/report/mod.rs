//! Input documents, the analysis driver and report rendering.
//!
//! Exit codes: 0 success, 2 invalid input, 3 computation aborted.

pub mod cli;
mod config;
mod render;

use thiserror::Error;

pub use config::{
    fixture, fixture_source, load_config, parse_config, Caps, ConfigDocument, DEFAULT_CHECK_CAP, DEFAULT_LMAX, EXAMPLES,
};
pub use render::{checks_summary, invariants_summary, render_csv, render_json, report_rows, ReportRow, CSV_HEADER};

use crate::degeneration::{structural_checks, ConfigError, StructuralReport, TestConfiguration};
use crate::groebner::GroebnerError;
use crate::invariants::{analyze_invariants, InvariantError, InvariantReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ABORTED: i32 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed document at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Validation(String),
    #[error("unknown example '{name}'; available: {available}")]
    UnknownExample { name: String, available: String },
    #[error("computation aborted: {0}")]
    Computation(String),
}

impl ReportError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Computation(_) => EXIT_ABORTED,
            _ => EXIT_INVALID,
        }
    }
}

impl From<ConfigError> for ReportError {
    fn from(e: ConfigError) -> Self {
        let aborted = matches!(
            e,
            ConfigError::NotFlat { .. }
                | ConfigError::Exact(_)
                | ConfigError::Groebner(GroebnerError::DegreeCap { .. })
        );
        if aborted {
            ReportError::Computation(e.to_string())
        } else {
            ReportError::Validation(e.to_string())
        }
    }
}

impl From<InvariantError> for ReportError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Config(c) => c.into(),
            InvariantError::ZeroDegree => ReportError::Validation(e.to_string()),
            other => ReportError::Computation(other.to_string()),
        }
    }
}

/// Everything `analyze` reports for one document.
#[derive(Debug)]
pub struct Analysis {
    pub config: TestConfiguration,
    pub checks: StructuralReport,
    pub invariants: InvariantReport,
}

/// Runs the full pipeline. `lmax` and `kmax` override the document caps.
pub fn analyze(doc: &ConfigDocument, lmax: Option<usize>, kmax: Option<usize>) -> Result<Analysis, ReportError> {
    let lmax = lmax.unwrap_or_else(|| doc.lmax());
    if lmax == 0 {
        return Err(ReportError::Validation("lmax must be at least 1".into()));
    }
    let kmax = kmax.or_else(|| doc.kmax());
    let config = doc.build()?;
    let checks = structural_checks(&config, doc.check_cap())?;
    let invariants = analyze_invariants(&config, lmax, kmax)?;
    Ok(Analysis { config, checks, invariants })
}

/// Builds the configuration and runs only the structural checks.
pub fn verify(doc: &ConfigDocument, cap: Option<usize>) -> Result<(TestConfiguration, StructuralReport), ReportError> {
    let cap = cap.unwrap_or_else(|| doc.check_cap());
    if cap < 2 {
        return Err(ReportError::Validation(format!("cap must be at least 2, got {cap}")));
    }
    let config = doc.build()?;
    let checks = structural_checks(&config, cap)?;
    Ok((config, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneration::CheckStatus;
    use crate::exact::{rat, LimitClass};
    use crate::invariants::F1Class;

    #[test]
    fn lixu_cubic_pipeline() {
        let a = analyze(&fixture("lixu-cubic").unwrap(), Some(10), None).unwrap();
        let rows = report_rows(&a);
        assert_eq!(rows.len(), 10);
        for r in &rows {
            assert_eq!(r.s, format!("-{}", r.l));
        }
        assert_eq!(a.invariants.futaki.df1, rat(0));
        assert_eq!(a.invariants.f1, F1Class::Exact(LimitClass::MinusInfinity));
        assert!(invariants_summary(&a).contains("F̄₁ = 0; F₁ = -infinity"));
    }

    #[test]
    fn conic_pipeline() {
        let a = analyze(&fixture("conic-double-line").unwrap(), Some(10), None).unwrap();
        assert_eq!(a.checks.growth.status, CheckStatus::Fail);
        assert!(invariants_summary(&a).contains("F̄₁ = -1/2; F₁ = -infinity"));
    }

    #[test]
    fn error_classes() {
        let src = r#"{"coordinates":["Z0","Z1","Z2"],"ideal":["Z1^2 - Z0"],"W":["Z0","Z2"],"weights":{"Z1":1}}"#;
        let err = analyze(&parse_config(src).unwrap(), None, None).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INVALID);
        assert_eq!(ReportError::Computation("x".into()).exit_code(), EXIT_ABORTED);
        assert_eq!(fixture("nope").unwrap_err().exit_code(), EXIT_INVALID);
    }
}
