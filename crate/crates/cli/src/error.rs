use std::path::PathBuf;

use celltower_core::{CellularError, ParamsError};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Params(#[from] ParamsError),

    #[error("missing parameter {0}: give it inline or through --config")]
    MissingParameter(&'static str),

    #[error("cannot read {path}: {source}")]
    ConfigUnreadable {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot parse {path}: {source}")]
    ConfigInvalid {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{0}")]
    InvalidArguments(String),

    #[error("{0}")]
    Cellular(#[from] CellularError),

    #[error("golden file {path} differs from the output")]
    GoldenMismatch { path: PathBuf },

    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0} verification suite(s) failed")]
    VerificationFailed(usize),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Params(e) => e.kind(),
            CliError::MissingParameter(_) => "MissingParameter",
            CliError::ConfigUnreadable { .. } => "ConfigUnreadable",
            CliError::ConfigInvalid { .. } => "ConfigInvalid",
            CliError::InvalidArguments(_) => "InvalidArguments",
            CliError::Cellular(_) => "ShiftConditionViolated",
            CliError::GoldenMismatch { .. } => "GoldenMismatch",
            CliError::Output { .. } => "OutputFailed",
            CliError::VerificationFailed(_) => "VerificationFailed",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::GoldenMismatch { .. }
            | CliError::VerificationFailed(_)
            | CliError::Cellular(_) => 1,
            _ => 2,
        }
    }

    /// One line of JSON for stderr.
    pub fn to_json_line(&self) -> String {
        json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}
