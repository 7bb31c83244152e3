use std::fs;

use celltower_core::{AlgebraParams, ValidatedParams};
use serde::Deserialize;

use crate::cli::GlobalArgs;
use crate::error::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    r: Option<u32>,
    p: Option<u32>,
    n: Option<u32>,
    e: Option<u32>,
    charges: Option<Vec<i64>>,
}

/// Parameters from `--config`, with inline flags taking precedence.
pub fn load(args: &GlobalArgs) -> Result<ValidatedParams, CliError> {
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::ConfigUnreadable {
                path: path.clone(),
                source,
            })?;
            serde_json::from_str(&text).map_err(|source| CliError::ConfigInvalid {
                path: path.clone(),
                source,
            })?
        }
        None => ConfigFile::default(),
    };
    let raw = AlgebraParams {
        r: args.r.or(file.r).ok_or(CliError::MissingParameter("r"))?,
        p: args.p.or(file.p).ok_or(CliError::MissingParameter("p"))?,
        n: args.n.or(file.n).ok_or(CliError::MissingParameter("n"))?,
        e: args.e.or(file.e).unwrap_or(0),
        charges: args
            .charges
            .clone()
            .or(file.charges)
            .ok_or(CliError::MissingParameter("charges"))?,
    };
    Ok(raw.validate()?)
}
