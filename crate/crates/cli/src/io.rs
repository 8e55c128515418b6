//! JSON input and output, and the error type mapped to exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use braidmon::{BraidWord, Error};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => e.exit_code(),
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Write `text` to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.into(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A braid given either as `{"strands": d, "letters": [...]}` or in text notation.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum BraidSpec {
    Word(BraidWord),
    Text(String),
}

impl BraidSpec {
    pub fn resolve(&self, strands: usize) -> CliResult<BraidWord> {
        match self {
            BraidSpec::Word(w) if w.strands() == strands => Ok(w.clone()),
            BraidSpec::Word(w) => {
                Err(Error::StrandMismatch { left: w.strands(), right: strands }.into())
            }
            BraidSpec::Text(t) => Ok(BraidWord::parse(strands, t)?),
        }
    }
}
