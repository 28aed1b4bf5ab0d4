//! Error type shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can stop an analysis run.
///
/// Parse-level trouble is deliberately *not* here: tolerant scanning records
/// it as [`crate::ParseDiagnostic`] values and keeps going. Only strict mode
/// promotes accumulated parse errors into [`Error::StrictParse`].
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("file {path} appears more than once in the input set")]
    DuplicateFile { path: PathBuf },

    #[error("invalid pattern `{pattern}` at {path}:{line}: {reason}")]
    InvalidPattern {
        pattern: String,
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("manifest {path} contains no patterns")]
    EmptyManifest { path: PathBuf },

    #[error("invalid rule at {path}:{line}: {reason}")]
    InvalidRule {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("invalid threshold `{input}`: {reason}")]
    InvalidThreshold { input: String, reason: String },

    #[error("no source files matched under the given roots")]
    NoSourceFiles,

    #[error("{0}")]
    InvalidConfig(String),

    #[error("strict mode: {count} parse error(s); rerun without --strict to tolerate them")]
    StrictParse { count: usize },
}
