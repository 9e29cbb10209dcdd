use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {0}", .0.code())]
    Core(#[from] skeinlab::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("E_USAGE: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
