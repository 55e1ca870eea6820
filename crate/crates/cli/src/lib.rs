//! File formats and command implementations behind the `pcube` binary.
//!
//! Every command returns a report that renders either as `key=value` lines
//! or as one JSON object. Failures map to exit codes through
//! [`CliError::exit_code`]: 2 for unreadable or malformed input, 3 when the
//! input is well formed but unsuitable (not a partial cube, not a tree),
//! 4 on integer overflow.

pub mod commands;
pub mod format;

use std::path::PathBuf;

use pcube::{Error as CoreError, Witness};
use thiserror::Error;

use crate::format::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },

    #[error("{0}")]
    Usage(String),

    #[error("not a partial cube ({}): {witness}", witness.kind())]
    NotPartialCube { witness: Witness },

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::NotPartialCube { .. } => 3,
            CliError::Core(e) => match e {
                CoreError::Overflow => 4,
                CoreError::EmptyCells
                | CoreError::DisconnectedCells(..)
                | CoreError::CellsEncloseHole(..)
                | CoreError::ClassOutOfRange { .. }
                | CoreError::DuplicateClass { .. }
                | CoreError::MissingClass { .. }
                | CoreError::EmptyGroup { .. } => 2,
                _ => 3,
            },
        }
    }
}

/// Reads a file as text, mapping failures to [`CliError::Io`].
pub fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads and parses a graph or cell file.
pub fn load_input(path: &std::path::Path) -> Result<format::InputFile, CliError> {
    format::InputFile::parse(&read_file(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}
