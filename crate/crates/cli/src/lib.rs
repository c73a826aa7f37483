//! Library side of the `maxsurf` command-line tool: curve specs, coefficient
//! files, reports, meshes and the subcommands themselves.

pub mod coeffs;
pub mod commands;
pub mod config;
pub mod mesh;
pub mod report;
pub mod spec;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const FAILURE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const NO_ROOT: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("{0}")]
    Failure(String),

    #[error(transparent)]
    Core(#[from] maxsurf_core::Error),

    #[error("no admissible r0 in ({lo}, {hi})")]
    NoRoot { lo: f64, hi: f64 },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => exit::PARSE,
            CliError::Failure(_) | CliError::Core(_) => exit::FAILURE,
            CliError::NoRoot { .. } => exit::NO_ROOT,
            CliError::Io { .. } => exit::IO,
        }
    }

    pub(crate) fn parse(path: impl AsRef<std::path::Path>, message: impl ToString) -> Self {
        CliError::Parse {
            path: path.as_ref().display().to_string(),
            message: message.to_string(),
        }
    }
}

pub(crate) fn read(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub(crate) fn write(path: &std::path::Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
