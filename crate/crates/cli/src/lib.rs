//! File formats and command implementations for the `maxleaf` tool.

pub mod bench;
pub mod format;

use std::path::Path;

use maxleaf_core::Error as CoreError;

pub use format::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("infeasible: {0}")]
    Infeasible(CoreError),
    #[error("internal error: {0}")]
    Internal(CoreError),
}

impl CliError {
    /// 2 malformed input, 3 infeasible instance, 4 internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Unreachable(_) => CliError::Infeasible(e),
            CoreError::InvalidParameter(_)
            | CoreError::TooLarge { .. }
            | CoreError::VertexOutOfRange { .. }
            | CoreError::LoopArc(_)
            | CoreError::Empty => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e),
        }
    }
}

/// Read a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) if p.as_os_str() == "-" => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
    }
}

pub fn load_graph(path: &Path) -> Result<maxleaf_core::RootedDigraph, CliError> {
    let text = read_input(path)?;
    format::parse_graph(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

pub fn load_tree(path: &Path) -> Result<maxleaf_core::Outbranching, CliError> {
    let text = read_input(path)?;
    format::parse_tree(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}
