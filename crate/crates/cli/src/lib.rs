//! File formats, reports and the command surface of the `tauslice` tool.

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;

use std::path::PathBuf;

pub use commands::{run, Cli, Output};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] tauslice::Error),
    #[error("{0}")]
    Usage(String),
}

/// Parses `argv` and runs it; errors become exit code 2 with the message on
/// the text channel.
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli).unwrap_or_else(|e| Output { text: format!("error: {e}\n"), code: 2 }),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Output { text: e.to_string(), code }
        }
    }
}
