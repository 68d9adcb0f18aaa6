//! Command-line front end: algebra files, subcommands and JSON reports.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{parse_shifts, run, AlgebraSource, Command, Job, Output};
pub use error::CliError;
pub use format::{emit_algebra, parse_algebra, FileError};
