//! IO, file formats and the `epsmult` command line on top of `epsmult-core`.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod format;
pub mod parse;
pub mod report;

pub use commands::{run, Command, Format, Outcome, RunConfig};
pub use error::{CliError, ExitStatus};
