//! Command-line front end: ring description files, dispatch and JSON reports.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod report;
pub mod ringfile;
pub mod run;

pub use cli::{Cli, Command};
pub use error::{CliError, CliResult};
pub use report::Report;
pub use ringfile::RingFile;
pub use run::{run, run_argv};
