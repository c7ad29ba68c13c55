//! Command-line front end for the comparison-search simulator.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid arguments or
//! exceeded caps, 3 I/O failure.

pub mod commands;
pub mod error;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::{exit_code, CliError};
pub use report::{Format, ReportDocument};
