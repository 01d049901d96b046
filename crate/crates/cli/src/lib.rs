//! Config parsing and command execution for the `polycomp` binary.

pub mod config;
pub mod expr;
pub mod run;

pub use config::{parse_config, Command, Format, InstanceConfig, Options, ParseError};
pub use run::{execute, ExitStatus, Outcome, Record, RunError};
