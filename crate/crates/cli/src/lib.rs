//! Command-line front end: braid parsing, reports in text or JSON, the
//! reference table and the verification suites.

pub mod commands;
pub mod reference;
pub mod verify;

pub use commands::{run, run_args, Cli, Outcome};
