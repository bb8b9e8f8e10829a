//! Command-line harness for `gyro-core`: run configuration, Cayley table
//! files, canonical JSON reports and the suite dispatcher behind the `gyro`
//! binary.

pub mod cli;
pub mod config;
pub mod error;
pub mod json;
pub mod report_io;
pub mod suites;
pub mod table_io;

pub use config::{Carrier, ChainSpec, ModelSpec, RunConfig, Suite};
pub use error::CliError;
pub use suites::{run_suite, SuiteOutput};
