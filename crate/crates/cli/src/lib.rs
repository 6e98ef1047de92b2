//! Experiment harness behind the `wwm` binary: state strings,
//! commands that produce [`ExperimentReport`]s, and their renderings.

pub mod check;
pub mod commands;
pub mod report;
pub mod state;

use thiserror::Error;

pub use check::{cmd_check, DEFAULT_SEED};
pub use commands::{cmd_blowtorch, cmd_evolve, cmd_families, cmd_measure, cmd_regions, FamiliesSource};
pub use report::{render_table, ExperimentReport, Verdict};
pub use state::StateSpec;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }
}
