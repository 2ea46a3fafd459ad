//! Scenario runner for the `extended-brauer` library: a catalog of small
//! groups, JSON scenario configs, and JSON reports.

pub mod catalog;
pub mod config;
pub mod run;

pub use config::{load_config, Scenario, ScenarioConfig, CHECKS};
pub use run::{run, RunOptions, RunReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}
