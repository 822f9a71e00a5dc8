//! Claim registry, report emission and object inspection for the `crosscap`
//! command-line tool.

pub mod claims;
pub mod report;
pub mod show;

pub use claims::{find, registry, run_all, Claim, Inputs};
pub use report::{render, ClaimReport, OutputFormat, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] crosscap_core::Error),
}
